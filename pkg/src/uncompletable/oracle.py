"""Brute-force ground truth, independent of the automaton code path.

:func:`cover_oracle` decides membership in ``Fact(S*)`` by aligning words of
``S`` against ``w`` directly; :func:`naive_oracle` is a dumber cross-check
that enumerates concatenations.  Neither touches the trie automaton, so the
search module can be validated against them without sharing a bug.

Why ``m_max = |w| + 2`` concatenated words always suffice for the naive
oracle: if ``w`` occurs in ``s_1 ... s_m``, keep only the words that overlap
the occurrence.  Each of them covers at least one position of ``w`` because
words of ``S`` are nonempty, so at most ``|w|`` words remain, and their
concatenation still contains ``w``.
"""

from __future__ import annotations

import itertools
import random
import string
import time
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidInputError, ResourceLimitError
from .search import DEFAULT_LIMITS, Limits, SearchResult, SearchStats, Status, uwl
from .words import Alphabet, Word, WordLike, WordSet

ENUMERATION_GUARD = 10**7
EXHAUSTIVE_GUARD = 1 << 16


def cover_oracle(S: WordSet, w: WordLike) -> bool:
    """True iff ``x w y`` lies in ``S*`` for some words ``x`` and ``y``.

    Cut positions ``0..|w|`` are marked reachable when ``w[:t]`` is a suffix
    of a word of ``S`` (the left end of a cover); from a reachable cut, a
    word of ``S`` matching ``w`` there advances the cut, and a word of ``S``
    that has the rest of ``w`` as a prefix closes the cover.
    """
    w = bytes(S.alphabet.word(w))
    n = len(w)
    if n == 0:
        return True
    words = [bytes(s) for s in S.words]
    reach = [False] * (n + 1)
    for s in words:
        if w in s:
            return True
        for j in range(len(s) + 1):
            y = s[j:]
            if len(y) <= n and w.startswith(y):
                reach[len(y)] = True
    for t in range(n):
        if not reach[t]:
            continue
        rest = w[t:]
        for s in words:
            if len(s) <= len(rest):
                if rest.startswith(s):
                    reach[t + len(s)] = True
            elif s.startswith(rest):
                return True
    return reach[n]


def naive_oracle(S: WordSet, w: WordLike, m_max: int) -> bool:
    """True iff ``w`` is a factor of a product of at most ``m_max`` words of ``S``."""
    if m_max < 1:
        raise InvalidInputError("m_max must be at least 1")
    w = bytes(S.alphabet.word(w))
    words = [bytes(s) for s in S.sorted()]
    total = sum(len(words) ** m for m in range(m_max + 1))
    if total > ENUMERATION_GUARD:
        raise ResourceLimitError(
            f"{total} concatenations exceed the enumeration guard of {ENUMERATION_GUARD}"
        )
    for m in range(m_max + 1):
        for combo in itertools.product(words, repeat=m):
            if w in b"".join(combo):
                return True
    return False


def uwl_bruteforce(S: WordSet, L_max: int) -> SearchResult:
    """First word in length-then-lex order rejected by :func:`cover_oracle`.

    When no word up to ``L_max`` is uncompletable the status is
    ``COMPLETE_UP_TO``: brute force cannot certify completeness.
    """
    sigma = S.alphabet.sigma
    total = sum(sigma**L for L in range(1, L_max + 1))
    if total > ENUMERATION_GUARD:
        raise ResourceLimitError(
            f"{total} words exceed the enumeration guard of {ENUMERATION_GUARD}"
        )
    t0 = time.perf_counter()
    checked = 0
    for L in range(1, L_max + 1):
        for word in S.alphabet.all_words(L):
            checked += 1
            if not cover_oracle(S, word):
                stats = SearchStats(subset_states=checked, depth=L,
                                    elapsed_s=time.perf_counter() - t0)
                return SearchResult(Status.UNCOMPLETABLE, L, word, S.alphabet, stats)
    stats = SearchStats(subset_states=checked, depth=L_max,
                        elapsed_s=time.perf_counter() - t0)
    return SearchResult(Status.COMPLETE_UP_TO, 0, None, S.alphabet, stats, horizon=L_max)


@dataclass
class UWLMaxResult:
    """Maximum of uwl over subsets of ``Σ^{<=k}``.

    ``exact`` is False for sampling runs, where ``value`` is only a lower
    bound.
    """

    k: int
    sigma: int
    value: int
    argmax: list[WordSet]
    exact: bool
    evaluated: int
    elapsed_s: float = 0.0
    histogram: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "sigma": self.sigma,
            "value": self.value,
            "exact": self.exact,
            "evaluated": self.evaluated,
            "elapsed_s": self.elapsed_s,
            "histogram": {str(d): c for d, c in sorted(self.histogram.items())},
            "argmax": [sorted(S.strings()) for S in self.argmax],
        }


def _universe(k: int, alphabet: Alphabet) -> list[Word]:
    return [w for L in range(1, k + 1) for w in alphabet.all_words(L)]


def _set_key(S: WordSet) -> list[Word]:
    return sorted(S.words)


def uwl_max_exhaustive(
    k: int,
    sigma: int,
    limits: Limits = DEFAULT_LIMITS,
    samples: Optional[int] = None,
    seed: int = 0,
) -> UWLMaxResult:
    """``UWL(k, sigma)``: the largest ``uwl(S)`` over all ``S`` in ``Σ^{<=k}``.

    With ``samples`` set, evaluates that many uniformly random subsets
    instead and returns a lower bound (``exact=False``).  The empty set is
    included in the exhaustive run (its uwl is 1).
    """
    if k < 1 or sigma < 1:
        raise InvalidInputError("k and sigma must be positive")
    if sigma > 26:
        raise InvalidInputError("sigma above 26 is not supported here")
    alphabet = Alphabet(string.ascii_lowercase[:sigma])
    universe = _universe(k, alphabet)
    t0 = time.perf_counter()

    if samples is None:
        if 2 ** len(universe) > EXHAUSTIVE_GUARD:
            raise InvalidInputError(
                f"2^{len(universe)} subsets is too many to enumerate; "
                "pass samples=N for a sampled lower bound"
            )
        masks = range(2 ** len(universe))
    else:
        rng = random.Random(seed)
        masks = [rng.getrandbits(len(universe)) for _ in range(samples)]

    best, argmax, hist = -1, [], {}
    seen_masks = set()
    for mask in masks:
        if mask in seen_masks:
            continue
        seen_masks.add(mask)
        S = WordSet(alphabet, frozenset(w for i, w in enumerate(universe) if mask >> i & 1))
        value = uwl(S, limits)
        hist[value] = hist.get(value, 0) + 1
        if value > best:
            best, argmax = value, [S]
        elif value == best:
            argmax.append(S)
    argmax.sort(key=_set_key)
    return UWLMaxResult(
        k, sigma, best, argmax, exact=samples is None, evaluated=len(seen_masks),
        elapsed_s=time.perf_counter() - t0, histogram=hist,
    )
