"""Alphabets, words, finite word sets, borders, and the concrete set families.

Words are stored as tuples of symbol indices into an :class:`Alphabet`, so the
same machinery works for any alphabet of up to 255 symbols.  Every public
function that takes a word also accepts its rendered string form when an
alphabet is available to parse it.

The generators at the bottom materialize the binary families used as
benchmarks (``Σ^k \\ {u}``, ``S_4``, ``S_k``, ``S'_k`` and the five-letter
variant with a long gap) together with the closed-form uncompletable words
known for them.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import InvalidInputError

Word = tuple[int, ...]
WordLike = Union[str, Sequence[int]]

MAX_SIGMA = 255


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of single-character symbols.

    The declaration order fixes the lexicographic order used for every
    tie-break in the package.
    """

    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise InvalidInputError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidInputError(f"alphabet symbols are not distinct: {self.symbols!r}")
        if len(self.symbols) > MAX_SIGMA:
            raise InvalidInputError(f"alphabet larger than {MAX_SIGMA} symbols")
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.symbols)})

    @classmethod
    def from_words(cls, words: Iterable[str]) -> Alphabet:
        """Alphabet of the characters occurring in ``words``, ascending."""
        chars = sorted({c for w in words for c in w})
        return cls("".join(chars))

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise InvalidInputError(
                f"symbol {symbol!r} is not in alphabet {self.symbols!r}"
            ) from None

    def parse(self, text: str) -> Word:
        return tuple(self.index(c) for c in text)

    def render(self, word: Sequence[int]) -> str:
        return "".join(self.symbols[i] for i in word)

    def word(self, w: WordLike) -> Word:
        """Coerce a string or index sequence into a validated :data:`Word`."""
        if isinstance(w, str):
            return self.parse(w)
        word = tuple(int(i) for i in w)
        for i in word:
            if not 0 <= i < self.sigma:
                raise InvalidInputError(
                    f"symbol index {i} out of range for alphabet {self.symbols!r}"
                )
        return word

    def all_words(self, length: int) -> Iterable[Word]:
        """All words of the given length, in lexicographic order."""
        return itertools.product(range(self.sigma), repeat=length)


BINARY = Alphabet("ab")


@dataclass(frozen=True)
class WordSet:
    """A finite set ``S`` of nonempty words over an alphabet.

    Duplicates are merged.  The empty word contributes nothing to ``S*`` and
    is dropped; ``dropped_empty`` records that it was present in the input.
    """

    alphabet: Alphabet
    words: frozenset[Word]
    dropped_empty: bool = field(default=False, compare=False)

    @classmethod
    def of(
        cls,
        words: Iterable[WordLike],
        alphabet: Union[Alphabet, str, None] = None,
    ) -> WordSet:
        words = list(words)
        if alphabet is None:
            if not all(isinstance(w, str) for w in words):
                raise InvalidInputError("an alphabet is required for index-sequence words")
            alphabet = Alphabet.from_words(words) if any(words) else BINARY
        elif isinstance(alphabet, str):
            alphabet = Alphabet(alphabet)
        parsed = {alphabet.word(w) for w in words}
        dropped = () in parsed
        if dropped:
            warnings.warn("empty word dropped from word set", stacklevel=2)
            parsed.discard(())
        return cls(alphabet, frozenset(parsed), dropped)

    @property
    def k(self) -> int:
        """Maximal word length, 0 for the empty set."""
        return max(map(len, self.words), default=0)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, w: object) -> bool:
        if isinstance(w, str):
            try:
                w = self.alphabet.parse(w)
            except InvalidInputError:
                return False
        return tuple(w) in self.words

    def sorted(self) -> list[Word]:
        """Words by length, then lexicographically."""
        return sorted(self.words, key=lambda w: (len(w), w))

    def strings(self) -> list[str]:
        return [self.alphabet.render(w) for w in self.sorted()]

    def word(self, w: WordLike) -> Word:
        return self.alphabet.word(w)

    def union(self, other: Union[WordSet, Iterable[WordLike]]) -> WordSet:
        if isinstance(other, WordSet):
            if other.alphabet != self.alphabet:
                raise InvalidInputError("cannot unite word sets over different alphabets")
            extra = other.words
        else:
            extra = {self.alphabet.word(w) for w in other} - {()}
        return WordSet(self.alphabet, self.words | frozenset(extra), self.dropped_empty)

    def __or__(self, other):
        return self.union(other)

    def __repr__(self) -> str:
        shown = " ".join(self.strings()[:8])
        more = " ..." if len(self) > 8 else ""
        return f"WordSet({self.alphabet.symbols!r}, k={self.k}, n={len(self)}: {shown}{more})"


# -- borders -----------------------------------------------------------------


def borders(w: Sequence) -> list[int]:
    """Lengths of the proper nonempty borders of ``w``, ascending.

    Computed from the KMP failure function; the chain of failure values from
    the full length down lists every border.
    """
    n = len(w)
    if n == 0:
        raise InvalidInputError("borders of the empty word are undefined")
    fail = [0] * n
    j = 0
    for i in range(1, n):
        while j and w[i] != w[j]:
            j = fail[j - 1]
        if w[i] == w[j]:
            j += 1
        fail[i] = j
    out = []
    b = fail[-1]
    while b:
        out.append(b)
        b = fail[b - 1]
    return out[::-1]


def is_unbordered(w: Sequence) -> bool:
    return not borders(w)


def occurs_in(v: Sequence[int], w: Sequence[int]) -> bool:
    """True when ``v`` is a factor (contiguous substring) of ``w``."""
    return bytes(v) in bytes(w)


# -- set families ------------------------------------------------------------


def _b(text: str) -> Word:
    return BINARY.parse(text)


def full_words(k: int, alphabet: Alphabet = BINARY) -> set[Word]:
    return set(alphabet.all_words(k))


def family_full_minus(k: int, u: WordLike, alphabet: Alphabet = BINARY) -> WordSet:
    """``Σ^k`` without the single word ``u``."""
    u = alphabet.word(u)
    if k < 2:
        raise InvalidInputError(f"k must be at least 2, got {k}")
    if len(u) != k:
        raise InvalidInputError(f"|u| = {len(u)} but k = {k}")
    return WordSet(alphabet, frozenset(full_words(k, alphabet) - {u}))


def family_s4() -> WordSet:
    base = full_words(4) - {_b("aabb")}
    extra = {_b(s) for s in ("ab", "ba", "aba", "baa", "bab", "bba")}
    return WordSet(BINARY, frozenset(base | extra))


def _j(k: int) -> set[Word]:
    # union over i = 1..k-3 of  b a^i Σ  and  a^i b
    out = set()
    for i in range(1, k - 2):
        out.add(_b("b" + "a" * i + "a"))
        out.add(_b("b" + "a" * i + "b"))
        out.add(_b("a" * i + "b"))
    return out


def family_sk(k: int) -> WordSet:
    """The binary set ``S_k`` (k >= 5) whose minimal uncompletable words grow as 2k^2."""
    if k < 5:
        raise InvalidInputError(f"S_k is defined for k >= 5, got {k}")
    words = full_words(k) - {_b("a" * (k - 2) + "bb")}
    words |= {_b(x + "b" + "a" * (k - 4) + y) for x in "ab" for y in "ab"}
    words |= {_b(x + "ba") for x in "ab"}
    words |= _j(k)
    return WordSet(BINARY, frozenset(words))


def family_sk_prime(k: int) -> WordSet:
    """``S_k`` plus the word ``bbbb``; defined for k >= 7."""
    if k < 7:
        raise InvalidInputError(f"S'_k is defined for k >= 7, got {k}")
    return family_sk(k).union(["bbbb"])


def family_s5() -> WordSet:
    """The k = 5 set used to exhibit a minimal uncompletable word with a long gap.

    Built directly from its own definition rather than through
    :func:`family_sk`, so the two constructions can be compared.
    """
    sigma = "ab"
    words = {w for w in full_words(5) if w != _b("aaabb")}
    words |= {_b(x + "ba" + y) for x in sigma for y in sigma}
    words |= {_b(x + "ba") for x in sigma}
    for i in (1, 2):
        words |= {_b("b" + "a" * i + y) for y in sigma}
        words.add(_b("a" * i + "b"))
    return WordSet(BINARY, frozenset(words))


# -- closed-form uncompletable words -----------------------------------------


def restivo_witness(u: Sequence[int], a: Sequence[int]) -> Word:
    """``(u a)^(k-1) u`` with ``k = |u|``; length ``k^2 + k - 1``."""
    u, a = tuple(u), tuple(a)
    if len(a) != 1:
        raise InvalidInputError(f"a must be a single symbol, got length {len(a)}")
    k = len(u)
    if k < 2:
        raise InvalidInputError(f"|u| must be at least 2, got {k}")
    return (u + a) * (k - 1) + u


def anchor(k: int) -> Word:
    """``a^(k-2) bb``, the word removed from ``Σ^k`` in the S_k families."""
    return _b("a" * (k - 2) + "bb")


def genrest_witness(k: int) -> Word:
    """Uncompletable word for ``S_k`` of length ``2k^2 - 2k + 1``."""
    if k < 5:
        raise InvalidInputError(f"k must be at least 5, got {k}")
    u = "a" * (k - 2) + "bb"
    w = u + "a" * (k - 1) + u + "b" + "a" * (k - 2)
    w += (u + "bb" + "a" * (k - 3)) * (k - 3)
    w += u
    return _b(w)


def contrex_witness(k: int) -> Word:
    """Uncompletable word for ``S'_k`` of length ``3k^2 - 9k + 1``."""
    if k < 7:
        raise InvalidInputError(f"k must be at least 7, got {k}")
    u = "a" * (k - 2) + "bb"
    w = u + "a" * (k - 1) + u + "b" + "a" * (k - 4)
    w += (u + "ba" + u + "bb" + "a" * (k - 5)) * (k - 6)
    w += u + "ab" + u + "bb" + "a" * (k - 3) + u + "b" + "a" * (k - 3) + u
    return _b(w)


def s4_witness() -> Word:
    return _b("aabb" "aaa" "aabb" "baa" "aabb" "bbb" "aabb")


def s5_witness() -> Word:
    """Minimal uncompletable word for :func:`family_s5` with a gap of length 6."""
    u = "aaabb"
    return _b(u + "aaaa" + u + "baa" + u + "bbabaa" + u + "baa" + u)


# -- word-list files ---------------------------------------------------------


def parse_word_list(text: str) -> WordSet:
    """Parse the word-list format.

    An optional first content line ``@alphabet <symbols>`` fixes the alphabet
    and its order; otherwise the alphabet is the ascending set of characters
    used.  ``#`` starts a comment, blank lines are ignored, and each remaining
    whitespace-separated token is a word.
    """
    alphabet = None
    words: list[str] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            directive, _, rest = line.partition(" ")
            if directive != "@alphabet":
                raise InvalidInputError(f"line {lineno}: unknown directive {directive!r}")
            if seen_content:
                raise InvalidInputError(f"line {lineno}: @alphabet must precede all words")
            alphabet = Alphabet("".join(rest.split()))
            seen_content = True
            continue
        seen_content = True
        words.extend(line.split())
    if alphabet is None:
        alphabet = Alphabet.from_words(words) if words else BINARY
    return WordSet.of(words, alphabet)


def format_word_list(S: WordSet, header: bool = True) -> str:
    lines = [f"@alphabet {S.alphabet.symbols}"] if header else []
    lines.extend(S.strings())
    return "\n".join(lines) + "\n"


def read_word_list(path: Union[str, Path]) -> WordSet:
    return parse_word_list(Path(path).read_text(encoding="utf-8"))


def write_word_list(S: WordSet, path: Union[str, Path]) -> None:
    Path(path).write_text(format_word_list(S), encoding="utf-8")
