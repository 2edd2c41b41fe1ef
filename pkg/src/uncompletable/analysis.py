"""Structure of minimal uncompletable words, witness checks and reproduction runs."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .automaton import TrieAutomaton, build_star_trie
from .errors import (
    InternalInconsistencyError,
    InvalidInputError,
    NotApplicableError,
    ResourceLimitError,
)
from .oracle import cover_oracle
from .search import DEFAULT_LIMITS, Limits, SearchResult, Status, is_factor, shortest_uncompletable
from .words import (
    BINARY,
    Word,
    WordLike,
    WordSet,
    borders,
    contrex_witness,
    family_full_minus,
    family_sk,
    family_sk_prime,
    genrest_witness,
    occurs_in,
    restivo_witness,
)


@dataclass(frozen=True)
class Decomposition:
    """``w = prefix u gaps[0] u ... gaps[-1] u suffix`` with no ``u`` inside any part."""

    u: Word
    prefix: Word
    gaps: tuple[Word, ...]
    suffix: Word

    @property
    def m(self) -> int:
        return len(self.gaps)

    @property
    def occurrences(self) -> int:
        return len(self.gaps) + 1

    @property
    def outer_empty(self) -> bool:
        return not self.prefix and not self.suffix

    def gap_lengths(self) -> list[int]:
        return [len(v) for v in self.gaps]

    def reconstruct(self) -> Word:
        w = self.prefix + self.u
        for v in self.gaps:
            w += v + self.u
        return w + self.suffix


def decompose(w: Sequence[int], u: Sequence[int]) -> Decomposition:
    """Split ``w`` around every occurrence of the unbordered word ``u``.

    An unbordered ``u`` cannot overlap itself, so the occurrences found by a
    left-to-right scan are disjoint and the factorization is unique.
    """
    w, u = tuple(w), tuple(u)
    if not u:
        raise InvalidInputError("anchor word must be nonempty")
    if borders(u):
        raise InvalidInputError(f"anchor is bordered (borders {borders(u)}); factorization is not unique")
    wb, ub = bytes(w), bytes(u)
    starts = []
    i = wb.find(ub)
    while i >= 0:
        starts.append(i)
        i = wb.find(ub, i + len(u))
    if not starts:
        raise NotApplicableError("anchor does not occur in the word")
    k = len(u)
    gaps = tuple(w[a + k : b] for a, b in zip(starts, starts[1:]))
    return Decomposition(u, w[: starts[0]], gaps, w[starts[-1] + k :])


def find_anchor(S: WordSet) -> Optional[Word]:
    """The ``u`` for which ``S = Σ^k \\ {u} ∪ T`` with ``T`` of shorter words, if any."""
    k = S.k
    if k == 0:
        return None
    longest = {w for w in S.words if len(w) == k}
    if len(longest) != S.alphabet.sigma**k - 1:
        return None
    for w in S.alphabet.all_words(k):
        if w not in longest:
            return w
    return None


def _require_form(S: WordSet, u: Word) -> None:
    found = find_anchor(S)
    if found != u:
        raise NotApplicableError(
            f"set is not of the form Σ^k minus {S.alphabet.render(u)!r} plus shorter words"
        )
    if borders(u):
        raise NotApplicableError(f"anchor {S.alphabet.render(u)!r} is bordered")


@dataclass
class StructureReport:
    anchor: str
    witness: str
    starts_with_anchor: bool
    ends_with_anchor: bool
    outer_empty: bool
    gaps: list[str]
    gap_lengths: list[int]
    min_gap: Optional[int]
    max_gap: Optional[int]

    @property
    def ok(self) -> bool:
        return self.starts_with_anchor and self.ends_with_anchor and self.outer_empty

    def to_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def structure_of(S: WordSet, u: Word, witness: Word) -> StructureReport:
    render = S.alphabet.render
    k = len(u)
    d = decompose(witness, u)
    lengths = d.gap_lengths()
    return StructureReport(
        anchor=render(u),
        witness=render(witness),
        starts_with_anchor=witness[:k] == u,
        ends_with_anchor=witness[-k:] == u,
        outer_empty=d.outer_empty,
        gaps=[render(v) for v in d.gaps],
        gap_lengths=lengths,
        min_gap=min(lengths, default=None),
        max_gap=max(lengths, default=None),
    )


def check_structure(S: WordSet, u: WordLike, result: SearchResult) -> StructureReport:
    """Check that a minimal uncompletable word starts and ends with the anchor ``u``."""
    u = S.word(u)
    if result.status is not Status.UNCOMPLETABLE:
        raise NotApplicableError("structure check needs an uncompletable search result")
    _require_form(S, u)
    return structure_of(S, u, result.witness)


def _uncompletable(S: WordSet, A: TrieAutomaton, w: Word) -> bool:
    by_automaton = not is_factor(A, w)
    by_oracle = not cover_oracle(S, w)
    if by_automaton != by_oracle:
        raise InternalInconsistencyError(
            f"membership of {S.alphabet.render(w)!r}: automaton says "
            f"{'un' if by_automaton else ''}completable, cover oracle disagrees"
        )
    return by_automaton


@dataclass
class WitnessReport:
    witness: str
    length: int
    uncompletable: bool
    minimal: Optional[bool] = None
    uwl: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)


def verify_witness(
    S: WordSet,
    w: WordLike,
    check_minimal: bool = False,
    limits: Limits = DEFAULT_LIMITS,
    automaton: Optional[TrieAutomaton] = None,
) -> WitnessReport:
    """Confirm ``w`` is uncompletable through both membership paths.

    With ``check_minimal`` the exact ``uwl(S)`` is computed as well and the
    word is minimal iff it is uncompletable and its length equals it.
    """
    w = S.word(w)
    A = automaton or build_star_trie(S)
    report = WitnessReport(S.alphabet.render(w), len(w), _uncompletable(S, A, w))
    if check_minimal:
        report.uwl = shortest_uncompletable(A, limits).uwl
        report.minimal = report.uncompletable and report.uwl == len(w)
    return report


@dataclass
class HypothesisReport:
    u: str
    k: int
    per_letter: dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.per_letter.values())

    def to_dict(self) -> dict:
        return {**asdict(self), "holds": self.holds}


def restivo_hypothesis_check(S: WordSet, u: WordLike) -> HypothesisReport:
    """Check that ``(u a)^(k-1) u`` is uncompletable for every letter ``a``.

    Applies when ``|u| = k`` is the maximal word length of ``S`` and no word
    of ``S`` is a factor of ``u``.
    """
    u = S.word(u)
    k = S.k
    if len(u) != k:
        raise InvalidInputError(f"|u| = {len(u)} differs from the maximal length {k}")
    for s in S.sorted():
        if occurs_in(s, u):
            raise NotApplicableError(
                f"{S.alphabet.render(s)!r} in S is a factor of {S.alphabet.render(u)!r}"
            )
    A = build_star_trie(S)
    per_letter = {
        S.alphabet.symbols[a]: _uncompletable(S, A, restivo_witness(u, (a,)))
        for a in range(S.alphabet.sigma)
    }
    return HypothesisReport(S.alphabet.render(u), k, per_letter)


# -- reproduction of the set families ----------------------------------------


@dataclass(frozen=True)
class Family:
    name: str
    min_k: int
    build: Callable[[int], WordSet]
    anchor: Callable[[int], Word]
    formula: Callable[[int], int]
    known_witness: Callable[[int], Word]


def _full_minus_anchor(k: int) -> Word:
    return BINARY.parse("a" * (k - 1) + "b")


FAMILIES = {
    "full_minus": Family(
        "full_minus", 2,
        lambda k: family_full_minus(k, _full_minus_anchor(k)),
        _full_minus_anchor,
        lambda k: k * k + k - 1,
        lambda k: restivo_witness(_full_minus_anchor(k), (0,)),
    ),
    "sk": Family(
        "sk", 5, family_sk,
        lambda k: BINARY.parse("a" * (k - 2) + "bb"),
        lambda k: 2 * k * k - 2 * k + 1,
        genrest_witness,
    ),
    "sk_prime": Family(
        "sk_prime", 7, family_sk_prime,
        lambda k: BINARY.parse("a" * (k - 2) + "bb"),
        lambda k: 3 * k * k - 9 * k + 1,
        contrex_witness,
    ),
}


@dataclass
class ReproRow:
    k: int
    family: str
    formula: int
    uwl: Optional[int] = None
    match: Optional[bool] = None
    witness: Optional[str] = None
    known_witness_uncompletable: Optional[bool] = None
    conjecture_violation: Optional[bool] = None
    structure: Optional[StructureReport] = None
    stats: dict = field(default_factory=dict)
    error: Optional[str] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["structure"] = self.structure.to_dict() if self.structure else None
        return d


def reproduce_row(family: str, k: int, limits: Limits = DEFAULT_LIMITS) -> ReproRow:
    fam = FAMILIES[family]
    if k < fam.min_k:
        raise InvalidInputError(f"family {family} needs k >= {fam.min_k}")
    S = fam.build(k)
    u = fam.anchor(k)
    row = ReproRow(k, family, fam.formula(k))
    A = build_star_trie(S)
    try:
        result = shortest_uncompletable(A, limits)
    except ResourceLimitError as exc:
        row.error = str(exc)
        row.stats = exc.stats.to_dict() if exc.stats else {}
        return row
    row.stats = result.stats.to_dict()
    row.uwl = result.uwl
    row.match = row.uwl == row.formula
    row.witness = result.witness_str
    row.conjecture_violation = row.uwl > 2 * k * k
    row.known_witness_uncompletable = _uncompletable(S, A, fam.known_witness(k))
    if result.status is Status.UNCOMPLETABLE:
        row.structure = check_structure(S, u, result)
    return row


def reproduce(
    k_range: Iterable[int],
    families: Iterable[str] = tuple(FAMILIES),
    limits: Limits = DEFAULT_LIMITS,
) -> list[ReproRow]:
    """One row per (k, family); pairs with k below a family's minimum are skipped."""
    families = list(families)
    for name in families:
        if name not in FAMILIES:
            raise InvalidInputError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    order = [name for name in FAMILIES if name in families]
    rows = []
    for k in sorted(set(k_range)):
        for name in order:
            if k >= FAMILIES[name].min_k:
                rows.append(reproduce_row(name, k, limits))
    return rows


@dataclass
class ConjectureReport:
    k: int
    uwl: int
    bound: int
    within_bound: bool
    witness: str
    anchor: Optional[str] = None
    gap_lengths: Optional[list[int]] = None
    shape_holds: Optional[bool] = None

    def to_dict(self) -> dict:
        return asdict(self)


def conjecture_probe(
    S: WordSet,
    limits: Limits = DEFAULT_LIMITS,
    witness: Optional[WordLike] = None,
) -> ConjectureReport:
    """Compare ``uwl(S)`` with ``2k^2`` and inspect the shape of a minimal witness.

    The shape clause asks for ``u v_1 u ... v_(k-1) u`` with every ``v_i`` of
    length at most ``k``.  It is evaluated on ``witness`` when given (which
    must be a minimal uncompletable word), otherwise on the computed
    lexicographically least one.  Nothing here is asserted; the report only
    records what holds.
    """
    A = build_star_trie(S)
    result = shortest_uncompletable(A, limits)
    if result.complete:
        raise NotApplicableError("set is complete")
    if witness is None:
        w = result.witness
    else:
        w = S.word(witness)
        if len(w) != result.length or not _uncompletable(S, A, w):
            raise NotApplicableError("given word is not a minimal uncompletable word")
    k = S.k
    report = ConjectureReport(
        k=k, uwl=result.length, bound=2 * k * k,
        within_bound=result.length <= 2 * k * k, witness=S.alphabet.render(w),
    )
    u = find_anchor(S)
    if u is not None and not borders(u) and occurs_in(u, w):
        d = decompose(w, u)
        report.anchor = S.alphabet.render(u)
        report.gap_lengths = d.gap_lengths()
        report.shape_holds = (
            d.outer_empty and d.m == k - 1 and all(n <= k for n in report.gap_lengths)
        )
    return report
