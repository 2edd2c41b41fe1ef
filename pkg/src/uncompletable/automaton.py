"""Flower-trie automaton for ``S*`` and its subset semantics for ``Fact(S*)``.

States are the distinct proper prefixes of the words of ``S``, numbered
breadth-first with the root (the empty prefix) as node 0.  Reading a symbol
from a prefix ``p`` moves to ``p x`` when that is again a proper prefix, and
back to the root when ``p x`` is a word of ``S``; there are no epsilon moves.
Paths from the root back to the root spell exactly ``S*``.  Making every
state both initial and final turns the same machine into a recognizer for the
factors of ``S*``: a word is a factor iff the set of states reached from the
full state set is nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import InvalidInputError
from .words import Alphabet, Word, WordLike, WordSet

ROOT = 0


@dataclass(frozen=True)
class TrieAutomaton:
    alphabet: Alphabet
    prefixes: tuple[Word, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    # derived tables, filled in __post_init__
    succ_masks: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    moves: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sigma = self.alphabet.sigma
        masks = []
        moves = []
        for x in range(sigma):
            row = []
            src, dst, complete = [], [], []
            for i, succ in enumerate(self.delta):
                m = 0
                for j in succ[x]:
                    m |= 1 << j
                    if j == ROOT:
                        complete.append(i)
                    else:
                        src.append(i)
                        dst.append(j)
                row.append(m)
            masks.append(tuple(row))
            moves.append(
                (
                    np.asarray(src, dtype=np.intp),
                    np.asarray(dst, dtype=np.intp),
                    np.asarray(complete, dtype=np.intp),
                )
            )
        object.__setattr__(self, "succ_masks", tuple(masks))
        object.__setattr__(self, "moves", tuple(moves))

    @property
    def n(self) -> int:
        return len(self.prefixes)

    def label(self, node: int) -> str:
        return self.alphabet.render(self.prefixes[node])

    def to_dot(self) -> str:
        """Graphviz rendering; word-completion edges are dashed and return to the root."""
        lines = ["digraph trie {", "  rankdir=LR;", '  node [shape=circle];']
        for i in range(self.n):
            label = self.label(i) or "ε"
            shape = ", shape=doublecircle" if i == ROOT else ""
            lines.append(f'  n{i} [label="{label}"{shape}];')
        for i, row in enumerate(self.delta):
            for x, succ in enumerate(row):
                sym = self.alphabet.symbols[x]
                for j in sorted(succ):
                    style = ", style=dashed" if j == ROOT else ""
                    lines.append(f'  n{i} -> n{j} [label="{sym}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_star_trie(S: WordSet) -> TrieAutomaton:
    alphabet = S.alphabet
    prefixes = sorted(
        {w[:i] for w in S.words for i in range(len(w))} | {()},
        key=lambda p: (len(p), p),
    )
    index = {p: i for i, p in enumerate(prefixes)}
    delta = []
    for p in prefixes:
        row = []
        for x in range(alphabet.sigma):
            q = p + (x,)
            succ = set()
            if q in index:
                succ.add(index[q])
            if q in S.words:
                succ.add(ROOT)
            row.append(frozenset(succ))
        delta.append(tuple(row))
    return TrieAutomaton(alphabet, tuple(prefixes), tuple(delta))


@dataclass(frozen=True)
class SubsetState:
    """A set of trie nodes as an ``n``-bit vector; bit ``i`` is node ``i``."""

    bits: int
    width: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise InvalidInputError(f"bits do not fit in width {self.width}")

    @classmethod
    def from_nodes(cls, nodes, width: int) -> SubsetState:
        bits = 0
        for i in nodes:
            bits |= 1 << i
        return cls(bits, width)

    def nodes(self) -> list[int]:
        return [i for i in range(self.width) if self.bits >> i & 1]

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def issubset(self, other: SubsetState) -> bool:
        return self.bits & ~other.bits == 0

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.width))


def initial_subset(A: TrieAutomaton) -> SubsetState:
    return SubsetState((1 << A.n) - 1, A.n)


def symbol_index(A: TrieAutomaton, x: Union[int, str]) -> int:
    if isinstance(x, str):
        return A.alphabet.index(x)
    if not 0 <= x < A.alphabet.sigma:
        raise InvalidInputError(f"symbol index {x} outside alphabet {A.alphabet.symbols!r}")
    return x


def step_bits(masks: tuple[int, ...], bits: int) -> int:
    out = 0
    while bits:
        low = bits & -bits
        out |= masks[low.bit_length() - 1]
        bits ^= low
    return out


def step(A: TrieAutomaton, q: SubsetState, x: Union[int, str]) -> SubsetState:
    if q.width != A.n:
        raise InvalidInputError(f"subset width {q.width} does not match automaton size {A.n}")
    masks = A.succ_masks[symbol_index(A, x)]
    return SubsetState(step_bits(masks, q.bits), A.n)


def run(A: TrieAutomaton, w: WordLike, q: SubsetState | None = None) -> SubsetState:
    """Fold :func:`step` over ``w`` starting from ``q`` (default: all nodes)."""
    word = A.alphabet.word(w)
    bits = (1 << A.n) - 1 if q is None else q.bits
    for x in word:
        if not bits:
            break
        bits = step_bits(A.succ_masks[x], bits)
    return SubsetState(bits, A.n)
