"""Lazy determinization of the factor automaton and shortest-witness search.

The determinized automaton is never materialized.  A breadth-first search
starts from the full node set and follows the subset transitions until either
the empty subset shows up (every word spelled along that path is
uncompletable) or no unseen subset remains (``S`` is complete).

Each BFS layer is expanded as one boolean matrix: rows are the subsets of the
layer in discovery order, and every symbol is applied to all rows at once.
New subsets are then registered row by row, parent first and symbol second,
so discovery order inside a layer is the lexicographic order of the access
words.  The first empty row met is therefore the lexicographically least
uncompletable word among the shortest ones.
"""

from __future__ import annotations

import enum
import time
from dataclasses import asdict, dataclass, field
from typing import Optional, Union

import numpy as np

from .automaton import ROOT, TrieAutomaton, build_star_trie, run
from .errors import ResourceLimitError
from .words import Alphabet, Word, WordLike, WordSet

# cells (rows * symbols * nodes) of the boolean scratch array per expansion block
BLOCK_CELLS = 1 << 24


@dataclass(frozen=True)
class Limits:
    max_subsets: int = 50_000_000
    timeout_s: Optional[float] = 3600.0


DEFAULT_LIMITS = Limits()


class Status(enum.Enum):
    COMPLETE = "complete"
    UNCOMPLETABLE = "uncompletable"
    # brute force only: nothing found up to the horizon, completeness not certified
    COMPLETE_UP_TO = "complete_up_to"


@dataclass
class SearchStats:
    automaton_nodes: int = 0
    subset_states: int = 0
    peak_frontier: int = 0
    depth: int = 0
    elapsed_s: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SearchResult:
    status: Status
    length: int
    witness: Optional[Word]
    alphabet: Alphabet
    stats: SearchStats = field(default_factory=SearchStats, compare=False)
    horizon: Optional[int] = None

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE

    @property
    def uwl(self) -> int:
        """Minimal uncompletable length, 0 when complete."""
        return self.length if self.status is Status.UNCOMPLETABLE else 0

    @property
    def witness_str(self) -> Optional[str]:
        return None if self.witness is None else self.alphabet.render(self.witness)

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "complete": self.complete,
            "uwl": self.uwl,
            "witness": self.witness_str,
            "horizon": self.horizon,
            **self.stats.to_dict(),
        }


def _automaton(S: Union[WordSet, TrieAutomaton]) -> TrieAutomaton:
    return S if isinstance(S, TrieAutomaton) else build_star_trie(S)


def is_factor(A: TrieAutomaton, w: WordLike) -> bool:
    """Membership of ``w`` in ``Fact(S*)``."""
    return bool(run(A, w))


def _expand(A: TrieAutomaton, block: np.ndarray) -> np.ndarray:
    """Successor subsets of every row of ``block`` under every symbol.

    Row ``r * sigma + x`` of the result is the image of row ``r`` under
    symbol ``x``.
    """
    rows, n = block.shape
    sigma = A.alphabet.sigma
    out = np.zeros((rows, sigma, n), dtype=bool)
    for x, (src, dst, complete) in enumerate(A.moves):
        # trie children are distinct per (node, symbol), so plain assignment is safe
        if len(src):
            out[:, x, dst] = block[:, src]
        if len(complete):
            out[:, x, ROOT] |= block[:, complete].any(axis=1)
    return out.reshape(rows * sigma, n)


def _trace(parent: list[int], via: list[int], sid: int) -> list[int]:
    path = []
    while parent[sid] >= 0:
        path.append(via[sid])
        sid = parent[sid]
    return path[::-1]


def shortest_uncompletable(
    S: Union[WordSet, TrieAutomaton], limits: Limits = DEFAULT_LIMITS
) -> SearchResult:
    """Exact minimal uncompletable word, or a certificate of completeness.

    Raises :class:`ResourceLimitError` when more than ``limits.max_subsets``
    distinct subsets would be stored or the wall-clock budget runs out.
    """
    A = _automaton(S)
    n, sigma = A.n, A.alphabet.sigma
    t0 = time.perf_counter()
    stats = SearchStats(automaton_nodes=n)

    layer = np.ones((1, n), dtype=bool)
    layer_ids = [0]
    seen = {np.packbits(layer[0]).tobytes(): 0}
    parent = [-1]
    via = [-1]
    block_rows = max(1, BLOCK_CELLS // (sigma * n))

    def finish():
        stats.subset_states = len(seen)
        stats.elapsed_s = time.perf_counter() - t0

    while len(layer):
        stats.peak_frontier = max(stats.peak_frontier, len(layer))
        next_blocks = []
        next_ids: list[int] = []
        for lo in range(0, len(layer), block_rows):
            out = _expand(A, layer[lo : lo + block_rows])
            nonempty = out.any(axis=1)
            if not nonempty.all():
                r = int(np.argmin(nonempty))
                word = _trace(parent, via, layer_ids[lo + r // sigma]) + [r % sigma]
                stats.depth = len(word)
                finish()
                return SearchResult(Status.UNCOMPLETABLE, len(word), tuple(word), A.alphabet, stats)
            packed = np.packbits(out, axis=1)
            keep = []
            for r in range(len(packed)):
                key = packed[r].tobytes()
                if key in seen:
                    continue
                sid = len(parent)
                seen[key] = sid
                parent.append(layer_ids[lo + r // sigma])
                via.append(r % sigma)
                keep.append(r)
                next_ids.append(sid)
            if keep:
                next_blocks.append(out[keep])
            if len(seen) > limits.max_subsets:
                finish()
                raise ResourceLimitError(
                    f"more than {limits.max_subsets} subsets stored", stats
                )
            if limits.timeout_s is not None and time.perf_counter() - t0 > limits.timeout_s:
                finish()
                raise ResourceLimitError(f"timeout after {limits.timeout_s} s", stats)
        stats.depth += 1
        layer = np.concatenate(next_blocks) if next_blocks else np.zeros((0, n), dtype=bool)
        layer_ids = next_ids

    finish()
    return SearchResult(Status.COMPLETE, 0, None, A.alphabet, stats)


def uwl(S: Union[WordSet, TrieAutomaton], limits: Limits = DEFAULT_LIMITS) -> int:
    """Length of a minimal uncompletable word, 0 when ``S`` is complete."""
    return shortest_uncompletable(S, limits).uwl


def is_complete(S: Union[WordSet, TrieAutomaton], limits: Limits = DEFAULT_LIMITS) -> bool:
    return shortest_uncompletable(S, limits).complete
