"""Completeness of finite word sets and their minimal uncompletable words.

A finite set ``S`` of words is complete when every word over the alphabet is
a factor of some concatenation of words of ``S``.  This package decides
completeness, computes the exact length ``uwl(S)`` of the shortest
uncompletable word together with the lexicographically least such word, and
ships the benchmark families and closed-form witnesses used to probe how
large ``uwl`` can get relative to the maximal word length ``k``.
"""

from .analysis import (
    Decomposition,
    check_structure,
    conjecture_probe,
    decompose,
    find_anchor,
    reproduce,
    restivo_hypothesis_check,
    verify_witness,
)
from .automaton import SubsetState, TrieAutomaton, build_star_trie, initial_subset, step
from .errors import (
    InternalInconsistencyError,
    InvalidInputError,
    NotApplicableError,
    ResourceLimitError,
    UncompletableError,
)
from .oracle import cover_oracle, naive_oracle, uwl_bruteforce, uwl_max_exhaustive
from .search import (
    Limits,
    SearchResult,
    Status,
    is_complete,
    is_factor,
    shortest_uncompletable,
    uwl,
)
from .words import (
    BINARY,
    Alphabet,
    Word,
    WordSet,
    borders,
    contrex_witness,
    family_full_minus,
    family_s4,
    family_s5,
    family_sk,
    family_sk_prime,
    genrest_witness,
    is_unbordered,
    parse_word_list,
    restivo_witness,
    s4_witness,
    s5_witness,
)

__version__ = "0.1.0"
