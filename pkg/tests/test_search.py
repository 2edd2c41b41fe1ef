import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uncompletable.automaton import build_star_trie, initial_subset, step
from uncompletable.errors import ResourceLimitError
from uncompletable.oracle import cover_oracle, uwl_bruteforce
from uncompletable.search import (
    Limits,
    Status,
    is_complete,
    is_factor,
    shortest_uncompletable,
    uwl,
)
from uncompletable.words import WordSet, family_full_minus, family_s4

word_sets = st.lists(st.text(alphabet="ab", min_size=1, max_size=4), min_size=1, max_size=8).map(
    lambda ws: WordSet.of(ws, "ab")
)


def ws(*words, alphabet="ab"):
    return WordSet.of(words, alphabet)


def test_is_factor_examples():
    A = build_star_trie(ws("ab", "ba"))
    assert is_factor(A, "aa")
    assert not is_factor(A, "aaa")
    assert is_factor(A, "")
    assert is_factor(build_star_trie(ws()), "")


def test_single_letter_set():
    r = shortest_uncompletable(ws("a"))
    assert r.status is Status.UNCOMPLETABLE
    assert r.length == 1 and r.witness_str == "b"


def test_full_alphabet_complete():
    r = shortest_uncompletable(ws("a", "b"))
    assert r.complete and r.uwl == 0 and r.witness is None
    assert is_complete(ws("a", "b"))
    assert uwl(ws("a", "b")) == 0


def test_prop2_k2():
    r = shortest_uncompletable(ws("aa", "ba", "bb"))
    assert r.length == 5
    assert uwl(family_full_minus(2, "ab")) == 5


def test_s4():
    r = shortest_uncompletable(family_s4())
    assert r.uwl == 25
    # lex-least; the published word ends in gap bbb instead of bba
    assert r.witness_str == "aabbaaaaabbbaaaabbbbaaabb"
    assert r.witness_str.split("aabb") == ["", "aaa", "baa", "bba", ""]


def test_empty_set_uwl_is_one():
    r = shortest_uncompletable(ws())
    assert r.uwl == 1 and r.witness_str == "a"


def test_not_complete_examples():
    assert not is_complete(ws("ab"))
    for k in (2, 3):
        for u in itertools.product("ab", repeat=k):
            assert not is_complete(family_full_minus(k, "".join(u)))


def test_ternary_alphabet():
    S = WordSet.of(["ab", "c", "ba", "a"], "abc")
    r = shortest_uncompletable(S)
    assert r.uwl == uwl_bruteforce(S, 8).length
    assert r.witness == uwl_bruteforce(S, 8).witness


def test_resource_limit_raises_with_stats():
    with pytest.raises(ResourceLimitError) as info:
        shortest_uncompletable(family_s4(), Limits(max_subsets=10))
    assert info.value.stats.subset_states > 10


def test_timeout_raises():
    with pytest.raises(ResourceLimitError):
        shortest_uncompletable(family_s4(), Limits(timeout_s=0.0))


def test_stats_populated():
    r = shortest_uncompletable(family_s4())
    assert r.stats.automaton_nodes == build_star_trie(family_s4()).n
    assert r.stats.subset_states > 1
    assert r.stats.peak_frontier >= 1
    assert r.stats.depth == 25


def test_witness_deterministic():
    S = family_full_minus(3, "aab")
    assert shortest_uncompletable(S).witness == shortest_uncompletable(S).witness


def test_small_blocks_same_answer(monkeypatch):
    import uncompletable.search as search

    expected = shortest_uncompletable(family_s4())
    monkeypatch.setattr(search, "BLOCK_CELLS", 1)
    again = shortest_uncompletable(family_s4())
    assert again.witness == expected.witness
    assert again.stats.subset_states == expected.stats.subset_states


@settings(max_examples=150, deadline=None)
@given(word_sets)
def test_agrees_with_bruteforce(S):
    r = shortest_uncompletable(S)
    brute = uwl_bruteforce(S, 9)
    if r.complete:
        assert brute.status is Status.COMPLETE_UP_TO
    elif r.length <= 9:
        assert brute.length == r.length
        # both enumerate in length-then-lex order
        assert brute.witness == r.witness
    else:
        assert brute.status is Status.COMPLETE_UP_TO


@settings(max_examples=100, deadline=None)
@given(word_sets)
def test_minimality(S):
    r = shortest_uncompletable(S)
    A = build_star_trie(S)
    if r.complete:
        return
    assert not is_factor(A, r.witness)
    for L in range(min(r.length, 11)):
        for w in itertools.product(range(2), repeat=L):
            assert is_factor(A, w)


@settings(max_examples=100)
@given(word_sets, st.lists(st.integers(0, 1), max_size=10))
def test_factor_closed(S, w):
    A = build_star_trie(S)
    if is_factor(A, w):
        for i in range(len(w) + 1):
            for j in range(i, len(w) + 1):
                assert is_factor(A, w[i:j])


def test_monotone_under_union():
    rng = random.Random(3)
    checked = 0
    while checked < 60:
        S = WordSet.of({"".join(rng.choice("ab") for _ in range(rng.randint(2, 4)))
                        for _ in range(rng.randint(1, 6))}, "ab")
        T = WordSet.of({"".join(rng.choice("ab") for _ in range(rng.randint(1, 3)))
                        for _ in range(rng.randint(1, 3))}, "ab")
        a, b = uwl(S), uwl(S | T)
        if a and b:
            assert b >= a
            checked += 1


def explicit_layers(A, depth):
    layer = {initial_subset(A)}
    out = [layer]
    for _ in range(depth):
        layer = {step(A, q, x) for q in layer for x in range(A.alphabet.sigma)}
        out.append(layer)
    return out


def residue(S, w, horizon):
    # the set of continuations y (|y| <= horizon) with w y in Fact(S*)
    return frozenset(
        y for L in range(horizon + 1) for y in itertools.product(range(2), repeat=L)
        if cover_oracle(S, tuple(w) + y)
    )


def test_bfs_layers_match_residues():
    S = WordSet.of(["ab", "ba", "bb"], "ab")
    A = build_star_trie(S)
    layers = explicit_layers(A, 4)
    for d, layer in enumerate(layers):
        words = list(itertools.product(range(2), repeat=d))
        by_state = {}
        for w in words:
            q = initial_subset(A)
            for x in w:
                q = step(A, q, x)
            by_state.setdefault(q, set()).add(residue(S, w, 4))
        assert set(by_state) == layer
        # equal subsets must have equal residues
        assert all(len(r) == 1 for r in by_state.values())
