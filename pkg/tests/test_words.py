import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uncompletable.errors import InvalidInputError
from uncompletable.words import (
    BINARY,
    Alphabet,
    WordSet,
    anchor,
    borders,
    contrex_witness,
    family_full_minus,
    family_s4,
    family_s5,
    family_sk,
    family_sk_prime,
    format_word_list,
    genrest_witness,
    is_unbordered,
    parse_word_list,
    restivo_witness,
    s4_witness,
    s5_witness,
)


def brute_borders(w):
    return [L for L in range(1, len(w)) if w[:L] == w[-L:]]


def strings(S):
    return set(S.strings())


# -- alphabet / word sets ----------------------------------------------------


def test_alphabet_rejects_duplicates():
    with pytest.raises(InvalidInputError):
        Alphabet("aba")


def test_alphabet_parse_render_roundtrip():
    sigma = Alphabet("ba")
    assert sigma.parse("ab") == (1, 0)
    assert sigma.render((1, 0)) == "ab"
    with pytest.raises(InvalidInputError):
        sigma.parse("c")


def test_default_alphabet_is_ascending():
    assert WordSet.of(["ca", "b"]).alphabet.symbols == "abc"


def test_wordset_dedup_and_empty_word():
    with pytest.warns(UserWarning):
        S = WordSet.of(["ab", "ab", "", "b"], "ab")
    assert len(S) == 2
    assert S.dropped_empty
    assert S.k == 2
    assert WordSet.of([], "ab").k == 0


# -- borders -----------------------------------------------------------------


@pytest.mark.parametrize(
    "w, expected", [("a", []), ("aabb", []), ("abaab", [2]), ("aaaa", [1, 2, 3]), ("abab", [2])]
)
def test_borders_examples(w, expected):
    assert borders(w) == expected


def test_borders_empty_word():
    with pytest.raises(InvalidInputError):
        borders("")


@given(st.text(alphabet="ab", min_size=1, max_size=16))
def test_borders_match_direct_comparison(w):
    assert borders(w) == brute_borders(w)
    assert borders(BINARY.parse(w)) == brute_borders(w)


@pytest.mark.parametrize("k", range(3, 14))
def test_sk_anchor_is_unbordered(k):
    assert is_unbordered(anchor(k))


# -- families ----------------------------------------------------------------


def test_full_minus_small():
    S = family_full_minus(2, "ab")
    assert strings(S) == {"aa", "ba", "bb"}


def test_full_minus_k4_size():
    assert len(family_full_minus(4, "aabb")) == 15


def test_full_minus_rejects_wrong_length():
    with pytest.raises(InvalidInputError):
        family_full_minus(3, "ab")


def test_s4():
    S = family_s4()
    assert len(S) == 21
    assert S.k == 4
    for w in ("ab", "bba", "aaaa"):
        assert w in S
    assert "aabb" not in S


def expand_sk(k):
    # independent expansion straight from the set-builder notation
    out = {"".join(t) for t in itertools.product("ab", repeat=k)} - {"a" * (k - 2) + "bb"}
    out |= {x + "b" + "a" * (k - 4) + y for x in "ab" for y in "ab"}
    out |= {x + "ba" for x in "ab"}
    for i in range(1, k - 2):
        out |= {"b" + "a" * i + x for x in "ab"} | {"a" * i + "b"}
    return out


def test_sk_k5_membership():
    S = family_sk(5)
    for w in ("abaa", "aab", "bba"):
        assert w in S
    assert "aaabb" not in S
    assert S.k == 5


def test_sk_k7_membership():
    S = family_sk(7)
    assert "abaaab" in S
    assert "aaaaabb" not in S


@pytest.mark.parametrize("k", range(5, 11))
def test_sk_matches_expansion(k):
    assert strings(family_sk(k)) == expand_sk(k)


def test_sk_requires_k5():
    with pytest.raises(InvalidInputError):
        family_sk(4)


def test_sk_prime():
    assert strings(family_sk_prime(7)) == expand_sk(7) | {"bbbb"}
    assert len(family_sk_prime(7)) == len(family_sk(7)) + 1
    assert "bbbb" in family_sk_prime(9)
    with pytest.raises(InvalidInputError):
        family_sk_prime(6)


def test_s5_equals_sk5():
    assert family_s5() == family_sk(5)


def test_families_deterministic():
    assert family_sk(8) == family_sk(8)
    assert family_sk(8).strings() == family_sk(8).strings()


# -- witnesses ---------------------------------------------------------------


def test_restivo_witness_examples():
    assert BINARY.render(restivo_witness(BINARY.parse("ab"), BINARY.parse("a"))) == "abaab"
    w = restivo_witness(BINARY.parse("aabb"), BINARY.parse("a"))
    assert BINARY.render(w) == "aabba" * 3 + "aabb"
    assert len(w) == 19


def test_restivo_witness_needs_single_letter():
    with pytest.raises(InvalidInputError):
        restivo_witness(BINARY.parse("ab"), BINARY.parse("ab"))


@given(st.lists(st.integers(0, 2), min_size=2, max_size=9), st.integers(0, 2))
def test_restivo_witness_length(u, a):
    assert len(restivo_witness(u, (a,))) == len(u) ** 2 + len(u) - 1


def test_genrest_witness_k5():
    expected = "aaabb aaaa aaabb baaa aaabb bbaa aaabb bbaa aaabb".replace(" ", "")
    assert BINARY.render(genrest_witness(5)) == expected
    assert len(genrest_witness(5)) == 41


@pytest.mark.parametrize("k", range(5, 13))
def test_genrest_witness_length(k):
    assert len(genrest_witness(k)) == 2 * k * k - 2 * k + 1


def count_occurrences(w, u):
    return sum(1 for i in range(len(w) - len(u) + 1) if w[i : i + len(u)] == u)


@pytest.mark.parametrize("k, length", [(7, 85), (8, 121), (9, 163), (12, 325)])
def test_contrex_witness_length(k, length):
    w = contrex_witness(k)
    assert len(w) == length == 3 * k * k - 9 * k + 1
    assert count_occurrences(w, anchor(k)) == 2 * k - 6


def test_witness_preconditions():
    with pytest.raises(InvalidInputError):
        genrest_witness(4)
    with pytest.raises(InvalidInputError):
        contrex_witness(6)


def test_s5_witness():
    w = BINARY.render(s5_witness())
    assert len(w) == 41
    assert w.split("aaabb") == ["", "aaaa", "baa", "bbabaa", "baa", ""]


def test_s4_witness_literal():
    assert BINARY.render(s4_witness()) == "aabbaaaaabbbaaaabbbbbaabb"
    assert len(s4_witness()) == 25
    assert BINARY.render(s4_witness()).split("aabb") == ["", "aaa", "baa", "bbb", ""]


# -- word-list format --------------------------------------------------------


def test_parse_word_list_with_header_and_comments():
    text = "@alphabet ba\n# a comment\n\nab   # trailing\nb\n"
    S = parse_word_list(text)
    assert S.alphabet.symbols == "ba"
    assert strings(S) == {"ab", "b"}


def test_parse_word_list_rejects_foreign_symbol():
    with pytest.raises(InvalidInputError):
        parse_word_list("@alphabet ab\nabc\n")


def test_parse_word_list_header_must_come_first():
    with pytest.raises(InvalidInputError):
        parse_word_list("ab\n@alphabet ab\n")


def test_format_roundtrip():
    S = family_sk(6)
    text = format_word_list(S)
    assert text.startswith("@alphabet ab\n")
    assert parse_word_list(text) == S
