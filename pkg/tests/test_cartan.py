"""Root-datum tables, Weyl words, the node involution, and the dimension formula."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystals.cartan import (
    CartanType,
    all_reduced_words,
    bilinear,
    build_root_datum,
    canonical_word,
    chamber_coweights,
    ensure_w0_word,
    is_reduced_word_for_w0,
    longest_word,
    num_positive_roots,
    root_datum,
    theta,
    weight_neg,
    weyl_act,
    weyl_dim,
    word_coroot_pairings,
)
from crystals.errors import InputError

# Number of positive roots per type (classical facts, used as an independent
# check on the descent-based word machinery).
POSITIVE_ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "C2": 4, "G2": 6, "D4": 12}


def brute_force_w0_words(d, length):
    """Oracle: exhaustively enumerate all words of the given length whose
    reflection product sends rho to -rho.  Any such word is reduced once the
    length equals the number of positive roots."""
    target = weight_neg(d.rho)
    found = []
    for word in itertools.product(range(1, d.rank + 1), repeat=length):
        if weyl_act(d, word, d.rho) == target:
            found.append(word)
    return found


class TestCartanType:
    def test_parse_round_trip(self):
        for text in ["A1", "A2", "A3", "B2", "C2", "D4", "G2"]:
            assert str(CartanType.parse(text)) == text

    def test_parse_case_insensitive(self):
        assert CartanType.parse("b2") == CartanType("B", 2)

    @pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D2", "G3", "E6", "F4", "", "A", "Axy", "A-1"])
    def test_invalid(self, bad):
        with pytest.raises(InputError):
            CartanType.parse(bad)


class TestCartanMatrix:
    def test_a2(self):
        d = root_datum("A2")
        assert d.cartan == ((2, -1), (-1, 2))

    def test_a1(self):
        d = root_datum("A1")
        assert d.cartan == ((2,),)
        assert d.simple_roots == ((2,),)

    def test_b2_orientation(self):
        # last simple root short: a[2][1] = -2
        d = root_datum("B2")
        assert d.cartan == ((2, -1), (-2, 2))

    def test_c2_orientation(self):
        d = root_datum("C2")
        assert d.cartan == ((2, -2), (-1, 2))

    def test_g2(self):
        assert root_datum("G2").cartan == ((2, -1), (-3, 2))

    def test_d4_branch(self):
        d = root_datum("D4")
        assert d.cartan[1][3] == d.cartan[3][1] == -1
        assert d.cartan[2][3] == d.cartan[3][2] == 0


class TestWeylAction:
    def test_a1_reflection(self):
        d = root_datum("A1")
        assert weyl_act(d, (1,), (1,)) == (-1,)

    def test_a2_long_element_on_rho(self):
        d = root_datum("A2")
        assert weyl_act(d, (1, 2, 1), d.rho) == (-1, -1)

    def test_a2_s1_fixes_second_fundamental(self):
        d = root_datum("A2")
        assert weyl_act(d, (1,), (0, 1)) == (0, 1)

    @settings(max_examples=60, deadline=None)
    @given(
        name=st.sampled_from(["A1", "A2", "A3", "B2", "C2", "G2", "D4"]),
        data=st.data(),
    )
    def test_reflections_are_involutions(self, name, data):
        d = root_datum(name)
        wt = tuple(data.draw(st.integers(-3, 3)) for _ in range(d.rank))
        i = data.draw(st.integers(1, d.rank))
        assert weyl_act(d, (i, i), wt) == wt


class TestWords:
    @pytest.mark.parametrize("name,count", sorted(POSITIVE_ROOT_COUNTS.items()))
    def test_longest_word_length(self, name, count):
        d = root_datum(name)
        assert num_positive_roots(d) == count
        assert len(longest_word(d)) == count
        assert is_reduced_word_for_w0(d, longest_word(d))

    def test_a1_words(self):
        assert all_reduced_words(root_datum("A1")) == ((1,),)

    def test_a2_words_against_brute_force(self):
        d = root_datum("A2")
        assert set(all_reduced_words(d)) == set(brute_force_w0_words(d, 3))
        assert all_reduced_words(d) == ((1, 2, 1), (2, 1, 2))

    def test_a3_words_against_brute_force(self):
        d = root_datum("A3")
        oracle = brute_force_w0_words(d, 6)
        words = all_reduced_words(d)
        assert set(words) == set(oracle)
        assert len(words) == 16

    def test_rank_two_types_have_two_words(self):
        for name in ["B2", "C2", "G2"]:
            assert len(all_reduced_words(root_datum(name))) == 2

    def test_canonical_word_is_least(self):
        d = root_datum("A3")
        assert canonical_word(d) == min(all_reduced_words(d))

    @pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "C2", "G2"])
    def test_every_word_sends_rho_to_minus_rho(self, name):
        d = root_datum(name)
        m = len(longest_word(d))
        for word in all_reduced_words(d):
            assert len(word) == m
            assert weyl_act(d, word, d.rho) == weight_neg(d.rho)

    def test_ensure_w0_word_rejects(self):
        d = root_datum("A2")
        for bad in [(1, 2), (1, 1, 1), (1, 2, 2), (1, 2, 3)]:
            with pytest.raises(InputError):
                ensure_w0_word(d, bad)


class TestTheta:
    def test_values(self):
        assert theta(root_datum("A1")) == (1,)
        assert theta(root_datum("A2")) == (2, 1)
        assert theta(root_datum("A3")) == (3, 2, 1)
        assert theta(root_datum("B2")) == (1, 2)
        assert theta(root_datum("C2")) == (1, 2)
        assert theta(root_datum("G2")) == (1, 2)
        assert theta(root_datum("D4")) == (1, 2, 3, 4)

    @pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2", "D4"])
    def test_defining_equation(self, name):
        d = root_datum(name)
        w0 = longest_word(d)
        t = theta(d)
        for i in range(1, d.rank + 1):
            lhs = weyl_act(d, w0, d.simple_roots[i - 1])
            assert lhs == weight_neg(d.simple_roots[t[i - 1] - 1])


class TestWeylDim:
    def test_a1_chain(self):
        d = root_datum("A1")
        for m in range(6):
            assert weyl_dim(d, (m,)) == m + 1

    def test_a2_values(self):
        d = root_datum("A2")
        assert weyl_dim(d, (1, 0)) == 3
        assert weyl_dim(d, (0, 1)) == 3
        assert weyl_dim(d, (1, 1)) == 8

    def test_known_dimensions(self):
        assert weyl_dim(root_datum("B2"), (1, 0)) == 5
        assert weyl_dim(root_datum("B2"), (0, 1)) == 4
        assert weyl_dim(root_datum("C2"), (1, 0)) == 4
        assert weyl_dim(root_datum("C2"), (0, 1)) == 5
        # node 2 of G2 is the short node under our orientation
        assert weyl_dim(root_datum("G2"), (0, 1)) == 7
        assert weyl_dim(root_datum("G2"), (1, 0)) == 14
        assert weyl_dim(root_datum("A3"), (1, 1, 1)) == 64

    def test_rejects_non_dominant(self):
        with pytest.raises(InputError):
            weyl_dim(root_datum("A2"), (-1, 0))

    def test_weyl_invariance_of_form(self):
        d = root_datum("B2")
        x, y = (1, 2), (2, -1)
        for i in (1, 2):
            assert bilinear(d, weyl_act(d, (i,), x), weyl_act(d, (i,), y)) == bilinear(d, x, y)
        assert bilinear(d, x, y) == bilinear(d, y, x)


class TestPairings:
    def test_string_data_of_highest_vertex_a2(self):
        # hand computation: for the word (1,2,1) and lam = rho the pairings
        # <alpha_1^vee, rho>, <s_1 alpha_2^vee, rho>, <s_1 s_2 alpha_1^vee, rho>
        # equal (1, 2, 1)
        d = root_datum("A2")
        assert word_coroot_pairings(d, (1, 2, 1), (1, 1)) == (1, 2, 1)
        assert word_coroot_pairings(d, (1, 2, 1), (1, 0)) == (1, 1, 0)

    def test_chamber_coweights_a2(self):
        d = root_datum("A2")
        cw = chamber_coweights(d)
        assert len(cw) == 6
        assert set(cw) == {(1, 0), (0, 1), (-1, 1), (1, -1), (0, -1), (-1, 0)}
        # closed under negation
        assert set(weight_neg(g) for g in cw) == set(cw)

    @pytest.mark.parametrize("name", ["A2", "B2", "C2", "A3", "G2"])
    def test_chamber_closed_under_negation(self, name):
        d = root_datum(name)
        cw = set(chamber_coweights(d))
        assert set(weight_neg(g) for g in cw) == cw
