"""Downward/upward string data, injectivity, reconstruction, canonical keys."""
import itertools

import pytest

from crystals.cartan import all_reduced_words, root_datum, word_coroot_pairings
from crystals.errors import InputError
from crystals.graph import components, highest_weight_vertices
from crystals.paths import irreducible
from crystals.stringdata import (
    StringData,
    cascade_endpoint_down,
    cascade_endpoint_up,
    downward_data,
    downward_values,
    element_from_downward_data,
    upward_data,
    upward_values,
)


class TestDownward:
    def test_a1_top_of_long_chain(self):
        d = root_datum("A1")
        B = irreducible(d, (2,))
        [h] = highest_weight_vertices(B)
        assert downward_data(B, h, (1,)).values == (2,)

    def test_a2_top_of_adjoint(self):
        d = root_datum("A2")
        B = irreducible(d, (1, 1))
        [h] = highest_weight_vertices(B)
        got = downward_values(B, h, (1, 2, 1))
        assert got == (1, 2, 1)
        # must equal the reflection-pairing profile of the highest weight
        assert got == word_coroot_pairings(d, (1, 2, 1), (1, 1))

    def test_lowest_vertex_is_all_zeros(self):
        d = root_datum("B2")
        B = irreducible(d, (1, 1))
        [comp] = components(B)
        for word in all_reduced_words(d):
            assert downward_values(B, comp.lowest, word) == (0,) * len(word)

    def test_rejects_bad_word(self):
        d = root_datum("A2")
        B = irreducible(d, (1, 0))
        with pytest.raises(InputError):
            downward_data(B, 0, (1, 2))

    @pytest.mark.parametrize("name", ["A1", "A2", "B2", "C2"])
    def test_injective_and_lands_on_lowest(self, name):
        d = root_datum(name)
        for lam in itertools.product(range(3), repeat=d.rank):
            B = irreducible(d, lam)
            [comp] = components(B)
            for word in all_reduced_words(d):
                seen = set()
                for v in B.vertices:
                    data = downward_values(B, v, word)
                    assert data not in seen
                    seen.add(data)
                    assert cascade_endpoint_down(B, v, word) == comp.lowest


class TestUpward:
    def test_highest_is_all_zeros(self):
        d = root_datum("A2")
        B = irreducible(d, (2, 1))
        [h] = highest_weight_vertices(B)
        for word in all_reduced_words(d):
            assert upward_values(B, h, word) == (0,) * len(word)

    def test_a1_middle(self):
        d = root_datum("A1")
        B = irreducible(d, (2,))
        [mid] = [v for v in B.vertices if B.weight(v) == (0,)]
        assert upward_data(B, mid, (1,)).values == (1,)

    def test_a2_lowest_of_adjoint(self):
        d = root_datum("A2")
        B = irreducible(d, (1, 1))
        [comp] = components(B)
        assert upward_values(B, comp.lowest, (1, 2, 1)) == (1, 2, 1)

    def test_cascade_ends_at_highest(self):
        d = root_datum("C2")
        B = irreducible(d, (1, 1))
        [h] = highest_weight_vertices(B)
        for word in all_reduced_words(d):
            for v in B.vertices:
                assert cascade_endpoint_up(B, v, word) == h


class TestReconstruction:
    def test_all_zeros_gives_lowest(self):
        d = root_datum("A2")
        B = irreducible(d, (2, 0))
        [comp] = components(B)
        s = StringData((1, 2, 1), (0, 0, 0), "downward")
        assert element_from_downward_data(B, None, s) == comp.lowest

    def test_round_trip_every_vertex(self):
        d = root_datum("B2")
        B = irreducible(d, (1, 1))
        for word in all_reduced_words(d):
            for v in B.vertices:
                s = downward_data(B, v, word)
                assert element_from_downward_data(B, None, s) == v

    def test_a2_fundamental_explicit_value(self):
        # in the 3-element crystal the data (1, 1, 0) for the word (1, 2, 1)
        # belongs to the highest vertex: phi_1 = 1, then phi_2 = 1, then 0
        d = root_datum("A2")
        B = irreducible(d, (1, 0))
        [h] = highest_weight_vertices(B)
        s = StringData((1, 2, 1), (1, 1, 0), "downward")
        assert element_from_downward_data(B, None, s) == h

    def test_unattained_data_raises(self):
        d = root_datum("A1")
        B = irreducible(d, (1,))
        s = StringData((1,), (5,), "downward")
        with pytest.raises(InputError):
            element_from_downward_data(B, None, s)

    def test_direction_enforced(self):
        d = root_datum("A1")
        B = irreducible(d, (1,))
        s = StringData((1,), (1,), "upward")
        with pytest.raises(InputError):
            element_from_downward_data(B, None, s)


class TestCanonicalKeys:
    def test_keys_are_sorted_downward_data(self):
        d = root_datum("A2")
        B = irreducible(d, (1, 1))
        assert B.key_word == (1, 2, 1)
        assert B.keys == tuple(sorted(B.keys))
        for v in B.vertices:
            assert B.keys[v] == downward_values(B, v, B.key_word)
