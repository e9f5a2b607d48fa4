"""Path model: root operators, exactness, and crystal generation."""
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystals.cartan import root_datum, weight_neg, weyl_act, weyl_dim, longest_word
from crystals.errors import BudgetError, InputError
from crystals.graph import highest_weight_vertices, lowest_weight_vertices, validate
from crystals.paths import (
    LSPath,
    concatenate,
    generate_crystal,
    irreducible,
    path_eps,
    path_phi,
    root_e,
    root_f,
    straight_path,
)

SMALL_TYPES = ["A1", "A2", "B2", "C2"]


class TestLSPath:
    def test_zero_path(self):
        d = root_datum("A2")
        p = straight_path(d, (0, 0))
        assert p.displacements == ()
        assert p.segments == ()
        assert p.endpoint_weight(2) == (0, 0)

    def test_straight(self):
        d = root_datum("A1")
        p = straight_path(d, (2,))
        assert p.endpoint_weight(1) == (2,)
        [(direction, duration)] = p.segments
        assert duration == 1

    def test_rejects_non_dominant(self):
        with pytest.raises(InputError):
            straight_path(root_datum("A2"), (-1, 0))

    def test_merge_collinear(self):
        p = LSPath.from_displacements([(Fraction(1),), (Fraction(2),)])
        assert len(p.displacements) == 1
        assert p.displacements[0] == (Fraction(3),)

    def test_no_merge_of_turnback(self):
        p = LSPath.from_displacements([(Fraction(1),), (Fraction(-1),)])
        assert len(p.displacements) == 2

    def test_durations_sum_to_one(self):
        p = LSPath.from_displacements([(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))])
        assert sum(dur for _, dur in p.segments) == 1


class TestRootOperators:
    def test_a1_two_chain(self):
        d = root_datum("A1")
        p = straight_path(d, (1,))
        q = root_f(d, 1, p)
        assert q.endpoint_weight(1) == (-1,)
        assert root_f(d, 1, q) is None
        assert root_e(d, 1, q) == p
        assert root_e(d, 1, p) is None

    def test_a2_three_crystal_walk(self):
        d = root_datum("A2")
        p = straight_path(d, (1, 0))
        q = root_f(d, 1, p)
        assert q.endpoint_weight(2) == (-1, 1)
        r = root_f(d, 2, q)
        assert r.endpoint_weight(2) == (0, -1)
        assert root_f(d, 1, r) is None
        assert root_f(d, 2, r) is None

    def test_phi_eps_on_straight(self):
        d = root_datum("A2")
        p = straight_path(d, (2, 1))
        assert path_phi(d, 1, p) == 2
        assert path_phi(d, 2, p) == 1
        assert path_eps(d, 1, p) == 0

    @settings(max_examples=40, deadline=None)
    @given(name=st.sampled_from(SMALL_TYPES), data=st.data())
    def test_inverse_property(self, name, data):
        d = root_datum(name)
        lam = tuple(data.draw(st.integers(0, 2)) for _ in range(d.rank))
        B = irreducible(d, lam)
        v = data.draw(st.integers(0, B.n - 1))
        i = data.draw(st.integers(1, d.rank))
        p = B.labels[v]
        q = root_f(d, i, p)
        if q is not None:
            assert root_e(d, i, q) == p
        r = root_e(d, i, p)
        if r is not None:
            assert root_f(d, i, r) == p


class TestGeneration:
    def test_a1_chains(self):
        d = root_datum("A1")
        for m in range(5):
            B = generate_crystal(d, (m,))
            assert B.n == m + 1

    def test_a2_fundamental(self):
        d = root_datum("A2")
        assert generate_crystal(d, (1, 0)).n == 3

    def test_a2_adjoint(self):
        d = root_datum("A2")
        B = generate_crystal(d, (1, 1))
        assert B.n == 8
        [low] = lowest_weight_vertices(B)
        assert B.weight(low) == (-1, -1)

    @pytest.mark.parametrize("name", SMALL_TYPES + ["A3"])
    def test_sizes_match_dimension_formula(self, name):
        d = root_datum(name)
        top = 2 if d.rank < 3 else 1
        for lam in itertools.product(range(top + 1), repeat=d.rank):
            B = irreducible(d, lam)
            assert B.n == weyl_dim(d, lam), lam

    @pytest.mark.parametrize("name", SMALL_TYPES)
    def test_lowest_weight_is_w0_of_highest(self, name):
        d = root_datum(name)
        w0 = longest_word(d)
        for lam in itertools.product(range(3), repeat=d.rank):
            B = irreducible(d, lam)
            [low] = lowest_weight_vertices(B)
            assert B.weight(low) == weyl_act(d, w0, lam)

    def test_endpoint_matches_vertex_weight(self):
        d = root_datum("B2")
        B = irreducible(d, (1, 1))
        for v in B.vertices:
            assert B.labels[v].endpoint_weight(d.rank) == B.weight(v)

    def test_unique_highest_vertex_is_straight_path(self):
        d = root_datum("A2")
        B = irreducible(d, (2, 1))
        [h] = highest_weight_vertices(B)
        assert B.labels[h] == straight_path(d, (2, 1))

    def test_budget_guard(self):
        d = root_datum("A2")
        with pytest.raises(BudgetError):
            generate_crystal(d, (1, 1), budget=3)

    def test_validation_runs(self):
        d = root_datum("G2")
        B = generate_crystal(d, (0, 1))
        validate(B)
        assert B.n == 7

    def test_canonical_ids_are_stable(self):
        d1 = root_datum("A2")
        d2 = root_datum("A2")
        B1 = generate_crystal(d1, (1, 1))
        B2 = generate_crystal(d2, (1, 1))
        assert B1.weights == B2.weights
        assert B1.f_edges == B2.f_edges
        assert B1.keys == B2.keys


class TestConcatenation:
    def test_concatenate_endpoints_add(self):
        d = root_datum("A2")
        p = straight_path(d, (1, 0))
        q = root_f(d, 1, p)
        c = concatenate(p, q)
        assert c.endpoint_weight(2) == (0, 1)
