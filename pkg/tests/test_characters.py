"""The character oracle: multiplicities and tensor decompositions."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystals.cartan import root_datum, weyl_dim
from crystals.characters import (
    all_weight_multiplicities,
    dominant_multiplicities,
    tensor_multiplicities,
    weyl_orbit,
)


class TestMultiplicities:
    def test_a1_chain_weights(self):
        d = root_datum("A1")
        for m in range(5):
            mults = all_weight_multiplicities(d, (m,))
            assert mults == {(k,): 1 for k in range(-m, m + 1, 2)}

    def test_a2_fundamental(self):
        d = root_datum("A2")
        assert all_weight_multiplicities(d, (1, 0)) == {
            (1, 0): 1, (-1, 1): 1, (0, -1): 1,
        }

    def test_a2_adjoint_zero_weight(self):
        d = root_datum("A2")
        mults = dominant_multiplicities(d, (1, 1))
        assert mults[(0, 0)] == 2
        assert mults[(1, 1)] == 1

    @pytest.mark.parametrize("name", ["A1", "A2", "B2", "C2", "A3"])
    def test_total_equals_dimension(self, name):
        d = root_datum(name)
        for lam in itertools.product(range(3 if d.rank < 3 else 2), repeat=d.rank):
            total = sum(all_weight_multiplicities(d, lam).values())
            assert total == weyl_dim(d, lam), lam

    def test_orbit_sizes_a2(self):
        d = root_datum("A2")
        assert len(weyl_orbit(d, (1, 1))) == 6
        assert len(weyl_orbit(d, (1, 0))) == 3
        assert len(weyl_orbit(d, (0, 0))) == 1


class TestTensorDecomposition:
    def test_a1_ladder(self):
        d = root_datum("A1")
        out = tensor_multiplicities(d, (2,), (3,))
        assert out == {(5,): 1, (3,): 1, (1,): 1}

    def test_a2_square_of_fundamental(self):
        d = root_datum("A2")
        assert tensor_multiplicities(d, (1, 0), (1, 0)) == {(2, 0): 1, (0, 1): 1}

    def test_a2_fundamental_times_dual(self):
        d = root_datum("A2")
        assert tensor_multiplicities(d, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}

    def test_b2_vector_square(self):
        d = root_datum("B2")
        out = tensor_multiplicities(d, (1, 0), (1, 0))
        assert sum(n * weyl_dim(d, nu) for nu, n in out.items()) == 25
        assert out[(2, 0)] == 1 and out[(0, 0)] == 1

    @settings(max_examples=25, deadline=None)
    @given(
        name=st.sampled_from(["A1", "A2", "B2", "C2"]),
        data=st.data(),
    )
    def test_dimension_identity_and_symmetry(self, name, data):
        d = root_datum(name)
        lam = tuple(data.draw(st.integers(0, 2)) for _ in range(d.rank))
        mu = tuple(data.draw(st.integers(0, 2)) for _ in range(d.rank))
        out = tensor_multiplicities(d, lam, mu)
        assert out == tensor_multiplicities(d, mu, lam)
        assert sum(n * weyl_dim(d, nu) for nu, n in out.items()) == \
            weyl_dim(d, lam) * weyl_dim(d, mu)
