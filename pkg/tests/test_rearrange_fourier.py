"""
Tests for latticeineq.rearrange_fourier (Fourier and symmetric-decreasing rearrangement)
"""
import math

import numpy as np
import pytest

from latticeineq.errors import DOMAIN, InequalityError
from latticeineq.lattice import SparseLatticeFunction
from latticeineq.rearrange_fourier import (
    SampledCircleFunction,
    beta_closed_form,
    even_decreasing_samples,
    forward_sq_energy,
    fourier_pair_check,
    fourier_rearrange_1d,
    fourier_rearrangement,
    lp_ratio_scan,
    multiplier_monotonicity,
    ps_fourier_check,
    rearrangement_error,
    series_identity_check,
    steiner_samples,
    symmetric_decreasing,
    symmetric_decreasing_samples,
    symmetric_order,
    symmetric_ps_check,
)


# --- Fixtures ---

@pytest.fixture
def pair():
    """u = delta_0 + delta_1, whose rearrangement has a closed form."""
    return SparseLatticeFunction.from_sequence([1.0, 1.0])


@pytest.fixture
def lopsided():
    """A short real sequence with no symmetry."""
    return SparseLatticeFunction.from_sequence([1.0, -2.0, 0.5, 3.0], start=-1)


class TestSamples:
    """Tests for sample-level rearrangement."""

    def test_order(self):
        assert list(symmetric_order(4)) == [1, 2, 0, 3]

    def test_symmetric_decreasing(self):
        out = symmetric_decreasing_samples(np.array([1.0, 4.0, 3.0, 2.0]))
        assert list(out) == [2.0, 4.0, 3.0, 1.0]

    def test_even_pairs(self):
        """Sorted pairs land on -x, +x at their root mean square."""
        out = even_decreasing_samples(np.array([1.0, 4.0, 3.0, 2.0]))
        expected = [math.sqrt(2.5), math.sqrt(12.5), math.sqrt(12.5), math.sqrt(2.5)]
        assert list(out) == pytest.approx(expected)
        assert float(np.sum(out ** 2)) == pytest.approx(30.0)

    def test_steiner_keeps_earlier_axes_even(self):
        samples = np.random.default_rng(2).random((6, 8, 4))
        out = steiner_samples(samples)
        for axis in range(3):
            assert np.array_equal(out, np.flip(out, axis=axis))
        assert float(np.sum(out ** 2)) == pytest.approx(float(np.sum(samples ** 2)))

    def test_sampled_function(self):
        f = SampledCircleFunction(4, np.array([1.0, 4.0, 3.0, 2.0])).rearranged()
        assert list(f.samples) == [2.0, 4.0, 3.0, 1.0]
        with pytest.raises(InequalityError):
            SampledCircleFunction(3, np.zeros(3))
        with pytest.raises(InequalityError):
            SampledCircleFunction(4, np.zeros(5))

    def test_multiplier_monotonicity(self):
        """A weight growing with |x| sees less of f*."""
        before, after = multiplier_monotonicity([4.0, 1.0, 1.0, 1.0], [3.0, 1.0, 1.0, 3.0])
        assert before == pytest.approx(17.0)
        assert after == pytest.approx(11.0)
        with pytest.raises(InequalityError):
            multiplier_monotonicity([-1.0, 1.0], [1.0, 1.0])


class TestFourierRearrangement:
    """Tests for fourier_rearrangement."""

    def test_closed_form(self, pair):
        sharp = fourier_rearrangement(pair, 1024).function
        for n in range(-3, 4):
            assert sharp.get((n,)).real == pytest.approx(beta_closed_form(1.0, n), abs=1e-4)

    def test_norm_preserved(self, lopsided):
        result = fourier_rearrangement(lopsided, 256)
        assert result.norm_sq == pytest.approx(1 + 4 + 0.25 + 9)

    def test_moduli_symmetric(self, lopsided):
        sharp = fourier_rearrange_1d(lopsided, 256)
        for n in range(1, 6):
            assert abs(sharp.get((n,))) == pytest.approx(abs(sharp.get((-n,))), abs=1e-12)

    def test_refinement_error_small(self, pair):
        assert rearrangement_error(pair, 512, window=4) < 1e-3

    def test_grid_checked(self):
        with pytest.raises(InequalityError) as exc:
            fourier_rearrangement(SparseLatticeFunction.delta((10,)), 32)
        assert exc.value.error_type == DOMAIN
        with pytest.raises(InequalityError):
            fourier_rearrangement(SparseLatticeFunction.delta((1,)), 33)

    def test_zero_rejected(self):
        with pytest.raises(InequalityError):
            fourier_rearrangement(SparseLatticeFunction(1), 64)

    def test_line_only(self):
        with pytest.raises(InequalityError):
            fourier_rearrange_1d(SparseLatticeFunction.delta((1, 0)), 64)

    def test_two_dimensions(self):
        u = SparseLatticeFunction(2, {(0, 0): 1.0, (1, 2): -1.0})
        result = fourier_rearrangement(u, 64)
        assert result.norm_sq == pytest.approx(2.0)

    @pytest.mark.parametrize("u, size", [
        (SparseLatticeFunction(2, {(0, 0): 1.0, (1, 0): 2.0, (0, 1): -1.0, (1, 2): 0.7}), 64),
        (SparseLatticeFunction(2, {(0, 0): 1.0, (1, 0): 2.0, (0, 1): -1.0, (1, 2): 0.7}), 256),
        (SparseLatticeFunction(3, {(0, 0, 0): 1.0, (1, 0, 0): -0.5, (0, 2, 1): 2.0, (1, 1, -1): 0.3}), 16),
    ])
    def test_even_along_every_axis(self, u, size):
        """u#(.., n_i, ..) = u#(.., -n_i, ..) for each axis i."""
        result = fourier_rearrangement(u, size)
        sharp = result.function
        half = size // 2
        for n, value in sharp.items():
            if min(n) <= -half:
                continue
            for axis in range(u.dim):
                mirrored = list(n)
                mirrored[axis] = -n[axis]
                assert abs(value - sharp.get(tuple(mirrored))) <= 1e-9
        assert result.imag_mass < 1e-18

    def test_line_is_real_and_even(self, lopsided):
        sharp = fourier_rearrange_1d(lopsided, 256)
        for n in range(1, 6):
            assert sharp.get((n,)) == pytest.approx(sharp.get((-n,)), abs=1e-12)
            assert abs(complex(sharp.get((n,))).imag) < 1e-12


class TestPolyaSzego:
    """Tests for the Fourier-side Polya-Szego checks."""

    def test_gradient(self, lopsided):
        report = ps_fourier_check(lopsided, 0, "grad_laplacian", 256)
        assert report.holds
        assert report.name == "polya_szego_fourier_grad_laplacian"

    def test_laplacian(self, lopsided):
        assert ps_fourier_check(lopsided, 1, "laplacian", 256).holds

    def test_bad_arguments(self, lopsided):
        with pytest.raises(InequalityError):
            ps_fourier_check(lopsided, 0, "curl")
        with pytest.raises(InequalityError):
            ps_fourier_check(lopsided, -1)

    def test_pair_check(self, lopsided, pair):
        assert fourier_pair_check(lopsided, pair, 256).holds
        with pytest.raises(InequalityError):
            fourier_pair_check(lopsided, SparseLatticeFunction.delta((1, 0)))


class TestSymmetricDecreasing:
    """Tests for u* and its Polya-Szego inequality."""

    def test_symmetric_and_peaked(self, pair):
        star = symmetric_decreasing(pair, 1024)
        assert star.get((1,)) == star.get((-1,))
        assert star.get((0,)) >= star.get((1,)) >= star.get((2,))
        assert star.get((0,)) == pytest.approx(4 / math.pi, rel=1e-3)

    def test_forward_energy(self):
        assert forward_sq_energy(SparseLatticeFunction.delta((0,))) == 2.0

    def test_ps_holds(self, pair):
        report = symmetric_ps_check(pair, 1024)
        assert report.lhs == pytest.approx(2.0)
        assert report.holds


class TestLpAndSeries:
    """Tests for the l^p scan and the series identity."""

    def test_scan_shape(self):
        result = lp_ratio_scan(3.0, trials=5, size=256)
        assert result.trials == 5
        assert len(result.ratios) == 5
        assert result.max_ratio == max(result.ratios)
        assert result.witness is not None

    def test_scan_needs_p_above_two(self):
        with pytest.raises(InequalityError):
            lp_ratio_scan(2.0, trials=1)

    def test_series(self):
        report = series_identity_check(1000)
        assert report.target == pytest.approx(math.pi ** 2 / 8)
        assert report.error < 1e-10

    def test_series_terms(self):
        with pytest.raises(InequalityError):
            series_identity_check(0)
