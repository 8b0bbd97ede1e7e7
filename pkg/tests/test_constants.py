"""
Tests for latticeineq.constants (explicit torus and lattice constants)
"""
import math

import pytest

from latticeineq.constants import (
    constant_table,
    explicit_constant,
    hardy_constant,
    hardy_rellich_constant,
    iterated_hardy_constant,
    iterated_rellich_constant,
    rellich_constant,
)
from latticeineq.errors import DOMAIN, InequalityError


class TestTorusConstants:
    """Tests for H, HR and R."""

    def test_hardy_closed_form(self):
        """H(0, d) = d (d-2)^2 / (3d^2 + 8d + 4)."""
        for d in range(3, 20):
            assert hardy_constant(0, d) == pytest.approx(d * (d - 2) ** 2 / (3 * d * d + 8 * d + 4))

    def test_hardy_three(self):
        assert hardy_constant(0, 3) == pytest.approx(3 / 55)

    def test_hardy_rellich_closed_form(self):
        """HR(0, d) = d^2 / (3d + 20)."""
        assert hardy_rellich_constant(0, 8) == pytest.approx(16 / 11)
        assert hardy_rellich_constant(0, 12) == pytest.approx(144 / 56)

    def test_rellich_values(self):
        assert rellich_constant(0, 5) == pytest.approx(0.01247, rel=1e-2)
        assert rellich_constant(0, 6) > rellich_constant(0, 5)

    def test_ranges(self):
        """Each constant rejects dimensions outside its range."""
        with pytest.raises(InequalityError) as exc:
            hardy_constant(0, 2)
        assert exc.value.error_type == DOMAIN
        with pytest.raises(InequalityError):
            hardy_rellich_constant(0, 7)
        with pytest.raises(InequalityError):
            rellich_constant(0, 4)
        with pytest.raises(InequalityError):
            hardy_constant(1, 10)

    def test_negative_k_needs_larger_d(self):
        """H(-1, d) needs d > 4."""
        with pytest.raises(InequalityError):
            hardy_constant(-1, 4)
        assert hardy_constant(-1, 5) > 0


class TestIterated:
    """Tests for iterated constants."""

    def test_empty_products(self):
        assert iterated_rellich_constant(0, 0, 3) == 1.0
        assert iterated_hardy_constant(0, 0, 3) == pytest.approx(hardy_constant(0, 3))

    def test_one_step(self):
        assert iterated_rellich_constant(1, 0, 9) == pytest.approx(rellich_constant(0, 9))
        assert iterated_hardy_constant(1, 0, 9) == pytest.approx(hardy_constant(0, 9) * rellich_constant(-1, 9))


class TestExplicitConstant:
    """Tests for the named lookup."""

    def test_lattice_bounds(self):
        assert explicit_constant("C1_upper", 0, 3) == pytest.approx(12.0)
        assert explicit_constant("C2_upper", 1, 2) == pytest.approx(64.0)
        assert explicit_constant("C1_lower", 0, 3) == pytest.approx(12 / 55)
        assert explicit_constant("C2_lower", 0, 3) == pytest.approx(1.0)

    def test_lower_below_upper(self):
        for d in range(3, 30):
            assert explicit_constant("C1_lower", 0, d) <= explicit_constant("C1_upper", 0, d)

    def test_iterated_needs_m(self):
        with pytest.raises(InequalityError):
            explicit_constant("C", 0, 9)

    def test_unknown_name(self):
        with pytest.raises(InequalityError) as exc:
            explicit_constant("K", 0, 9)
        assert "Available" in exc.value.message


class TestConstantTable:
    """Tests for constant_table."""

    def test_out_of_range_is_none(self):
        rows = constant_table([2, 3, 8])
        assert rows[0]["H"] is None
        assert rows[1]["H"] == pytest.approx(3 / 55)
        assert rows[1]["HR"] is None
        assert rows[2]["HR"] == pytest.approx(16 / 11)

    def test_increasing_in_d(self):
        rows = constant_table(list(range(9, 40)))
        for name in ("H", "HR", "R"):
            column = [row[name] for row in rows]
            assert all(a < b for a, b in zip(column, column[1:]))
            assert all(math.isfinite(v) for v in column)
