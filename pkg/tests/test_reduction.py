import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from symspec.reduction import (ChartError, batch_check, chart_complex, chart_point,
                               chart_quaternionic, chart_quaternionic_as_printed,
                               complex_class_invariants, complex_output_residuals,
                               quaternion_inner, quaternionic_output_residuals,
                               random_complex_point, random_quaternionic_point)

seeds = st.integers(0, 2 ** 32 - 1)


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 5))
def test_complex_chart_constraints(seed, n):
    u, v = random_complex_point(np.random.default_rng(seed), n)
    ut, vt = chart_complex(u, v)
    assert max(complex_output_residuals(ut, vt).values()) < 1e-9
    # both sides carry the energy ||v||^2
    assert abs(np.vdot(ut, ut).real - np.linalg.norm(v) ** 2) < 1e-9 * max(1, np.linalg.norm(v) ** 2)


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 4))
def test_quaternionic_chart_constraints(seed, n):
    u, v = random_quaternionic_point(np.random.default_rng(seed), n)
    z, w = chart_quaternionic(u, v)
    assert max(quaternionic_output_residuals(z, w).values()) < 1e-9


def test_printed_quaternionic_variant_fails():
    u, v = random_quaternionic_point(np.random.default_rng(0), 2)
    z, w = chart_quaternionic_as_printed(u, v)
    assert max(quaternionic_output_residuals(z, w).values()) > 1e-3


def test_class_invariants_are_phase_invariant():
    u, v = random_complex_point(np.random.default_rng(5), 3)
    ut, vt = chart_complex(u, v)
    ph = np.exp(0.7j)
    assert np.allclose(complex_class_invariants(ut, vt),
                       complex_class_invariants(ph * ut, vt / ph))


def test_gates():
    u = np.array([1, 0, 0], dtype=complex)
    with pytest.raises(ChartError, match="nonzero"):
        chart_complex(u, np.zeros(3))
    with pytest.raises(ChartError, match="X_C"):
        chart_complex(u, np.array([1, 1, 0]))
    with pytest.raises(ChartError, match="X_C"):
        chart_complex(2 * u, np.array([0, 1, 0]))
    uq = np.array([1, 0, 0, 0], dtype=complex)
    # orthogonal in the complex part but not in the j part
    with pytest.raises(ChartError, match="X_H"):
        chart_quaternionic(uq, np.array([0, 1, 0, 0], dtype=complex))
    with pytest.raises(ValueError):
        chart_complex(u, np.array([0, 1]))


def test_quaternion_inner_norm():
    u, _ = random_quaternionic_point(np.random.default_rng(2), 2)
    c, j = quaternion_inner(u, u)
    assert abs(c - 1) < 1e-12 and abs(j) < 1e-12


def test_chart_point_and_batch():
    u, v = random_complex_point(np.random.default_rng(1), 2)
    assert max(chart_point(u, v, "complex").residuals.values()) < 1e-12
    with pytest.raises(ValueError):
        chart_point(u, v, "octonionic")
    assert batch_check("complex", 20, 3) < 1e-9
    assert batch_check("quaternionic", 20, 3) < 1e-9
