"""Tests for the norm quadrature: closed forms, exactness, and the Calderon rules."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rieszlab.maps import CalderonFamily, HarmonicMap, TaylorPoly, boundary_series, random_harmonic
from rieszlab.quadrature import (
    QuadratureConvergenceError,
    QuadratureSpec,
    bergman_norm,
    calderon_norm,
    calderon_power_mean,
    circle_power_mean,
    hardy_norm,
    mp_radius,
    triple_norm,
)

Z_MAP = HarmonicMap(TaylorPoly([0, 1]), TaylorPoly([0]))
ONE_PLUS_Z = HarmonicMap(TaylorPoly([1, 1]), TaylorPoly([0]))
COS_MAP = HarmonicMap(TaylorPoly([0, 0.5]), TaylorPoly([0, 0.5]))


def bilateral_coeffs(m, width):
    out = np.zeros(2 * width + 1, dtype=complex)
    for k, c in boundary_series(m).coeffs.items():
        out[k + width] = c
    return out


def exact_even_power_mean(m, half_power):
    """int_T |f|^{2*half_power} by coefficient convolutions (Parseval oracle)."""
    width = m.degree
    c = bilateral_coeffs(m, width)
    sq = np.convolve(c, np.conj(c[::-1]))  # coefficients of |f|^2
    acc = sq
    for _ in range(half_power - 1):
        acc = np.convolve(acc, sq)
    return float(acc[len(acc) // 2].real)


def test_mp_radius_of_z_is_r():
    for p in (1.5, 2.0, 7.0):
        assert abs(mp_radius(Z_MAP, p, 0.5) - 0.5) < 1e-14


def test_norms_of_constant_one():
    one = HarmonicMap(TaylorPoly([1]), TaylorPoly([0]))
    for p in (1.0, 2.0, 5.0):
        assert abs(hardy_norm(one, p) - 1.0) < 1e-14
        assert abs(bergman_norm(one, p) - 1.0) < 1e-13
        assert abs(mp_radius(one, p, 0.3) - 1.0) < 1e-14


def test_hardy_one_plus_z():
    assert abs(hardy_norm(ONE_PLUS_Z, 2.0) - math.sqrt(2.0)) < 1e-13
    # |1 + e^{it}| = 2|cos(t/2)| integrates to 4/pi; the corner needs a dense rule
    val = hardy_norm(ONE_PLUS_Z, 1.0, QuadratureSpec(n_angle=1 << 17))
    assert abs(val - 4.0 / math.pi) < 1e-8


def test_hardy_of_z_is_one_every_p():
    for p in (1.0, 1.5, 2.0, 4.0, 8.0):
        assert abs(hardy_norm(Z_MAP, p) - 1.0) < 1e-13


def test_bergman_closed_forms():
    assert abs(bergman_norm(Z_MAP, 2.0) - 1.0 / math.sqrt(2.0)) < 1e-13
    assert abs(bergman_norm(Z_MAP, 4.0) - 3.0 ** (-0.25)) < 1e-13


def test_triple_norm_examples():
    for p in (1.5, 2.0, 6.0):
        assert abs(triple_norm(Z_MAP, p) - 1.0) < 1e-13
        assert abs(triple_norm(COS_MAP, p) - 1.0 / math.sqrt(2.0)) < 1e-13


def test_triple_norm_parseval_p2():
    m = random_harmonic(8, 31)
    expected = math.sqrt(
        sum(abs(c) ** 2 for c in m.g.coeffs) + sum(abs(c) ** 2 for c in m.h.coeffs)
    )
    assert abs(triple_norm(m, 2.0) - expected) < 1e-12


@pytest.mark.parametrize("half_power", [1, 2, 3])
def test_even_power_exactness_against_convolution_oracle(half_power):
    for seed in (0, 1, 2):
        m = random_harmonic(6, seed)
        exact = exact_even_power_mean(m, half_power)
        quad = circle_power_mean(m, 2.0 * half_power, 1.0)
        assert abs(quad - exact) < 1e-12 * max(1.0, exact)


def test_bergman_radial_resolution_consistency():
    m = random_harmonic(8, 5)
    a = bergman_norm(m, 4.0, QuadratureSpec(n_angle=256, n_radial=64))
    b = bergman_norm(m, 4.0, QuadratureSpec(n_angle=256, n_radial=128))
    assert abs(a - b) < 1e-13


@given(
    st.complex_numbers(min_magnitude=1e-3, max_magnitude=10.0, allow_infinity=False, allow_nan=False),
    st.integers(min_value=0, max_value=400),
)
@settings(max_examples=60, deadline=None)
def test_norm_homogeneity(c, seed):
    m = random_harmonic(5, seed)
    p = 1.0 + (seed % 50) / 16.0
    base = hardy_norm(m, p)
    assert abs(hardy_norm(m.scaled(c), p) - abs(c) * base) < 1e-12 * max(1.0, abs(c) * base)
    baset = triple_norm(m, p)
    assert abs(triple_norm(m.scaled(c), p) - abs(c) * baset) < 1e-12 * max(1.0, abs(c) * baset)
    baseb = bergman_norm(m, p)
    assert abs(bergman_norm(m.scaled(c), p) - abs(c) * baseb) < 1e-12 * max(1.0, abs(c) * baseb)


def test_mp_radius_monotone_in_r():
    for seed in range(5):
        m = random_harmonic(6, 200 + seed)
        vals = [mp_radius(m, 2.5, r) for r in np.linspace(0.0, 1.0, 21)]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


def test_hardy_monotone_in_p():
    for seed in range(5):
        m = random_harmonic(6, 300 + seed)
        vals = [hardy_norm(m, p) for p in np.linspace(1.0, 8.0, 15)]
        assert all(b >= a - 1e-11 for a, b in zip(vals, vals[1:]))


def test_p_validation():
    with pytest.raises(ValueError):
        hardy_norm(Z_MAP, 0.9)
    with pytest.raises(ValueError):
        triple_norm(Z_MAP, 65.0)
    with pytest.raises(ValueError):
        mp_radius(Z_MAP, 2.0, 1.5)
    assert hardy_norm(Z_MAP, 1.0) == pytest.approx(1.0)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(n_angle=2)
    with pytest.raises(ValueError):
        QuadratureSpec(boundary_epsilon=0.5)
    with pytest.raises(ValueError):
        QuadratureSpec(adaptive_depth=0)
    m = random_harmonic(64, 4)
    with pytest.raises(ValueError, match="4\\*degree"):
        hardy_norm(m, 2.0, QuadratureSpec(n_angle=128))


def test_calderon_mean_matches_secant_closed_form():
    # int_T |cot(t/2)|^a dsigma = sec(pi a / 2) for 0 < a < 1
    for gamma, p in ((0.2, 1.5), (0.45, 2.5), (0.995 * math.pi / 3.0, 1.5)):
        fam = CalderonFamily(gamma=gamma, p=p)
        a = fam.modulus_exponent
        mean = calderon_power_mean(fam, 1.0, 0.0)
        assert abs(mean - 1.0 / math.cos(math.pi * a / 2.0)) < 1e-8 / math.cos(
            math.pi * a / 2.0
        )


def test_calderon_component_relations():
    fam = CalderonFamily(gamma=0.35, p=1.5)
    u = calderon_norm(fam, component="re")
    v = calderon_norm(fam, component="im")
    g = calderon_norm(fam, component="analytic")
    conj = calderon_norm(fam, component="conjugate")
    assert abs(v / u - math.tan(0.35)) < 1e-9
    assert abs(g / u - 1.0 / math.cos(0.35)) < 1e-9
    assert conj >= v  # |v - i| >= |v| pointwise


def test_calderon_hardy_norm_dispatch():
    fam = CalderonFamily(gamma=0.3, p=1.5)
    assert abs(hardy_norm(fam, 1.5) - calderon_norm(fam, 1.5, "analytic")) < 1e-14


def test_calderon_errors():
    fam = CalderonFamily(gamma=0.3, p=1.5)
    with pytest.raises(ValueError):
        calderon_power_mean(fam, 1.0, 0.0, p=6.0)  # a >= 1: not integrable
    with pytest.raises(ValueError):
        calderon_norm(fam, component="nope")
    with pytest.raises(QuadratureConvergenceError) as exc:
        calderon_power_mean(fam, 1.0, 0.0, rel_tol=1e-15, max_refinements=0)
    assert exc.value.achieved > 0.0
