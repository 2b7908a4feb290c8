from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addspec import (
    ExponentPair,
    PiecewisePolynomial,
    alternating_zigzag_norm,
    assemble,
    collinear_failure_demo,
    combination_norm_sq,
    exp_inner,
    extremal_eigenvalues,
    find_zigzag_loop,
    identity_deviation,
    l_space,
    l_space_onb,
    parseval_residual,
    plus_space,
    riesz_section_certificate,
    staircase_zigzag,
    t_space,
)
from addspec.additive_space import support_intervals
from addspec.errors import MalformedInputError
from addspec.gram import constant_pair, random_piecewise_linear

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def test_assemble_identity_for_antidiagonal():
    g = assemble(l_space(), l_space_onb(16).points)
    assert identity_deviation(g) < 1e-12


def test_assemble_single_pair():
    g = assemble(t_space(), [ExponentPair("1/3", "-2/5")])
    assert g.entries.shape == (1, 1)
    assert g.entries[0, 0] == 1.0


def test_assemble_known_two_by_two():
    # quad-verified off-diagonal value 1/2 for the origin-centered space
    g = assemble(plus_space(), [ExponentPair(0, 0), ExponentPair(1, 0)])
    assert g.entries[0, 1] == pytest.approx(0.5, abs=1e-12)
    assert g.entries[1, 0] == pytest.approx(0.5, abs=1e-12)


def test_assemble_rejects_bad_input():
    with pytest.raises(MalformedInputError):
        assemble(l_space(), [ExponentPair(0, 0), ExponentPair(0, 0)])
    with pytest.raises(MalformedInputError):
        assemble(l_space(), [])
    with pytest.raises(MalformedInputError):
        assemble(l_space(), l_space_onb(3).points, cap=4)


@settings(max_examples=60, deadline=None)
@given(
    pts=st.sets(st.tuples(rationals, rationals), min_size=2, max_size=6),
)
def test_assembled_matrix_is_hermitian_with_unit_diagonal(pts):
    s = t_space()
    pairs = [ExponentPair(a, b) for a, b in sorted(pts)]
    g = assemble(s, pairs)
    n = len(pairs)
    assert np.max(np.abs(g.entries - g.entries.conj().T)) < 1e-12
    assert np.max(np.abs(np.diag(g.entries) - 1)) == 0
    # entries recomputed independently of the mirroring
    for i in range(n):
        for j in range(n):
            assert g.entries[i, j] == pytest.approx(
                exp_inner(s, pairs[i], pairs[j]), abs=1e-12
            )


def test_extremal_eigenvalues():
    g = assemble(l_space(), l_space_onb(8).points)
    lo, hi = extremal_eigenvalues(g)
    assert lo == pytest.approx(1.0, abs=1e-10)
    assert hi == pytest.approx(1.0, abs=1e-10)
    g2 = assemble(plus_space(), [ExponentPair(0, 0), ExponentPair(1, 0)])
    lo, hi = extremal_eigenvalues(g2)
    assert lo == pytest.approx(0.5, abs=1e-10)
    assert hi == pytest.approx(1.5, abs=1e-10)


def test_certificate_degenerate_on_loop(rectangle_points):
    cert = riesz_section_certificate(l_space(), rectangle_points.points, [2, 4])
    assert cert.verdict == "degenerate"
    assert cert.null_combination is not None
    q = combination_norm_sq(l_space(), cert.null_combination)
    assert abs(q) < 1e-10
    # the null vector is the +1/-1 alternation up to phase and normalization
    mags = sorted(abs(c) for _, c in cert.null_combination.terms)
    assert mags == pytest.approx([0.5] * 4, abs=1e-10)


def test_certificate_consistent_on_orthonormal_set():
    pairs = l_space_onb(16).points
    cert = riesz_section_certificate(l_space(), pairs, [5, 11, 33])
    assert cert.verdict == "riesz-consistent"
    assert cert.floor == pytest.approx(1.0, abs=1e-10)


def test_certificate_monotone_sections():
    # interlacing: lambda_min non-increasing, lambda_max non-decreasing
    rng = np.random.default_rng(3)
    pool = [
        ExponentPair(Fraction(n, 2), Fraction(m, 2))
        for n in range(-3, 4)
        for m in range(-3, 4)
    ]
    idx = rng.choice(len(pool), size=12, replace=False)
    pairs = [pool[i] for i in idx]
    cert = riesz_section_certificate(t_space(), pairs, [3, 6, 9, 12])
    for a, b in zip(cert.lambda_min, cert.lambda_min[1:]):
        assert b <= a + 1e-10
    for a, b in zip(cert.lambda_max, cert.lambda_max[1:]):
        assert b >= a - 1e-10


def test_certificate_rejects_bad_sizes():
    pairs = l_space_onb(4).points
    with pytest.raises(MalformedInputError):
        riesz_section_certificate(l_space(), pairs, [])
    with pytest.raises(MalformedInputError):
        riesz_section_certificate(l_space(), pairs, [4, 2])
    with pytest.raises(MalformedInputError):
        riesz_section_certificate(l_space(), pairs, [99])


# ---------------------------------------------------------------------------
# Parseval residuals.
# ---------------------------------------------------------------------------


def test_parseval_constant_is_exact():
    s = l_space()
    for N in (0, 2, 6):
        r = parseval_residual(s, l_space_onb(N).points, constant_pair(s))
        assert abs(r) < 1e-12


def test_parseval_tail_energy_matches_oracle():
    # independent oracle: adaptive quadrature of the half-integer coefficients
    # of x on [0,1] folded over [-1,1]; frozen values below
    s = l_space()
    f = PiecewisePolynomial.monomial(support_intervals(s.mu), 1)
    g = PiecewisePolynomial.constant(support_intervals(s.nu), 0.0)
    expected = {
        0: 0.104166666667,
        2: 0.020308962381,
        5: 0.009200964886,
        8: 0.005959713426,
    }
    prev = float("inf")
    for N, want in expected.items():
        r = parseval_residual(s, l_space_onb(N).points, (f, g))
        assert r == pytest.approx(want, abs=1e-9)
        assert r <= prev + 1e-12
        prev = r


def test_parseval_failure_on_t_space_block():
    # exact hand computation: coefficients are (delta_m0 - delta_n0)/2, so the
    # block |m|,|n| <= 2 contributes 2 while the energy is 1
    s = t_space()
    f = PiecewisePolynomial.constant(support_intervals(s.mu), 1.0)
    g = PiecewisePolynomial.constant(support_intervals(s.nu), -1.0)
    block = [
        ExponentPair(m, n) for m in range(-2, 3) for n in range(-2, 3)
    ]
    r = parseval_residual(s, block, (f, g))
    assert r == pytest.approx(-1.0, abs=1e-10)
    assert abs(r) > 0.5


# ---------------------------------------------------------------------------
# Alternating zigzag norms.
# ---------------------------------------------------------------------------


def test_alternating_norm_on_loop(rectangle_points):
    loop = find_zigzag_loop(rectangle_points)
    for s in (l_space(), plus_space(), t_space()):
        assert alternating_zigzag_norm(s, loop) == pytest.approx(0.0, abs=1e-10)


def test_alternating_norm_staircase_unit_gap():
    # ends share the y axis side; gap y_1 - y_n = -4 makes the transform
    # factor vanish on [0,1], so the value is exactly 1/2odd * ... = 1
    z = staircase_zigzag(7, start=(1, 1))
    assert z.vertices[0].b - z.vertices[-1].b == -4
    assert alternating_zigzag_norm(l_space(), z) == pytest.approx(1.0, abs=1e-10)


def test_alternating_norm_single_point():
    z = staircase_zigzag(0)
    assert alternating_zigzag_norm(l_space(), z) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("length", [1, 2, 5, 8, 13])
def test_alternating_norm_bounded_by_two(length):
    z = staircase_zigzag(length)
    for s in (l_space(), plus_space(), t_space()):
        v = alternating_zigzag_norm(s, z)
        assert -1e-10 <= v <= 2 + 1e-10


# ---------------------------------------------------------------------------
# Collinear failure demonstration.
# ---------------------------------------------------------------------------


def test_collinear_unit_slope_constant():
    r = collinear_failure_demo(1, 16)
    assert r.ratio == 0.0  # f + rescaled g is identically zero
    assert r.energy > 0


def test_collinear_half_slope():
    r = collinear_failure_demo(Fraction(1, 2), 32)
    assert r.ratio < 1e-10


def test_collinear_random_g():
    r = collinear_failure_demo(1, 16, g="random", seed=5)
    assert r.ratio < 1e-10


def test_collinear_rejects_bad_slope():
    with pytest.raises(MalformedInputError):
        collinear_failure_demo(Fraction(3, 2), 8)
    with pytest.raises(MalformedInputError):
        collinear_failure_demo(0, 8)


def test_random_piecewise_linear_is_seed_stable():
    s = plus_space()
    a = random_piecewise_linear(support_intervals(s.nu), np.random.default_rng(9))
    b = random_piecewise_linear(support_intervals(s.nu), np.random.default_rng(9))
    assert a == b
