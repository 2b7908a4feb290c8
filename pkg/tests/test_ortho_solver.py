import math
from fractions import Fraction

import numpy as np
import pytest

from addspec import (
    classify_case,
    classify_spectrum_candidates,
    residual,
    scan_residual,
    solve_families,
)
from addspec.errors import (
    MalformedInputError,
    MultiplicityOneViolation,
    UnsolvedCaseError,
)
from addspec.ortho_solver import FAMILY_TOL, SCAN_ROOT_TOL


def test_residual_at_solution_points():
    assert residual(0, 0, 0.5, -0.5) < 1e-12
    assert residual(0, 0, 1.0, 1.0) < 1e-12
    assert residual(0, 0, -2.0, 3.0) < 1e-12


def test_residual_off_solution():
    # frozen from the direct closed-form evaluation
    v = residual(Fraction(-1, 2), -1, 0.3, 0.7)
    assert v == pytest.approx(0.7077754198225027, abs=1e-12)
    assert v >= 0.1


def test_residual_rejects_zero_differences():
    with pytest.raises(MultiplicityOneViolation):
        residual(0, 0, 0.0, 1.0)
    with pytest.raises(MultiplicityOneViolation):
        residual(0, 0, 1.0, 0)
    with pytest.raises(MalformedInputError):
        residual(0, 0, float("nan"), 1.0)


def test_case_table():
    assert classify_case(0, 0) == ("L",)
    assert classify_case(Fraction(-1, 4), Fraction(-1, 4)) == ("symmetric", 2)
    assert classify_case(Fraction(-1, 3), Fraction(-1, 3)) == ("symmetric", 3)
    assert classify_case(Fraction(-1, 2), -1) == ("T",)
    assert classify_case(Fraction(-1, 2), Fraction(-1, 2)) == ("unsolved",)
    assert classify_case(Fraction(1, 5), Fraction(1, 5)) == ("unsolved",)


def test_families_for_each_case():
    fams = solve_families(0, 0)
    assert [f.kind for f in fams] == ["integer-lattice", "antidiagonal-half-integer"]
    assert fams[1].offset == Fraction(1, 2) and fams[1].step == 1
    assert fams[1].sign_coupled

    assert [f.kind for f in solve_families(Fraction(-1, 4), Fraction(-1, 4))] == [
        "integer-lattice"
    ]
    fams = solve_families(Fraction(-1, 3), Fraction(-1, 3))
    assert [f.kind for f in fams] == [
        "integer-lattice",
        "antidiagonal-odd-multiple-a-half",
    ]
    assert fams[1].offset == Fraction(3, 2) and fams[1].step == 3

    assert [f.kind for f in solve_families(Fraction(-1, 2), -1)] == ["integer-lattice"]
    assert solve_families(Fraction(-1, 2), Fraction(-1, 2)) == []


@pytest.mark.parametrize(
    "t,tp",
    [
        (Fraction(0), Fraction(0)),
        (Fraction(-1, 4), Fraction(-1, 4)),
        (Fraction(-1, 3), Fraction(-1, 3)),
        (Fraction(-1, 5), Fraction(-1, 5)),  # 2t+1 = 3/5: unsolved, no families
        (Fraction(-2, 5), Fraction(-2, 5)),  # 2t+1 = 1/5
        (Fraction(-1, 2), Fraction(-1)),
    ],
)
def test_first_hundred_members_solve_the_equation(t, tp):
    for fam in solve_families(t, tp):
        for l1, l2 in fam.members(100):
            assert residual(t, tp, float(l1), float(l2)) < FAMILY_TOL
            if fam.sign_coupled:
                assert l2 == -l1


def test_l_families_are_disjoint():
    fams = solve_families(0, 0)
    lattice = set(fams[0].members(200))
    anti = set(fams[1].members(200))
    assert lattice.isdisjoint(anti)


def test_member_enumeration_is_deterministic():
    fam = solve_families(0, 0)[1]
    assert list(fam.members(5)) == list(fam.members(5))
    lattice = solve_families(0, 0)[0]
    first = list(lattice.members(8))
    assert first == sorted(set(first), key=first.index)
    assert all(l1 != 0 and l2 != 0 for l1, l2 in first)


def test_scan_finds_root_near_family_point():
    # no exclusions: the minimum sits next to the antidiagonal member (1/2,-1/2)
    r = scan_residual(0, 0, ((0.4, 0.6), (-0.6, -0.4)), 100, families=[])
    assert r.min_residual < 0.01
    assert abs(r.argmin[0] - 0.5) < 0.02 and abs(r.argmin[1] + 0.5) < 0.02


def test_scan_t_space_recorded_oracle():
    r = scan_residual(Fraction(-1, 2), -1, ((0, 1), (0, 1)), 2000)
    # recorded at build time; the analytic diagonal corner formula
    # sinc(1-d) * 2 sin(pi d / 2) at d = 2.5 cells is the independent check
    d = 1.0 - r.argmin[0]
    analytic = (math.sin(math.pi * (1 - d)) / (math.pi * (1 - d))) * 2 * math.sin(
        math.pi * d / 2
    )
    assert r.argmin[0] == r.argmin[1]
    assert r.min_residual == pytest.approx(analytic, rel=1e-9)
    assert r.min_residual == pytest.approx(4.914866333561291e-06, rel=1e-6)
    assert r.min_residual >= SCAN_ROOT_TOL


def test_scan_symmetric_a2_off_lattice_floor():
    r = scan_residual(Fraction(-1, 4), Fraction(-1, 4), ((0, 2), (0, 2)), 1000)
    # recorded oracle value 3.3517e-5; no roots at scan tolerance off Z^2
    assert r.min_residual == pytest.approx(3.351733584963036e-05, rel=1e-6)
    assert r.min_residual >= SCAN_ROOT_TOL


def test_scan_rejects_bad_input():
    with pytest.raises(MalformedInputError):
        scan_residual(0, 0, ((0, 1), (0, 1)), 1)
    with pytest.raises(MalformedInputError):
        scan_residual(0, 0, ((1, 0), (0, 1)), 10)


def test_scan_is_deterministic():
    a = scan_residual(0, 0, ((-2, 2), (-2, 2)), 301)
    b = scan_residual(0, 0, ((-2, 2), (-2, 2)), 301)
    assert a == b


def test_classify_valid_case():
    c = classify_spectrum_candidates(0)
    assert c.verdict == "valid ONB"
    assert c.candidate_step == Fraction(1, 2)
    assert c.density_exact == 2


def test_classify_odd_case_density():
    c = classify_spectrum_candidates(Fraction(-1, 3), window=100)
    assert c.verdict == "fails Landau necessary condition"
    assert c.candidate_step == Fraction(3, 2)
    assert c.projection_step == Fraction(3, 2)
    assert c.density_exact == Fraction(2, 3)
    assert abs(c.density_window_estimate - 2 / 3) <= 1 / 100 + 1e-12


def test_classify_even_case_empty():
    c = classify_spectrum_candidates(Fraction(-1, 4))
    assert c.verdict == "fails: empty non-integer candidate"
    assert c.candidate_step is None
    assert c.density_window_estimate is None


def test_classify_rejects_unsolved():
    with pytest.raises(UnsolvedCaseError):
        classify_spectrum_candidates(Fraction(-1, 2))
    with pytest.raises(UnsolvedCaseError):
        classify_spectrum_candidates(Fraction(1, 7))
