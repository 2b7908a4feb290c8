"""Finite-section certificates: Gram matrices, eigenvalue bounds, residuals.

A finite section can disprove but not prove: a section whose smallest
eigenvalue is (numerically) zero exhibits an explicit null combination, which
rules out a Riesz sequence outright.  A positive, stabilizing floor across
nested sections is evidence only, and the verdict labels say so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .additive_space import (
    AdditiveSpace,
    ExponentPair,
    FiniteCombination,
    PiecewisePolynomial,
    combination_norm_sq,
    exp_inner,
    pair_inner,
    pair_norm_sq,
    plus_space,
    support_intervals,
)
from .errors import MalformedInputError
from .exponents import ZigzagPath
from .measures import as_fraction

MATRIX_CAP = 4096

DEGENERATE_TOL = 1e-9
STABILITY_FLOOR = 1e-6
STABILITY_RTOL = 0.1


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian matrix of exponential inner products for an ordered pair list."""

    pairs: Tuple[ExponentPair, ...]
    entries: np.ndarray

    @property
    def size(self) -> int:
        return len(self.pairs)


def assemble(s: AdditiveSpace, pairs: Sequence[ExponentPair], cap: int = MATRIX_CAP) -> GramMatrix:
    """Closed-form Gram matrix; upper triangle computed, mirrored by conjugation."""
    pairs = tuple(pairs)
    if len(set(pairs)) != len(pairs):
        raise MalformedInputError("duplicate pairs in Gram assembly")
    n = len(pairs)
    if n == 0:
        raise MalformedInputError("empty pair list")
    if n > cap:
        raise MalformedInputError(f"section size {n} exceeds cap {cap}")
    g = np.empty((n, n), dtype=complex)
    for i in range(n):
        g[i, i] = 1.0
        for j in range(i + 1, n):
            v = exp_inner(s, pairs[i], pairs[j])
            g[i, j] = v
            g[j, i] = v.conjugate()
    g.flags.writeable = False
    return GramMatrix(pairs, g)


def identity_deviation(g: GramMatrix) -> float:
    return float(np.max(np.abs(g.entries - np.eye(g.size))))


def extremal_eigenvalues(g: GramMatrix) -> Tuple[float, float]:
    """Smallest and largest eigenvalue of the Hermitian section."""
    if g.size == 0:
        raise MalformedInputError("empty Gram matrix")
    w = np.linalg.eigvalsh(g.entries)
    return float(w[0]), float(w[-1])


@dataclass(frozen=True)
class SectionCertificate:
    """Eigenvalue record over nested Gram sections with a scoped verdict.

    degenerate       -- some section has a (numerically) zero eigenvalue; the
                        null combination attached is a disproof.
    riesz-consistent -- the smallest eigenvalue stabilized above a positive
                        floor; necessary-condition evidence, not a proof.
    indeterminate    -- still drifting at the largest section.
    """

    sizes: Tuple[int, ...]
    lambda_min: Tuple[float, ...]
    lambda_max: Tuple[float, ...]
    verdict: str
    floor: float
    null_combination: Optional[FiniteCombination] = None

    def to_body(self) -> dict:
        body = {
            "sizes": list(self.sizes),
            "lambda_min": list(self.lambda_min),
            "lambda_max": list(self.lambda_max),
            "verdict": self.verdict,
            "floor": self.floor,
        }
        if self.null_combination is not None:
            body["null_combination"] = [
                {"a": str(p.a), "b": str(p.b), "re": c.real, "im": c.imag}
                for p, c in self.null_combination.terms
            ]
        return body


def riesz_section_certificate(
    s: AdditiveSpace,
    pairs: Sequence[ExponentPair],
    sizes: Sequence[int],
    degenerate_tol: float = DEGENERATE_TOL,
    floor_tol: float = STABILITY_FLOOR,
    stability_rtol: float = STABILITY_RTOL,
) -> SectionCertificate:
    """Eigenvalue certificate over nested prefixes of ``pairs``.

    Sections are leading principal submatrices of one assembled Gram matrix,
    so they are nested and the extremal eigenvalues interlace.
    """
    pairs = tuple(pairs)
    sizes = tuple(int(n) for n in sizes)
    if not sizes or any(n <= 0 or n > len(pairs) for n in sizes):
        raise MalformedInputError("section sizes must be in 1..len(pairs)")
    if list(sizes) != sorted(sizes):
        raise MalformedInputError("section sizes must be ascending")
    full = assemble(s, pairs[: sizes[-1]])
    mins: List[float] = []
    maxs: List[float] = []
    null_comb = None
    for n in sizes:
        w = np.linalg.eigvalsh(full.entries[:n, :n])
        mins.append(float(w[0]))
        maxs.append(float(w[-1]))
        if null_comb is None and w[0] < degenerate_tol:
            _, vecs = np.linalg.eigh(full.entries[:n, :n])
            v = vecs[:, 0]
            null_comb = FiniteCombination(
                tuple((pairs[i], complex(v[i])) for i in range(n))
            )
    floor = min(mins)
    if null_comb is not None:
        verdict = "degenerate"
    elif mins[-1] >= floor_tol and (
        len(mins) >= 2 and mins[-2] - mins[-1] <= stability_rtol * mins[-2]
    ):
        verdict = "riesz-consistent"
    else:
        verdict = "indeterminate"
    return SectionCertificate(
        sizes=sizes,
        lambda_min=tuple(mins),
        lambda_max=tuple(maxs),
        verdict=verdict,
        floor=floor,
        null_combination=null_comb,
    )


def parseval_residual(
    s: AdditiveSpace,
    pairs: Sequence[ExponentPair],
    test_fn: Tuple[PiecewisePolynomial, PiecewisePolynomial],
) -> float:
    """||F||^2 - sum over pairs of |<F, e_{a,b}>|^2 for F = (f, g) on the axes.

    For an orthonormal truncation this is the (non-negative) tail energy; for
    a non-orthonormal system it can take either sign.
    """
    pairs = tuple(pairs)
    energy = pair_norm_sq(s, test_fn)
    frame_sum = sum(abs(pair_inner(s, test_fn, p)) ** 2 for p in pairs)
    return energy - frame_sum


def alternating_zigzag_norm(s: AdditiveSpace, z: ZigzagPath) -> float:
    """Squared norm of the +1,-1,... combination along a zigzag.

    Interior cancellation leaves at most one unit exponential per axis, so the
    value never exceeds 2; on a loop it is exactly 0.
    """
    verts = z.vertices[:-1] if z.is_loop else z.vertices
    coeffs = {}
    for i, p in enumerate(verts):
        coeffs[p] = coeffs.get(p, 0j) + (1.0 if i % 2 == 0 else -1.0)
    comb = FiniteCombination(tuple(coeffs.items()))
    return combination_norm_sq(s, comb)


# ---------------------------------------------------------------------------
# Test-function family: constants, low monomials, seeded piecewise-linear.
# ---------------------------------------------------------------------------


def constant_pair(s: AdditiveSpace, value=1.0):
    return (
        PiecewisePolynomial.constant(support_intervals(s.mu), value),
        PiecewisePolynomial.constant(support_intervals(s.nu), value),
    )


def monomial_pair(s: AdditiveSpace, degree_x: int, degree_y: int):
    return (
        PiecewisePolynomial.monomial(support_intervals(s.mu), degree_x),
        PiecewisePolynomial.monomial(support_intervals(s.nu), degree_y),
    )


def random_piecewise_linear(
    intervals, rng: np.random.Generator, splits: int = 1
) -> PiecewisePolynomial:
    """Random continuous-by-parts linear function on the given intervals."""
    pieces = []
    for l, r in intervals:
        l = as_fraction(l)
        r = as_fraction(r)
        cuts = [l] + [
            l + (r - l) * Fraction(k, splits + 1) for k in range(1, splits + 1)
        ] + [r]
        for lo, hi in zip(cuts, cuts[1:]):
            c0, c1 = rng.uniform(-1.0, 1.0, size=2)
            pieces.append((lo, hi, (complex(c0), complex(c1))))
    return PiecewisePolynomial(tuple(pieces))


# ---------------------------------------------------------------------------
# Collinear spectra cannot frame the symmetric origin-centered space.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CollinearFailureReport:
    slope: Fraction
    n_points: int
    frame_sum: float
    energy: float
    ratio: float

    def to_body(self) -> dict:
        return {
            "slope": str(self.slope),
            "n_points": self.n_points,
            "frame_sum": self.frame_sum,
            "energy": self.energy,
            "ratio": self.ratio,
        }


def collinear_failure_demo(a, N: int, g=None, seed: int = 0) -> CollinearFailureReport:
    """Exhibit the lower-frame-bound failure of a line spectrum {(n, a*n)}.

    On the space with both components uniform on [-1/2, 1/2], rescale g onto
    [-a/2, a/2] as gt(x) = g(x/a)/a and take f = -gt: every frame coefficient
    of F = (f, g) vanishes identically, so the ratio (frame sum)/||F||^2 is 0
    no matter how many line points are used.

    ``g`` is a PiecewisePolynomial on [-1/2, 1/2], the string "random" for a
    seeded piecewise-linear draw, or None for the constant 1.
    """
    a = as_fraction(a)
    if not (0 < a <= 1):
        raise MalformedInputError(f"slope must be in (0, 1], got {a}")
    s = plus_space()
    if g is None:
        g = PiecewisePolynomial.constant(support_intervals(s.nu), 1.0)
    elif isinstance(g, str):
        if g != "random":
            raise MalformedInputError(f"unknown test function {g!r}")
        rng = np.random.default_rng(seed)
        g = random_piecewise_linear(support_intervals(s.nu), rng, splits=2)
    g_rescaled = PiecewisePolynomial(
        tuple(
            (
                a * l,
                a * r,
                tuple(c / float(a) ** (k + 1) for k, c in enumerate(coeffs)),
            )
            for l, r, coeffs in g.pieces
        )
    )
    f = g_rescaled.negated()
    lams = list(range(-int(N), int(N) + 1))
    frame_sum = 0.0
    for n in lams:
        p = ExponentPair(n, a * n)
        frame_sum += abs(pair_inner(s, (f, g), p)) ** 2
    energy = pair_norm_sq(s, (f, g))
    if energy <= 0:
        raise MalformedInputError("test function is numerically zero")
    return CollinearFailureReport(
        slope=a,
        n_points=len(lams),
        frame_sum=frame_sum,
        energy=energy,
        ratio=frame_sum / energy,
    )
