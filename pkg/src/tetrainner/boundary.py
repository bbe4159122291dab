"""Pointwise geometry of the tetrablock and the symmetrized bidisc.

Membership of a point x = (x1, x2, x3) in the closed tetrablock is decided
by the inequality

    |x1 - conj(x2) x3| + |x2 - conj(x1) x3| <= 1 - |x3|^2,

with the extra condition |x1| <= 1 when |x3| = 1.  The distinguished
boundary is the part of the topological boundary with |x3| = 1; there
x1 = conj(x2) x3 and x2 = conj(x1) x3 hold.  The symmetrized bidisc uses
the analogous criteria on |s - conj(s) p| against 1 - |p|^2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import PsiPole

DEFAULT_MEMBERSHIP_TOL = 1e-9
MU_BISECTION_CAP = 1e6
MU_MAX_ITER = 200


@dataclass(frozen=True)
class TetraPoint:
    x1: complex
    x2: complex
    x3: complex

    def as_tuple(self):
        return (self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class GammaPoint:
    s: complex
    p: complex


@dataclass(frozen=True)
class Matrix2:
    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21


class TetraRegion(enum.Enum):
    INTERIOR = "Interior"
    TOPOLOGICAL_BOUNDARY = "TopologicalBoundary"
    DISTINGUISHED_BOUNDARY = "DistinguishedBoundary"
    OUTSIDE = "Outside"


class GammaRegion(enum.Enum):
    OPEN_G = "OpenG"
    GAMMA_BOUNDARY_TOP = "GammaBoundaryTop"
    GAMMA_DISTINGUISHED = "GammaDistinguished"
    CLOSED_GAMMA_INTERIOR_ONLY = "ClosedGammaInteriorOnly"
    OUTSIDE = "Outside"


def psi(z: complex, x: TetraPoint) -> complex:
    """The fractional map (x3 z - x1) / (x2 z - 1); pole when x2 z = 1."""
    denom = x.x2 * z - 1
    if abs(denom) < 1e-12:
        raise PsiPole(f"x2*z = {x.x2 * z} is within 1e-12 of 1")
    return (x.x3 * z - x.x1) / denom


def tetra_defect(x: TetraPoint) -> float:
    """Signed membership defect; nonpositive inside the closed tetrablock."""
    return (abs(x.x1 - np.conj(x.x2) * x.x3) + abs(x.x2 - np.conj(x.x1) * x.x3)
            - (1.0 - abs(x.x3) ** 2))


def classify_tetra(x: TetraPoint, tol: float = DEFAULT_MEMBERSHIP_TOL) -> TetraRegion:
    """Most specific region label for a point of C^3.

    Distinguished boundary before topological boundary before interior;
    the |x3| = 1 edge case additionally requires |x1| <= 1.
    """
    defect = tetra_defect(x)
    a1, a3 = abs(x.x1), abs(x.x3)
    closed = defect <= tol and (abs(a3 - 1.0) > tol or a1 <= 1.0 + tol)
    if closed and abs(a3 - 1.0) <= tol:
        return TetraRegion.DISTINGUISHED_BOUNDARY
    if defect < -tol:
        return TetraRegion.INTERIOR
    if abs(defect) <= tol and a1 <= 1.0 + tol and abs(x.x2) <= 1.0 + tol:
        return TetraRegion.TOPOLOGICAL_BOUNDARY
    return TetraRegion.OUTSIDE


def gamma_defect(g: GammaPoint) -> float:
    return abs(g.s - np.conj(g.s) * g.p) - (1.0 - abs(g.p) ** 2)


def classify_gamma(g: GammaPoint, tol: float = DEFAULT_MEMBERSHIP_TOL) -> GammaRegion:
    """Most specific region label for a point of C^2."""
    defect = gamma_defect(g)
    s_ok = abs(g.s) <= 2.0 + tol
    if s_ok and abs(abs(g.p) - 1.0) <= tol and abs(g.s - np.conj(g.s) * g.p) <= tol:
        return GammaRegion.GAMMA_DISTINGUISHED
    if s_ok and abs(defect) <= tol:
        return GammaRegion.GAMMA_BOUNDARY_TOP
    if defect < -tol:
        return GammaRegion.OPEN_G
    if s_ok and defect <= tol:
        return GammaRegion.CLOSED_GAMMA_INTERIOR_ONLY
    return GammaRegion.OUTSIDE


def pi_map(a: Matrix2) -> TetraPoint:
    """(a11, a22, det A); sends the closed matrix unit ball onto the closed tetrablock."""
    return TetraPoint(a.a11, a.a22, a.det())


def mu_diag_le_one(a: Matrix2, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    """Structured singular value test against diagonal perturbations.

    det(I - A diag(z, w)) = 1 - a11 z - a22 w + det(A) z w, so the value is
    at most one exactly when pi(A) lies in the closed tetrablock.
    """
    return classify_tetra(pi_map(a), tol) is not TetraRegion.OUTSIDE


def _mu_predicate(a: Matrix2, r: float, tol: float) -> bool:
    scaled = TetraPoint(r * a.a11, r * a.a22, r * r * a.det())
    return classify_tetra(scaled, tol) is not TetraRegion.OUTSIDE


def mu_diag_value(a: Matrix2, tol: float = 1e-9) -> float:
    """mu for diagonal perturbations, by bisection on the scaling radius.

    Scaling X by r scales (z, w) by r, so membership of
    (r a11, r a22, r^2 det A) in the closed tetrablock is monotone in r.
    Returns 0 when membership persists up to the search cap.
    """
    class_tol = DEFAULT_MEMBERSHIP_TOL
    if not _mu_predicate(a, 1.0, class_tol):
        lo, hi = 0.0, 1.0
    else:
        lo, hi = 1.0, 2.0
        while _mu_predicate(a, hi, class_tol):
            lo = hi
            hi *= 2.0
            if hi > MU_BISECTION_CAP:
                return 0.0
    for _ in range(MU_MAX_ITER):
        if hi - lo <= tol * max(lo, 1e-300):
            break
        mid = 0.5 * (lo + hi)
        if _mu_predicate(a, mid, class_tol):
            lo = mid
        else:
            hi = mid
    r_star = 0.5 * (lo + hi)
    return 1.0 / r_star


def gamma_to_tetra(g: GammaPoint) -> TetraPoint:
    """(s/2, s/2, p); lands in the closed tetrablock iff (s, p) lies in Gamma."""
    return TetraPoint(g.s / 2, g.s / 2, g.p)


def tetra_to_gamma_sum(x: TetraPoint) -> GammaPoint:
    return GammaPoint(x.x1 + x.x2, x.x3)


def tetra_to_gamma_diff(x: TetraPoint) -> GammaPoint:
    return GammaPoint(1j * x.x1 - 1j * x.x2, x.x3)


# -- random points with guaranteed region, for property sweeps ---------------

def sample_interior(rng: np.random.Generator, margin: float = 0.02) -> TetraPoint:
    """Random point of the open tetrablock via the beta parametrization.

    x1 = b1 + conj(b2) x3 and x2 = b2 + conj(b1) x3 with |b1| + |b2| < 1 and
    |x3| < 1 always lies inside; margin keeps a positive distance from the
    boundary.
    """
    m1 = rng.random()
    m2 = rng.random()
    if m1 + m2 > 1.0:
        m1, m2 = 1.0 - m1, 1.0 - m2
    shrink = 1.0 - margin
    b1 = shrink * m1 * np.exp(2j * np.pi * rng.random())
    b2 = shrink * m2 * np.exp(2j * np.pi * rng.random())
    x3 = shrink * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
    return TetraPoint(b1 + np.conj(b2) * x3, b2 + np.conj(b1) * x3, x3)


def sample_distinguished(rng: np.random.Generator) -> TetraPoint:
    """Random distinguished-boundary point: x1 = conj(x2) x3 with |x3| = 1."""
    x2 = np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
    x3 = np.exp(2j * np.pi * rng.random())
    return TetraPoint(np.conj(x2) * x3, x2, x3)


def sample_closed(rng: np.random.Generator) -> TetraPoint:
    if rng.random() < 0.5:
        return sample_interior(rng)
    return sample_distinguished(rng)


def sample_fixed_x3_closed(rng: np.random.Generator, x3: complex) -> TetraPoint:
    """Random point of the closed tetrablock slice with prescribed x3."""
    m1 = rng.random()
    m2 = rng.random()
    if m1 + m2 > 1.0:
        m1, m2 = 1.0 - m1, 1.0 - m2
    b1 = m1 * np.exp(2j * np.pi * rng.random())
    b2 = m2 * np.exp(2j * np.pi * rng.random())
    return TetraPoint(b1 + np.conj(b2) * x3, b2 + np.conj(b1) * x3, x3)


def sample_fixed_x3_distinguished(rng: np.random.Generator, x3: complex) -> TetraPoint:
    """Random distinguished-boundary point with prescribed unimodular x3."""
    x2 = np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
    return TetraPoint(np.conj(x2) * x3, x2, x3)
