"""Construction of tetra-inner functions from zeros and royal nodes.

Pipeline: expand the target royal polynomial R = t_plus * prod Q_sigma with
Q_sigma(lam) = (lam - sigma)(1 - conj(sigma) lam), expand
E1 = t * prod (lam - alpha1_j) * prod (1 - conj(alpha2_j) lam), factor the
circle-nonnegative function lam^-n R + |E1|^2 into |D|^2 with D outer, and
assemble

    x = (E1/D, E1~n/D, D~n/D)

with the unimodular twist omega absorbed into the denominator (d is
conj(omega) D, so x3 picks up omega^2).  The reverse direction reads the
zeros of e1 and e2 in the closed disc and the royal nodes back off a
validated function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstructionInconsistent,
    DegenerateZeroComponent,
    InvalidConstructionSpec,
    NodeOutsideClosedDisc,
    NodeZeroCollision,
    RoyalVarietyFunction,
    ValidationError,
)
from .fejriesz import factor, laurent_shift, modulus_squared_on_circle
from .polycx import Polynomial, RootMultiset, coeff_distance, roots as poly_roots
from .tetrafun import (
    DEFAULT_CIRCLE_TOL,
    DEFAULT_CLUSTER_TOL,
    RoyalNode,
    TetraRational,
    degree as tetra_degree,
    is_royal_variety,
    royal_nodes,
    royal_polynomial,
    validate,
)

DISJOINT_TOL = 1e-6
MEMBER_TOL = 1e-12


@dataclass(frozen=True)
class ConstructionSpec:
    """Input data: zero lists for x1 and x2, royal nodes, and the three parameters."""

    alpha1: tuple = ()
    alpha2: tuple = ()
    sigma: tuple = ()
    t_plus: float = 1.0
    t: complex = 1.0
    omega: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha1", tuple(complex(a) for a in self.alpha1))
        object.__setattr__(self, "alpha2", tuple(complex(a) for a in self.alpha2))
        object.__setattr__(self, "sigma", tuple(complex(s) for s in self.sigma))
        object.__setattr__(self, "t", complex(self.t))
        object.__setattr__(self, "omega", complex(self.omega))
        if len(self.alpha1) + len(self.alpha2) != len(self.sigma):
            raise InvalidConstructionSpec(
                f"zero count {len(self.alpha1)} + {len(self.alpha2)} "
                f"must equal node count {len(self.sigma)}")
        if not self.t_plus > 0:
            raise InvalidConstructionSpec(f"t_plus = {self.t_plus} must be positive")
        if self.t == 0:
            raise InvalidConstructionSpec("t must be nonzero")
        if abs(abs(self.omega) - 1.0) > 1e-12:
            raise InvalidConstructionSpec(f"|omega| = {abs(self.omega)} is not 1")
        for name, pts in (("alpha1", self.alpha1), ("alpha2", self.alpha2),
                          ("sigma", self.sigma)):
            for z in pts:
                if abs(z) > 1.0 + MEMBER_TOL:
                    raise NodeOutsideClosedDisc(f"{name} entry {z} lies outside the closed disc")
        circle_zeros = [a for a in self.alpha1 + self.alpha2
                        if abs(abs(a) - 1.0) <= DISJOINT_TOL]
        for a in circle_zeros:
            for s in self.sigma:
                if abs(a - s) <= DISJOINT_TOL:
                    raise NodeZeroCollision(
                        f"circle zero {a} collides with royal node {s}")

    @property
    def n(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class RecoveredData:
    zeros1: RootMultiset
    zeros2: RootMultiset
    nodes: tuple[RoyalNode, ...]


def build_royal_target(sigma, t_plus: float) -> Polynomial:
    """t_plus * prod (lam - sigma_j)(1 - conj(sigma_j) lam), expanded.

    The result is 2n-symmetric and lam^-n times it is nonnegative on the
    circle.
    """
    if not t_plus > 0:
        raise InvalidConstructionSpec(f"t_plus = {t_plus} must be positive")
    out = Polynomial((t_plus,))
    for s in sigma:
        s = complex(s)
        if abs(s) > 1.0 + MEMBER_TOL:
            raise NodeOutsideClosedDisc(f"royal node {s} lies outside the closed disc")
        out = out * Polynomial((-s, 1)) * Polynomial((1, -np.conj(s)))
    return out


def build_e1(alpha1, alpha2, t: complex) -> Polynomial:
    """t * prod (lam - alpha1_j) * prod (1 - conj(alpha2_j) lam), expanded."""
    if complex(t) == 0:
        raise InvalidConstructionSpec("t must be nonzero")
    out = Polynomial((complex(t),))
    for a in alpha1:
        out = out * Polynomial((-complex(a), 1))
    for a in alpha2:
        out = out * Polynomial((1, -np.conj(complex(a))))
    return out


def construct(spec: ConstructionSpec,
              circle_tol: float = DEFAULT_CIRCLE_TOL) -> TetraRational:
    """Run the full pipeline and self-check the output.

    The returned function has degree exactly n and royal polynomial equal
    to the built target; any drift raises ConstructionInconsistent.
    """
    n = spec.n
    target = build_royal_target(spec.sigma, spec.t_plus)
    e1 = build_e1(spec.alpha1, spec.alpha2, spec.t)
    trig = laurent_shift(target, n) + modulus_squared_on_circle(e1)
    d_outer = factor(trig, circle_tol)
    d = d_outer.scale(np.conj(spec.omega))
    e2 = e1.reflect(n)
    try:
        x = validate(e1, e2, d, n, strict=True, circle_tol=circle_tol)
    except ValidationError as exc:
        raise ConstructionInconsistent(f"constructed triple failed validation: {exc}") from exc
    royal = royal_polynomial(x)
    drift = coeff_distance(royal, target)
    if drift > 1e-8 * (1.0 + target.max_coeff()):
        raise ConstructionInconsistent(
            f"royal polynomial drift {drift:.3e} exceeds tolerance")
    if n > 0 and tetra_degree(x) != n:
        raise ConstructionInconsistent(
            f"constructed degree {tetra_degree(x)} differs from n = {n}")
    return x


def _disc_restricted(ms: RootMultiset, circle_tol: float) -> RootMultiset:
    kept = tuple((loc, order) for loc, order in ms.entries
                 if abs(loc) <= 1.0 + circle_tol)
    return RootMultiset(kept, ms.cluster_tol)


def recover_data(x: TetraRational,
                 cluster_tol: float = DEFAULT_CLUSTER_TOL,
                 circle_tol: float = DEFAULT_CIRCLE_TOL) -> RecoveredData:
    """Zeros of x1 and x2 in the closed disc plus the royal nodes.

    Identically zero components carry no finite zero list and are rejected;
    royal-variety functions have no node data.
    """
    if is_royal_variety(x):
        raise RoyalVarietyFunction("royal-variety functions carry no node data")
    if x.e1.is_zero or x.e2.is_zero:
        raise DegenerateZeroComponent(
            "a component of the function is identically zero; no zero list exists")
    zeros1 = (_disc_restricted(poly_roots(x.e1, cluster_tol), circle_tol)
              if x.e1.degree >= 1 else RootMultiset((), cluster_tol))
    zeros2 = (_disc_restricted(poly_roots(x.e2, cluster_tol), circle_tol)
              if x.e2.degree >= 1 else RootMultiset((), cluster_tol))
    return RecoveredData(zeros1, zeros2, royal_nodes(x, cluster_tol, circle_tol))
