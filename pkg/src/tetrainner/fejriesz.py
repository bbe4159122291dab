"""Fejer-Riesz spectral factorization on the unit circle.

A trigonometric polynomial p(lam) = c0 + sum_j (c_j lam^j + conj(c_j) lam^-j)
that is nonnegative on the circle equals |D(lam)|^2 there for an outer
polynomial D.  The factorization used here is the classical one:

  * form the ordinary polynomial P(lam) = lam^n p(lam) of degree <= 2n;
  * its roots pair as (r, 1/conj(r)); keep the representative with
    |r| >= 1 from every pair;
  * roots within circle_tol of the unit circle must occur to even order
    and contribute half of it;
  * rebuild D from the kept roots and fix the scalar by matching p at the
    circle point where it is largest, then normalize the phase so the
    first nonzero coefficient of D is real and positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotNonnegativeOnCircle, NotTwoNSymmetric, OddCircleRootOrder
from .polycx import (
    Polynomial,
    _cluster,
    from_roots,
    is_n_symmetric,
    roots as poly_roots,
    unit_circle,
)

DEFAULT_CIRCLE_TOL = 1e-6
NONNEG_GUARD = 1e-10
CIRCLE_SAMPLES = 4096


@dataclass(frozen=True)
class TrigPolynomial:
    """Hermitian Laurent coefficients c_0..c_n; real valued on the circle."""

    coeffs: tuple = (0j,)

    def __post_init__(self):
        cs = tuple(complex(c) for c in self.coeffs) or (0j,)
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> complex:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0j

    def value(self, lam):
        """Real value at a unimodular point (scalar or ndarray)."""
        arr = np.asarray(lam, dtype=complex)
        acc = np.full(arr.shape, float(np.real(self.coeffs[0])))
        power = np.ones_like(arr)
        for c in self.coeffs[1:]:
            power = power * arr
            acc = acc + 2.0 * np.real(c * power)
        if arr.shape == ():
            return float(acc)
        return acc

    def values_on_grid(self, m: int = CIRCLE_SAMPLES) -> np.ndarray:
        return self.value(unit_circle(m))

    def __add__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return TrigPolynomial(tuple(self.coeff(j) + other.coeff(j) for j in range(m)))


def modulus_squared_on_circle(p: Polynomial) -> TrigPolynomial:
    """Trigonometric polynomial equal to |p(lam)|^2 on the circle.

    c_j = sum_k p_{k+j} conj(p_k).
    """
    if p.is_zero:
        return TrigPolynomial((0j,))
    cs = np.asarray(p.coeffs, dtype=complex)
    n = len(cs) - 1
    out = [complex(np.sum(cs[j:] * np.conj(cs[: len(cs) - j]))) for j in range(n + 1)]
    return TrigPolynomial(tuple(out))


def laurent_shift(r_poly: Polynomial, n: int) -> TrigPolynomial:
    """Laurent coefficients of lam^-n R(lam) for a 2n-symmetric R.

    The 2n-symmetry forces the shifted object to be real on the circle;
    asymmetric input is rejected.
    """
    if r_poly.is_zero:
        return TrigPolynomial(tuple(0j for _ in range(n + 1)))
    if r_poly.degree > 2 * n:
        raise NotTwoNSymmetric(f"degree {r_poly.degree} exceeds 2n = {2 * n}")
    tol = 1e-10 * (1.0 + r_poly.max_coeff())
    if not is_n_symmetric(r_poly, 2 * n, tol):
        raise NotTwoNSymmetric("polynomial is not 2n-symmetric within tolerance")
    return TrigPolynomial(tuple(r_poly.coeff(n + j) for j in range(n + 1)))


def is_outer(p: Polynomial, tol: float = 1e-9) -> bool:
    """True iff no root of p has modulus below 1 - tol."""
    if p.degree <= 0:
        return not p.is_zero
    return all(abs(loc) >= 1.0 - tol for loc, _ in poly_roots(p).entries)


def factor(p: TrigPolynomial, circle_tol: float = DEFAULT_CIRCLE_TOL) -> Polynomial:
    """Outer polynomial D with |D|^2 = p on the circle.

    Raises NotNonnegativeOnCircle when sampling finds p negative beyond
    the guard, and OddCircleRootOrder when a circle root cluster has odd
    total order.
    """
    vals = p.values_on_grid(CIRCLE_SAMPLES)
    top = float(np.max(np.abs(vals)))
    if top == 0.0:
        raise ValueError("cannot factor the identically zero trigonometric polynomial")
    if float(np.min(vals)) < -NONNEG_GUARD * (1.0 + top):
        raise NotNonnegativeOnCircle(
            f"min sampled value {float(np.min(vals)):.3e} below guard")

    n = p.order
    asc = ([np.conj(p.coeffs[n - k]) for k in range(n)]
           + [complex(np.real(p.coeffs[0]))]
           + [p.coeffs[j] for j in range(1, n + 1)])
    # ord_0(P) equals the vanishing order at infinity; strip matching ends.
    scale = max(abs(c) for c in asc)
    strip_tol = 5e-13 * scale
    while len(asc) > 1 and abs(asc[0]) <= strip_tol and abs(asc[-1]) <= strip_tol:
        asc = asc[1:-1]

    grid = unit_circle(CIRCLE_SAMPLES)
    peak = int(np.argmax(vals))
    lam_star, p_star = grid[peak], float(vals[peak])

    selected = []
    if len(asc) > 1:
        raw = np.roots(np.asarray(asc[::-1], dtype=complex))
        circle_roots = [complex(r) for r in raw if abs(abs(r) - 1.0) <= circle_tol]
        outside = [complex(r) for r in raw
                   if abs(abs(r) - 1.0) > circle_tol and abs(r) > 1.0]
        inside_count = len(raw) - len(circle_roots) - len(outside)
        if len(outside) != inside_count:
            raise OddCircleRootOrder(
                "root set is not symmetric under reflection in the circle")
        # A true circle root of order 2v scatters into 2v simple roots;
        # group on a coarser scale than the on-circle test itself.
        for group in _cluster(circle_roots, max(np.sqrt(circle_tol), 10 * circle_tol)):
            if len(group) % 2 != 0:
                raise OddCircleRootOrder(
                    f"circle root cluster near {np.mean(group):.6g} has odd order {len(group)}")
            loc = complex(np.mean(group))
            loc /= abs(loc)
            selected.extend([loc] * (len(group) // 2))
        selected.extend(outside)

    shape = from_roots(selected)
    denom = abs(shape.eval(lam_star)) ** 2
    amp = np.sqrt(max(p_star, 0.0) / denom)
    d = shape.scale(amp)
    lead = d.coeffs[0] if d.coeffs else 1.0
    for c in d.coeffs:
        if abs(c) > 0:
            lead = c
            break
    return d.scale(np.conj(lead) / abs(lead))
