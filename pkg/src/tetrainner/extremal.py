"""Convex combinations and constructive non-extremality certificates.

Midpoint decompositions witness non-extremality in the class of rational
tetra-inner functions.  With k circle royal nodes out of n total:

  * k = 0: both components stay strictly inside the unit circle in modulus,
    so scaling them by 1 +- eps keeps the function in the class;
  * 1 <= k with 2k <= n: an n-symmetric polynomial g built from the circle
    nodes perturbs the numerators by +- t g while |e1 +- t g| <= |d| holds
    on the circle for small enough t.

The symmetric certificate goes the other way: e1 = e2 with 2k > n is
extreme.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    CircleNodesPresent,
    ExtremalityNotDisproved,
    NotSymmetric,
    NumericalSupAtOne,
    RoyalVarietyFunction,
    ThirdComponentMismatch,
)
from .polycx import Polynomial, coeff_distance, unit_circle
from .tetrafun import (
    TetraRational,
    is_royal_variety,
    royal_nodes,
    royal_polynomial,
    type_nk,
    validate,
)

SUP_SAMPLES = 4096
SAFETY = 0.9


class PerturbationMethod(enum.Enum):
    EPSILON_SCALING = "EpsilonScaling"
    G_PERTURB_EVEN = "GPerturbEven"
    G_PERTURB_ODD = "GPerturbOdd"


@dataclass(frozen=True)
class PerturbationResult:
    x_plus: TetraRational
    x_minus: TetraRational
    t_used: float
    g: Polynomial
    method: PerturbationMethod
    note: str | None = None


def convex_combine(x: TetraRational, y: TetraRational, t: float) -> TetraRational:
    """t x + (1 - t) y for functions sharing the third component.

    The denominators must be real multiples of each other (same n); other
    third components obstruct convexity and are rejected.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t = {t} is outside [0, 1]")
    if x.n != y.n:
        raise ThirdComponentMismatch(f"reflection indices differ: {x.n} vs {y.n}")
    pivot = max(range(len(x.d.coeffs)), key=lambda j: abs(x.d.coeff(j)), default=0)
    if abs(x.d.coeff(pivot)) == 0:
        raise ThirdComponentMismatch("denominator of x is zero")
    ratio = y.d.coeff(pivot) / x.d.coeff(pivot)
    scale_ref = 1.0 + y.d.max_coeff()
    if abs(ratio.imag) > 1e-10 * abs(ratio) or abs(ratio) == 0:
        raise ThirdComponentMismatch(f"denominators differ by non-real factor {ratio}")
    if coeff_distance(y.d, x.d.scale(ratio)) > 1e-10 * scale_ref:
        raise ThirdComponentMismatch("denominators are not proportional")
    ratio = ratio.real
    e1 = x.e1.scale(t) + y.e1.scale((1.0 - t) / ratio)
    e2 = x.e2.scale(t) + y.e2.scale((1.0 - t) / ratio)
    return validate(e1, e2, x.d, x.n, strict=x.strict and y.strict)


def _circle_sup(p: Polynomial, grid) -> float:
    return float(np.max(np.abs(p.eval(grid))))


def scale_nonextreme(x: TetraRational, margin: float = 0.5) -> PerturbationResult:
    """Midpoint decomposition by scaling both numerators, for k = 0.

    eps = margin * (1/s - 1) where s is the circle sup of max(|x1|, |x2|);
    with no circle royal nodes s < 1 and both scalings stay in the class.
    """
    if not 0.0 < margin < 1.0:
        raise ValueError(f"margin = {margin} is outside (0, 1)")
    if is_royal_variety(x):
        raise RoyalVarietyFunction("royal-variety functions are not handled")
    tk = type_nk(x)
    if tk.k > 0:
        raise CircleNodesPresent(
            f"{tk.k} circle royal nodes force the component sup to 1")
    grid = unit_circle(SUP_SAMPLES)
    dv = np.abs(x.d.eval(grid))
    sup = max(float(np.max(np.abs(x.e1.eval(grid)) / dv)),
              float(np.max(np.abs(x.e2.eval(grid)) / dv)))
    if sup == 0.0:
        return PerturbationResult(x, x, 1.0, Polynomial(),
                                  PerturbationMethod.EPSILON_SCALING,
                                  note="DegenerateZeroComponents")
    if sup >= 1.0 - 1e-12:
        raise NumericalSupAtOne(f"sampled component sup {sup} is at 1")
    eps = margin * (1.0 / sup - 1.0)
    x_plus = validate(x.e1.scale(1.0 + eps), x.e2.scale(1.0 + eps), x.d, x.n)
    x_minus = validate(x.e1.scale(1.0 - eps), x.e2.scale(1.0 - eps), x.d, x.n)
    return PerturbationResult(x_plus, x_minus, eps, Polynomial(),
                              PerturbationMethod.EPSILON_SCALING)


def _perturbation_polynomial(taus, n: int, k: int) -> Polynomial:
    """n-symmetric g vanishing to second order at every circle node."""
    if n % 2 == 0:
        m = n // 2
        lead = complex(np.prod([np.conj(t) for t in taus])) if taus else 1.0
        g = Polynomial((lead,)) * Polynomial((0,) * (m - k) + (1,))
        for tau in taus:
            g = g * Polynomial((-tau, 1)) * Polynomial((-tau, 1))
        return g
    m = (n - 1) // 2
    omega_sq = -np.conj(taus[0]) * complex(np.prod([np.conj(t) ** 2 for t in taus]))
    omega = np.exp(0.5j * np.angle(omega_sq)) * np.sqrt(abs(omega_sq))
    g = Polynomial((omega,)) * Polynomial((0,) * (m - k) + (1,))
    g = g * Polynomial((-taus[0], 1))
    for tau in taus:
        g = g * Polynomial((-tau, 1)) * Polynomial((-tau, 1))
    return g


def perturb_nonextreme(x: TetraRational) -> PerturbationResult:
    """Midpoint decomposition for 1 <= k with 2k <= n.

    Builds the parity-matched n-symmetric g from the circle nodes, bounds t
    by the positive slack r M of |d|^2 - |e1|^2 away from the circle nodes,
    and returns the validated pair (e1 +- t g, e2 +- t g, d).
    """
    if is_royal_variety(x):
        raise RoyalVarietyFunction("royal-variety functions are not handled")
    tk = type_nk(x)
    if tk.k == 0:
        return scale_nonextreme(x)
    if 2 * tk.k > tk.n:
        raise ExtremalityNotDisproved(
            f"type ({tk.n}, {tk.k}) has 2k > n; no decomposition is produced")
    nodes = royal_nodes(x)
    taus = []
    interior = []
    for nd in nodes:
        if nd.on_circle:
            taus.extend([nd.location] * nd.multiplicity)
        else:
            interior.extend([nd.location] * nd.multiplicity)
    n, k = tk.n, tk.k
    g = _perturbation_polynomial(taus, n, k)

    grid = unit_circle(SUP_SAMPLES)
    royal = royal_polynomial(x)
    all_nodes = taus + interior
    node_products = np.ones_like(grid, dtype=float)
    for s in all_nodes:
        node_products = node_products * np.abs(grid - s) ** 2
    pivot = int(np.argmax(node_products))
    lam0 = grid[pivot]
    r = float(np.real(lam0 ** (-n) * royal.eval(lam0)) / node_products[pivot])

    interior_product = np.ones_like(grid, dtype=float)
    for s in interior:
        interior_product = interior_product * np.abs(grid - s) ** 2
    m_const = float(np.min(interior_product))
    e1_sup = _circle_sup(x.e1, grid)
    g_sup = _circle_sup(g, grid)
    divisor = 8.0 if n % 2 == 0 else 16.0
    if e1_sup == 0.0:
        t = SAFETY * np.sqrt(r * m_const / max(g_sup, 1e-300) / (1.0 if n % 2 == 0 else 2.0))
    else:
        t = SAFETY * min(2.0 * e1_sup / g_sup, r * m_const / (divisor * e1_sup))
    tg = g.scale(t)
    x_plus = validate(x.e1 + tg, x.e2 + tg, x.d, x.n)
    x_minus = validate(x.e1 - tg, x.e2 - tg, x.d, x.n)
    method = (PerturbationMethod.G_PERTURB_EVEN if n % 2 == 0
              else PerturbationMethod.G_PERTURB_ODD)
    return PerturbationResult(x_plus, x_minus, t, g, method)


def certify_extreme_symmetric(x: TetraRational) -> bool:
    """True certifies extremality: e1 = e2 and 2k > n.

    False only means not certified by this criterion.
    """
    sym_tol = 1e-10 * (1.0 + max(x.e1.max_coeff(), x.e2.max_coeff()))
    if coeff_distance(x.e1, x.e2) > sym_tol:
        return False
    if is_royal_variety(x):
        return False
    tk = type_nk(x)
    return 2 * tk.k > tk.n


def gamma_royal(x: TetraRational) -> Polynomial:
    """Royal polynomial of the symmetric embedding (2 x1, x3).

    Equals 4 (reflect(d, n) d - e1 e2); symmetric input required.
    """
    sym_tol = 1e-10 * (1.0 + max(x.e1.max_coeff(), x.e2.max_coeff()))
    if coeff_distance(x.e1, x.e2) > sym_tol:
        raise NotSymmetric("components e1 and e2 differ beyond tolerance")
    return royal_polynomial(x).scale(4.0)
