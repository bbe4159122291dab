"""Rational tetra-inner functions.

A validated triple (e1, e2, d) of polynomials with reflection index n
represents the map

    x(lam) = (e1(lam)/d(lam), e2(lam)/d(lam), d~n(lam)/d(lam)),

where d~n is the n-reflection of d.  Validation enforces the degree
bounds, nonvanishing of d on the disc (closed disc in strict mode),
the reflection identity e1 = e2~n, and modulus domination of both
numerators by d on the circle.

The royal polynomial reflect(d, n) * d - e1 * e2 vanishes exactly where
the function meets the variety {x1 x2 = x3}; its disc-closure zeros are
the royal nodes, counted with halved multiplicity on the circle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import boundary
from .boundary import TetraPoint, psi
from .errors import (
    DenominatorVanishes,
    InvalidSuperficialSpec,
    OddCircleRootOrder,
    RoyalVarietyFunction,
    SamplingTooCoarse,
    UndefinedOmegaOrK,
    ValidationError,
)
from .polycx import (
    Polynomial,
    coeff_distance,
    from_roots,
    is_n_symmetric,
    roots as poly_roots,
    unit_circle,
)

DEFAULT_CIRCLE_TOL = 1e-6
DEFAULT_CLUSTER_TOL = 1e-7
REFLECTION_TOL = 1e-10
MODULUS_SLACK = 1e-9
VALIDATION_SAMPLES = 4096
# A circle root of even order 2v splits under coefficient noise into simple
# roots spread ~ noise^(1/2v) around it, further amplified by nearby nodes;
# the royal-node circle test needs a band above that scale or a split pair
# straddles it and half the mass is misread as an interior node with its
# reflection discarded.  1e-4 clears observed splits (~1e-5 at the minimum
# supported node separation 0.05) while staying far below that separation.
NEAR_CIRCLE_NOISE_BAND = 1e-4


@dataclass(frozen=True)
class TetraRational:
    e1: Polynomial
    e2: Polynomial
    d: Polynomial
    n: int
    strict: bool = True

    @property
    def d_reflected(self) -> Polynomial:
        return self.d.reflect(self.n)


@dataclass(frozen=True)
class RoyalNode:
    location: complex
    raw_order: int
    multiplicity: int
    on_circle: bool


@dataclass(frozen=True)
class TypeNK:
    n: int
    k: int
    royal_variety_flag: bool = False


@dataclass(frozen=True)
class BlaschkeSpec:
    """Finite Blaschke product data: zeros inside the open disc, |constant| = 1."""

    zeros: tuple = ()
    unimodular_constant: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(complex(z) for z in self.zeros))
        c = complex(self.unimodular_constant)
        object.__setattr__(self, "unimodular_constant", c)
        if abs(abs(c) - 1.0) > 1e-12:
            raise InvalidSuperficialSpec(f"|constant| = {abs(c)} is not 1")
        for z in self.zeros:
            if abs(z) >= 1.0 - 1e-12:
                raise InvalidSuperficialSpec(f"Blaschke zero {z} not strictly inside the disc")


@dataclass(frozen=True)
class SuperficialSpec:
    """Boundary-valued family: beta weights with |beta1| + |beta2| = 1."""

    beta1: complex
    beta2: complex
    x3: BlaschkeSpec

    def __post_init__(self):
        if abs(abs(self.beta1) + abs(self.beta2) - 1.0) > 1e-12:
            raise InvalidSuperficialSpec(
                f"|beta1| + |beta2| = {abs(self.beta1) + abs(self.beta2)} is not 1")


@dataclass(frozen=True)
class ConditionCheck:
    code: str
    passed: bool
    detail: str


def validation_report(e1: Polynomial, e2: Polynomial, d: Polynomial, n: int,
                      strict: bool = True,
                      circle_tol: float = DEFAULT_CIRCLE_TOL,
                      samples: int = VALIDATION_SAMPLES) -> list[ConditionCheck]:
    """Per-condition report for the representation conditions."""
    checks = []

    deg_ok = all(p.is_zero or p.degree <= n for p in (e1, e2, d))
    checks.append(ConditionCheck(
        "DegreeBound", deg_ok,
        f"deg(e1)={e1.degree}, deg(e2)={e2.degree}, deg(d)={d.degree}, bound n={n}"))

    if d.is_zero:
        checks.append(ConditionCheck("DVanishesInDisc", False, "d is identically zero"))
    else:
        limit = 1.0 + circle_tol if strict else 1.0 - circle_tol
        bad = []
        if d.degree >= 1:
            bad = [(loc, order) for loc, order in poly_roots(d).entries
                   if abs(loc) < limit]
        mode = "closed disc" if strict else "open disc"
        checks.append(ConditionCheck(
            "DVanishesInDisc", not bad,
            f"roots of d inside the {mode}: {bad if bad else 'none'}"))

    if not deg_ok:
        checks.append(ConditionCheck("ReflectionMismatch", False,
                                     "degree bound failed, reflection undefined"))
    else:
        dev = coeff_distance(e1, e2.reflect(n))
        tol = REFLECTION_TOL * (1.0 + max(e1.max_coeff(), e2.max_coeff()))
        checks.append(ConditionCheck(
            "ReflectionMismatch", dev <= tol,
            f"max coefficient deviation of e1 from the n-reflection of e2: {dev:.3e}"))

    grid = unit_circle(samples)
    dv = np.abs(d.eval(grid))
    slack = MODULUS_SLACK * (1.0 + float(np.max(dv)))
    worst = 0.0
    for e in (e1, e2):
        ev = np.abs(e.eval(grid))
        worst = max(worst, float(np.max(ev - dv)))
    checks.append(ConditionCheck(
        "ModulusDomination", worst <= slack,
        f"max(|e_i| - |d|) on the circle: {worst:.3e}"))
    return checks


def validate(e1: Polynomial, e2: Polynomial, d: Polynomial, n: int,
             strict: bool = True,
             circle_tol: float = DEFAULT_CIRCLE_TOL) -> TetraRational:
    """Return the validated function or raise with every violated condition."""
    checks = validation_report(e1, e2, d, n, strict=strict, circle_tol=circle_tol)
    violations = [(c.code, c.detail) for c in checks if not c.passed]
    if violations:
        raise ValidationError(violations)
    return TetraRational(e1, e2, d, n, strict=strict)


def eval_function(x: TetraRational, lam: complex) -> TetraPoint:
    """Value of the function at a point of the closed disc."""
    if abs(lam) > 1.0 + 1e-9:
        raise ValueError(f"|lam| = {abs(lam)} is outside the closed disc")
    dv = x.d.eval(lam)
    if abs(dv) < 1e-13:
        raise DenominatorVanishes(f"d({lam}) = {dv}")
    return TetraPoint(x.e1.eval(lam) / dv, x.e2.eval(lam) / dv,
                      x.d_reflected.eval(lam) / dv)


def eval_x3(x: TetraRational, lam):
    return x.d_reflected.eval(lam) / x.d.eval(lam)


def degree(x: TetraRational, circle_tol: float = DEFAULT_CIRCLE_TOL) -> int:
    """Blaschke degree of the third component.

    Counts the open-disc zeros of the n-reflection of d; circle zeros of d
    cancel against the reflection and do not contribute.
    """
    dr = x.d_reflected
    if dr.degree <= 0:
        return 0
    return sum(order for loc, order in poly_roots(dr).entries
               if abs(loc) < 1.0 - circle_tol)


def winding_number(x: TetraRational, samples: int = 4096) -> int:
    """Total winding of the third component along the circle.

    Counterclockwise orientation; consecutive-sample argument jumps of pi
    or more abort with SamplingTooCoarse.
    """
    if samples < 256:
        raise ValueError("samples must be at least 256")
    grid = unit_circle(samples)
    with np.errstate(invalid="ignore", divide="ignore"):
        vals = eval_x3(x, grid)
        closed = np.append(vals, vals[0])
        jumps = np.angle(closed[1:] / closed[:-1])
    if not np.all(np.isfinite(jumps)) or np.any(np.abs(jumps) >= np.pi - 1e-9):
        raise SamplingTooCoarse("argument jump of at least pi between samples")
    return int(np.rint(np.sum(jumps) / (2 * np.pi)))


def royal_polynomial(x: TetraRational) -> Polynomial:
    """reflect(d, n) * d - e1 * e2; identically zero on the royal variety."""
    return x.d_reflected * x.d - x.e1 * x.e2


def _royal_scale(x: TetraRational) -> float:
    return 1.0 + (x.d_reflected * x.d).max_coeff() + (x.e1 * x.e2).max_coeff()


def is_royal_variety(x: TetraRational) -> bool:
    return royal_polynomial(x).max_coeff() <= 1e-12 * _royal_scale(x)


def royal_nodes(x: TetraRational,
                cluster_tol: float = DEFAULT_CLUSTER_TOL,
                circle_tol: float = DEFAULT_CIRCLE_TOL) -> tuple[RoyalNode, ...]:
    """Disc-closure zeros of the royal polynomial with multiplicities.

    Zeros outside the closed disc are the reflections of interior zeros and
    are discarded; circle zeros must have even raw order and carry half of
    it as multiplicity.
    """
    if is_royal_variety(x):
        raise RoyalVarietyFunction("royal polynomial is identically zero")
    rx = royal_polynomial(x)
    if rx.degree <= 0:
        return ()
    ms = poly_roots(rx, cluster_tol)
    band = max(circle_tol, NEAR_CIRCLE_NOISE_BAND)
    interior = []
    near_circle = []
    for loc, order in ms.entries:
        if abs(abs(loc) - 1.0) <= band:
            near_circle.append((loc, order))
        elif abs(loc) < 1.0:
            interior.append((loc, order))
    # Reflection pairs straddling the circle threshold merge into one
    # even-order circle cluster.
    merge_tol = max(np.sqrt(circle_tol), cluster_tol)
    merged: list[list] = []
    for loc, order in near_circle:
        for grp in merged:
            if abs(grp[0] - loc) <= merge_tol:
                grp[0] = (grp[0] * grp[1] + loc * order) / (grp[1] + order)
                grp[1] += order
                break
        else:
            merged.append([loc, order])
    nodes = [RoyalNode(loc, order, order, False) for loc, order in interior]
    for loc, order in merged:
        if order % 2 != 0:
            raise OddCircleRootOrder(
                f"circle royal node near {loc:.6g} has odd order {order}")
        nodes.append(RoyalNode(complex(loc / abs(loc)), order, order // 2, True))
    nodes.sort(key=lambda nd: (round(nd.location.real, 12), round(nd.location.imag, 12)))
    return tuple(nodes)


def type_nk(x: TetraRational,
            cluster_tol: float = DEFAULT_CLUSTER_TOL,
            circle_tol: float = DEFAULT_CIRCLE_TOL) -> TypeNK:
    """Total and circle royal multiplicities, or the royal-variety flag."""
    if is_royal_variety(x):
        return TypeNK(0, 0, royal_variety_flag=True)
    nodes = royal_nodes(x, cluster_tol, circle_tol)
    total = sum(nd.multiplicity for nd in nodes)
    on_circle = sum(nd.multiplicity for nd in nodes if nd.on_circle)
    return TypeNK(total, on_circle)


def superficial_build(spec: SuperficialSpec, n_bound: int) -> TetraRational:
    """Boundary-valued function from beta weights and a Blaschke third component.

    With d the denominator of the Blaschke product (scaled so the reflection
    identity realizes the unimodular constant) and N its reflection,

        e1 = beta1 d + conj(beta2) N,   e2 = beta2 d + conj(beta1) N.

    The image of the open disc lies in the topological boundary.
    """
    k = len(spec.x3.zeros)
    if k > n_bound:
        raise InvalidSuperficialSpec(f"Blaschke degree {k} exceeds bound {n_bound}")
    gamma = np.exp(-0.5j * np.angle(spec.x3.unimodular_constant))
    d = Polynomial((gamma,))
    for z in spec.x3.zeros:
        d = d * Polynomial((1.0, -np.conj(z)))
    num = d.reflect(k)
    e1 = spec.beta1 * d + np.conj(spec.beta2) * num
    e2 = spec.beta2 * d + np.conj(spec.beta1) * num
    return validate(e1, e2, d, k)


def is_superficial(x: TetraRational, samples: int = 64, tol: float = 1e-10) -> bool:
    """Sampled test that the open-disc image stays on the topological boundary."""
    if samples < 64:
        raise ValueError("samples must be at least 64")
    angles = unit_circle(samples)
    for radius in (0.1, 0.5, 0.9):
        for lam in radius * angles:
            pt = eval_function(x, lam)
            if abs(boundary.tetra_defect(pt)) >= tol:
                return False
    return True


def psi_omega_check(x: TetraRational, spec: SuperficialSpec, samples: int = 64) -> float:
    """Max deviation of Psi(omega, x(lam)) from its constant value.

    omega = conj(beta2)/|beta2| and the constant is beta1/|beta1|; both
    beta weights must be nonzero.
    """
    if spec.beta1 == 0 or spec.beta2 == 0:
        raise UndefinedOmegaOrK("both beta weights must be nonzero")
    omega = np.conj(spec.beta2) / abs(spec.beta2)
    k_val = spec.beta1 / abs(spec.beta1)
    worst = 0.0
    angles = unit_circle(samples)
    for radius in (0.1, 0.5, 0.9):
        for lam in radius * angles:
            worst = max(worst, abs(psi(omega, eval_function(x, lam)) - k_val))
    return worst


def from_gamma_inner(s_num: Polynomial, denom: Polynomial, n: int,
                     circle_tol: float = DEFAULT_CIRCLE_TOL) -> TetraRational:
    """Symmetric embedding (s/2, s/2, p) of a rational Gamma-inner pair.

    s = s_num/denom must be n-symmetric with |s| <= 2|denom| on the circle
    and denom nonvanishing on the closed disc; failures are reported per
    condition.
    """
    violations = []
    sym_tol = 1e-10 * (1.0 + s_num.max_coeff())
    if not is_n_symmetric(s_num, n, sym_tol):
        violations.append(("GammaSymmetry", "numerator is not n-symmetric"))
    grid = unit_circle(VALIDATION_SAMPLES)
    gap = float(np.max(np.abs(s_num.eval(grid)) - 2.0 * np.abs(denom.eval(grid))))
    if gap > MODULUS_SLACK * (1.0 + denom.max_coeff()):
        violations.append(("GammaModulus", f"|s_num| exceeds 2|denom| by {gap:.3e}"))
    if denom.is_zero:
        violations.append(("GammaDenominator", "denominator is identically zero"))
    elif denom.degree >= 1 and any(abs(loc) <= 1.0 + circle_tol
                                   for loc, _ in poly_roots(denom).entries):
        violations.append(("GammaDenominator", "denominator vanishes on the closed disc"))
    if violations:
        raise ValidationError(violations)
    half = s_num.scale(0.5)
    return validate(half, half, denom, n)


def circle_trace(x: TetraRational, samples: int = 256) -> list[tuple[complex, TetraPoint, float]]:
    """Uniform circle samples with the distinguished-boundary defect |x1 - conj(x2) x3|."""
    if samples < 16:
        raise ValueError("samples must be at least 16")
    out = []
    for lam in unit_circle(samples):
        pt = eval_function(x, lam)
        defect = abs(pt.x1 - np.conj(pt.x2) * pt.x3)
        out.append((complex(lam), pt, float(defect)))
    return out


def to_json_dict(x: TetraRational) -> dict:
    def encode(p: Polynomial):
        return [[float(c.real), float(c.imag)] for c in p.coeffs]

    return {"n": x.n, "E1": encode(x.e1), "E2": encode(x.e2), "D": encode(x.d)}


def from_json_dict(data: dict, strict: bool = True) -> TetraRational:
    def decode(obj):
        return Polynomial(tuple(complex(re, im) for re, im in obj))

    return validate(decode(data["E1"]), decode(data["E2"]), decode(data["D"]),
                    int(data["n"]), strict=strict)
