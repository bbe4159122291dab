"""Complex univariate polynomials, ascending coefficient order.

The zero polynomial is the empty coefficient tuple.  Trailing coefficients
of magnitude <= TRIM_TOL are dropped on construction so convolution noise
cannot inflate the formal degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeExceedsReflectionIndex, ZeroPolynomialHasAllRoots

TRIM_TOL = 1e-14
NEG_INF = float("-inf")
DEFAULT_CLUSTER_TOL = 1e-7


def _trim(coeffs):
    cs = [complex(c) for c in coeffs]
    while cs and abs(cs[-1]) <= TRIM_TOL:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self):
        """Index of the last nonzero coefficient; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> complex:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0j

    def max_coeff(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def __call__(self, z):
        return self.eval(z)

    def eval(self, z):
        """Horner evaluation; accepts a scalar or an ndarray of points."""
        if isinstance(z, np.ndarray):
            if not self.coeffs:
                return np.zeros(z.shape, dtype=complex)
            return np.polyval(np.asarray(self.coeffs[::-1], dtype=complex), z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def reflect(self, n: int) -> "Polynomial":
        """Coefficient reversal with conjugation at index n.

        Realizes f -> lambda^n * conj(f(1/conj(lambda))).  Requires
        degree <= n; the zero polynomial reflects to itself.
        """
        if self.is_zero:
            return self
        if self.degree > n:
            raise DegreeExceedsReflectionIndex(
                f"degree {self.degree} exceeds reflection index {n}")
        return Polynomial(tuple(np.conj(self.coeff(n - j)) for j in range(n + 1)))

    def conj_flip(self) -> "Polynomial":
        """Conjugate every coefficient: f -> conj(f(conj(lambda)))."""
        return Polynomial(tuple(np.conj(c) for c in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(j * c for j, c in enumerate(self.coeffs) if j >= 1))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(j) + other.coeff(j) for j in range(m)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            conv = np.convolve(np.asarray(self.coeffs, dtype=complex),
                               np.asarray(other.coeffs, dtype=complex))
            return Polynomial(tuple(conv))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        return Polynomial(tuple(c * a for a in self.coeffs))


ZERO = Polynomial()
ONE = Polynomial((1,))
LAMBDA = Polynomial((0, 1))


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def coeff_distance(p: Polynomial, q: Polynomial) -> float:
    """Max absolute coefficient difference, shorter side zero padded."""
    m = max(len(p.coeffs), len(q.coeffs))
    return max((abs(p.coeff(j) - q.coeff(j)) for j in range(m)), default=0.0)


def is_n_symmetric(p: Polynomial, n: int, tol: float = 1e-10) -> bool:
    """True iff degree(p) <= n and p coincides with its n-reflection within tol."""
    if not p.is_zero and p.degree > n:
        return False
    return coeff_distance(p, p.reflect(n)) < tol


def unit_circle(m: int) -> np.ndarray:
    """m uniform samples of the unit circle, counterclockwise from 1."""
    return np.exp(2j * np.pi * np.arange(m) / m)


@dataclass(frozen=True)
class RootMultiset:
    """Clustered roots with integer orders; orders sum to the degree."""

    entries: tuple = ()
    cluster_tol: float = DEFAULT_CLUSTER_TOL

    @property
    def total_order(self) -> int:
        return sum(order for _, order in self.entries)

    def expand(self) -> tuple:
        """Locations repeated according to order."""
        out = []
        for loc, order in self.entries:
            out.extend([loc] * order)
        return tuple(out)


def _cluster(points, tol):
    """Union-find grouping of points within pairwise distance < tol."""
    m = len(points)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(m):
        for j in range(i + 1, m):
            if abs(points[i] - points[j]) < tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(points[i])
    return list(groups.values())


def roots(p: Polynomial, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> RootMultiset:
    """All complex roots with multiplicity.

    Eigenvalues of the companion matrix of the monic normalization, one
    Newton polishing step per root, then union-find clustering of
    numerically coincident roots.
    """
    if p.is_zero:
        raise ZeroPolynomialHasAllRoots("the zero polynomial vanishes everywhere")
    if p.degree == 0:
        return RootMultiset((), cluster_tol)
    raw = np.roots(np.asarray(p.coeffs[::-1], dtype=complex))
    dp = p.derivative()
    polished = []
    for r in raw:
        fr = p.eval(r)
        dr = dp.eval(r)
        if dr != 0:
            cand = r - fr / dr
            if np.isfinite(cand) and abs(p.eval(cand)) <= abs(fr):
                r = cand
        polished.append(complex(r))
    groups = _cluster(polished, cluster_tol)
    entries = [(complex(np.mean(g)), len(g)) for g in groups]
    # group means can land within cluster_tol even when the raw points did
    # not; merge until the entry invariant holds
    changed = True
    while changed and len(entries) > 1:
        changed = False
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                (za, oa), (zb, ob) = entries[i], entries[j]
                if abs(za - zb) < cluster_tol:
                    entries[i] = ((za * oa + zb * ob) / (oa + ob), oa + ob)
                    entries.pop(j)
                    changed = True
                    break
            if changed:
                break
    entries.sort(key=lambda e: (round(e[0].real, 12), round(e[0].imag, 12)))
    return RootMultiset(tuple(entries), cluster_tol)


def from_roots(locations, leading=1.0) -> Polynomial:
    """Expand leading * prod (lambda - r) over the given root list."""
    p = Polynomial((leading,))
    for r in locations:
        p = p * Polynomial((-r, 1))
    return p


def expand(ms: RootMultiset, leading=1.0) -> Polynomial:
    """Monic-style expansion of a RootMultiset."""
    return from_roots(ms.expand(), leading)
