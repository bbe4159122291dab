"""Shared generators for randomized sweeps."""

import numpy as np

from tetrainner.construct import ConstructionSpec
from tetrainner.polycx import Polynomial, from_roots


def random_disc_point(rng, radius=0.95):
    return complex(radius * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random()))


def random_circle_point(rng):
    return complex(np.exp(2j * np.pi * rng.random()))


def separated_points(rng, count, sep, draw):
    """Rejection-sample `count` points pairwise at least `sep` apart."""
    pts = []
    attempts = 0
    while len(pts) < count:
        cand = draw(rng)
        attempts += 1
        if attempts > 20000:
            raise RuntimeError("could not place separated points")
        if all(abs(cand - p) >= sep for p in pts):
            pts.append(cand)
    return pts


def random_construction_spec(rng, n, k_circle=0, sep=0.05):
    """Random valid input data: k_circle royal nodes on the circle, zeros interior."""
    placed = []
    attempts = 0
    while len(placed) < n:
        cand = (random_circle_point(rng) if len(placed) < k_circle
                else random_disc_point(rng, 0.9))
        attempts += 1
        if attempts > 50000:
            raise RuntimeError("could not place nodes")
        if all(abs(cand - p) >= sep for p in placed):
            placed.append(cand)
    sigma = list(placed)
    zeros = []
    attempts = 0
    while len(zeros) < n:
        cand = random_disc_point(rng, 0.9)
        attempts += 1
        if attempts > 50000:
            raise RuntimeError("could not place zeros")
        if all(abs(cand - p) >= sep for p in sigma + zeros):
            zeros.append(cand)
    k1 = int(rng.integers(0, n + 1))
    t_plus = float(0.5 + 1.5 * rng.random())
    t = complex((0.5 + 1.5 * rng.random()) * np.exp(2j * np.pi * rng.random()))
    omega = complex(np.exp(2j * np.pi * rng.random()))
    return ConstructionSpec(alpha1=tuple(zeros[:k1]), alpha2=tuple(zeros[k1:]),
                            sigma=tuple(sigma), t_plus=t_plus, t=t, omega=omega)


def random_outer_polynomial(rng, max_degree=8, min_mod=1.05, max_mod=3.0):
    """Outer polynomial with well separated roots, scaled to unit max coefficient."""
    deg = int(rng.integers(1, max_degree + 1))
    locs = separated_points(
        rng, deg, 0.05,
        lambda r: complex((min_mod + (max_mod - min_mod) * r.random())
                          * np.exp(2j * np.pi * r.random())))
    p = from_roots(locs, leading=complex(np.exp(2j * np.pi * rng.random())))
    return p.scale(1.0 / p.max_coeff())


def match_multiset(expected, recovered, tol):
    """Greedy one-to-one matching; returns the max matched distance."""
    expected = list(expected)
    recovered = list(recovered)
    assert len(expected) == len(recovered), (
        f"cardinality mismatch: {len(expected)} vs {len(recovered)}")
    worst = 0.0
    for e in expected:
        best = min(range(len(recovered)), key=lambda i: abs(recovered[i] - e))
        worst = max(worst, abs(recovered[best] - e))
        assert abs(recovered[best] - e) < tol, (
            f"no recovered point within {tol} of {e}")
        recovered.pop(best)
    return worst


def polynomial_close(p: Polynomial, q: Polynomial, tol: float) -> bool:
    m = max(len(p.coeffs), len(q.coeffs))
    return all(abs(p.coeff(j) - q.coeff(j)) <= tol for j in range(m))
