"""Shared exact-arithmetic generators and frozen reference data.

Component members are generated constructively (via the family solvers)
with parameters chosen so every square root involved is rational; see the
individual helpers. All generators take a random.Random for reproducible
seeds.
"""

from __future__ import annotations

import random
from fractions import Fraction

from dupin import (CircleFamilyVector, cone_family_solve, cylinder_family_solve,
                   plane_family_solve, villarceau_complete)

F = Fraction


# ---------------------------------------------------------------- scalars

def rational(rng: random.Random, lo: int = -6, hi: int = 6, den: int = 6) -> Fraction:
    return F(rng.randint(lo, hi), rng.randint(1, den))


def nonzero_rational(rng, lo=-6, hi=6, den=6) -> Fraction:
    while True:
        x = rational(rng, lo, hi, den)
        if x != 0:
            return x


def positive_rational(rng, hi=6, den=4) -> Fraction:
    return F(rng.randint(1, hi), rng.randint(1, den))


def rational_rotation(rng) -> tuple[Fraction, Fraction]:
    """(p, q) with p^2 + q^2 = 1, via the half-angle parametrization."""
    t = rational(rng, -4, 4, 5)
    den = 1 + t * t
    return (1 - t * t) / den, 2 * t / den


def pythagorean_leg_pair(rng, n: Fraction | None = None) -> tuple[Fraction, Fraction, Fraction]:
    """(a, b, n) with a^2 + b^2 = n^2 for a rational hypotenuse n > 0."""
    if n is None:
        n = positive_rational(rng)
    p, q = rational_rotation(rng)
    return n * p, n * q, n


def pythagorean_radii(rng) -> tuple[Fraction, Fraction, Fraction]:
    """(r, b, w) with b^2 + w^2 = r^2 and 0 < b < r."""
    while True:
        m, n = rng.randint(2, 9), rng.randint(1, 8)
        if n >= m:
            continue
        scale = positive_rational(rng, 5, 4)
        r = (m * m + n * n) * scale
        b = 2 * m * n * scale
        w = (m * m - n * n) * scale
        if 0 < b < r:
            return r, b, w


# ------------------------------------------------------ component members

def villarceau_udata(rng, u0=None, horn=False):
    """u-side data (r, u0..u4) whose completion discriminant is a perfect
    square: (u2, u3) on a rational-norm circle, u1 a rational leg of a
    Pythagorean pair with that norm, u4 a rational point of the gap circle."""
    u2, u3, n = pythagorean_leg_pair(rng)
    s = rational(rng, -3, 3, 4)
    u1 = 0 if abs(s) == 1 else 2 * n * s / (1 - s * s)
    r = positive_rational(rng)
    w = F(0) if horn else nonzero_rational(rng, -3, 3, 4)
    u4 = r * n * (1 - w * w) / (1 + w * w)
    if u0 is None:
        u0 = rational(rng)
    return r, u0, u1, u2, u3, u4


def villarceau_member(rng, u0=None) -> CircleFamilyVector:
    r, u0_, u1, u2, u3, u4 = villarceau_udata(rng, u0=u0)
    sols = villarceau_complete(r, u0_, u1, u2, u3, u4)
    return rng.choice(sols)


def cone_member(rng, r=None, lam=None, u0zero=False) -> CircleFamilyVector:
    if u0zero:
        return cubic_cone_member(rng)
    r = r if r is not None else positive_rational(rng)
    lam = lam if lam is not None else nonzero_rational(rng)
    return cone_family_solve(r, lam, nonzero_rational(rng), rational(rng),
                             rational(rng), rational(rng))


def cylinder_member(rng, u0zero=False) -> CircleFamilyVector:
    """Cylinder-contact member with an engineered rational root."""
    r = positive_rational(rng)
    if u0zero:
        u2, u3, n = pythagorean_leg_pair(rng)
        u4 = rational(rng)
        v1 = -u4 + rng.choice([1, -1]) * r * n
        if u4 == 0 and v1 == 0:
            u4 = F(1)
            v1 = -1 + r * n
        return CircleFamilyVector(r, 0, 0, u2, u3, u4, v1, 0, 0, 0)
    u0 = nonzero_rational(rng)
    u2, u3 = rational(rng), rational(rng)
    k = nonzero_rational(rng)
    v1 = (k * k - r * r * (u2 * u2 + u3 * u3)) / (2 * r * r * u0)
    u4 = k - v1
    sols = cylinder_family_solve(r, u0, u2, u3, u4)
    return next(s for s in sols if s.v1 == v1)


def plane_member(rng) -> CircleFamilyVector:
    return plane_family_solve(positive_rational(rng), nonzero_rational(rng),
                              rational(rng), rational(rng), rational(rng))


def cubic_cone_member(rng) -> CircleFamilyVector:
    """u0 = 0 principal member with cone contact; v1 is forced by the
    rank conditions once lambda = 2*eps*r*u1/n is chosen."""
    u2, u3, n = pythagorean_leg_pair(rng)
    u1 = nonzero_rational(rng)
    r = positive_rational(rng)
    u4 = rational(rng)
    eps = rng.choice([1, -1])
    lam = 2 * eps * r * u1 / n
    U0 = u1 * u1 + n * n
    v1 = -u4 * U0 / (n * n) + eps * r * (u1 * u1 - n * n) / n
    return CircleFamilyVector(r, 0, u1, u2, u3, u4,
                              v1, lam * u2, lam * u3, lam * u4)


def principal_member(rng) -> CircleFamilyVector:
    kind = rng.randrange(5)
    if kind == 0:
        return cone_member(rng)
    if kind == 1:
        return cylinder_member(rng)
    if kind == 2:
        return plane_member(rng)
    if kind == 3:
        return cubic_cone_member(rng)
    return cylinder_member(rng, u0zero=True)


def random_vector(rng, r=None) -> CircleFamilyVector:
    while True:
        coords = [rational(rng) for _ in range(9)]
        if any(coords):
            return CircleFamilyVector(r if r is not None else positive_rational(rng),
                                      *coords)


def rotate_vector(vec: CircleFamilyVector, p: Fraction, q: Fraction) -> CircleFamilyVector:
    """Rotate the (u2, u3) and (v2, v3) pairs by the rotation (p, q)."""
    return vec.with_updates(
        u2=p * vec.u2 - q * vec.u3, u3=q * vec.u2 + p * vec.u3,
        v2=p * vec.v2 - q * vec.v3, v3=q * vec.v2 + p * vec.v3)


# ------------------------------------------------------------ frozen data

def gallery_vectors() -> dict[str, tuple[CircleFamilyVector, CircleFamilyVector]]:
    """The twelve gallery vectors (circle radius 1), keyed by panel."""
    V = CircleFamilyVector
    return {
        "a": (V(1, 1, F(-49, 30), 0, F(76, 15), F(323, 30),
                F(-1669, 120), 0, F(-76, 15), F(-323, 30)),
              V(1, 1, -2, -5, 0, F(17, 2), F(-93, 8), 5, 0, F(-17, 2))),
        "b": (V(1, 1, 0, -3, 0, F(9, 2), F(-9, 2), 0, 0, 0),
              V(1, 1, 0, 0, F(76, 15), F(323, 30), F(-361, 30), 0, 0, 0)),
        "c": (V(1, F(17, 15), 0, F(17, 3), 0, F(85, 6), F(-85, 6), 0, 0, 0),
              V(1, 1, 0, -3, 0, F(9, 2), F(-9, 2), 0, 0, 0)),
        "d": (V(1, 1, 0, 0, 0, -4, 8, 0, 0, 0),
              V(1, 1, 0, -3, 0, F(9, 2), F(-9, 2), 0, 0, 0)),
        "e": (V(1, 1, 1, 0, 0, 0, F(19, 8), 1, 0, 2),
              V(1, 1, F(9, 5), 0, 0, 0, F(699, 200), 1, 0, F(18, 5))),
        "f": (V(1, 1, 0, 1, 0, F(12, 13), F(2, 13), 0, F(-10, 13), 0),
              V(1, F(7, 5), 0, 1, 0, F(12, 13), F(62, 65), 0, F(-10, 13), 0)),
    }


def gaussian_rank(rows) -> int:
    """Brute-force rank of an n x 2 rational matrix by elimination."""
    m = [list(row) for row in rows]
    rank = 0
    for col in range(2):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                factor = m[i][col] / m[rank][col]
                for j in range(2):
                    m[i][j] -= factor * m[rank][j]
        rank += 1
    return rank
