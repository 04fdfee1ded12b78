"""Sparse trivariate polynomials over exact rationals.

The kernel only ever needs total degree <= 4 (the implicit surfaces are
quartic), so the degree cap is enforced on construction. Polynomials are
immutable values; all operations return new instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .scalars import ZERO, Scalar

Monomial = tuple[int, int, int]

MAX_DEGREE = 4

_BINOM = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]]


@dataclass(frozen=True)
class TrivariatePolynomial:
    """Sparse map from exponent triples (i, j, k) to nonzero coefficients."""

    coeffs: Mapping[Monomial, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for mono, c in self.coeffs.items():
            if c == 0:
                continue
            i, j, k = mono
            if i < 0 or j < 0 or k < 0 or i + j + k > MAX_DEGREE:
                raise ValueError(f"monomial {mono} outside supported degree range")
            cleaned[mono] = Fraction(c)
        object.__setattr__(self, "coeffs", cleaned)

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((sum(m) for m in self.coeffs), default=0)

    def __getitem__(self, mono: Monomial) -> Scalar:
        return self.coeffs.get(mono, ZERO)

    def terms(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(sorted(self.coeffs.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "TrivariatePolynomial") -> "TrivariatePolynomial":
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = out.get(mono, ZERO) + c
        return TrivariatePolynomial(out)

    def __sub__(self, other: "TrivariatePolynomial") -> "TrivariatePolynomial":
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = out.get(mono, ZERO) - c
        return TrivariatePolynomial(out)

    def __neg__(self) -> "TrivariatePolynomial":
        return TrivariatePolynomial({m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other: "TrivariatePolynomial") -> "TrivariatePolynomial":
        out: dict[Monomial, Fraction] = {}
        for (i1, j1, k1), c1 in self.coeffs.items():
            for (i2, j2, k2), c2 in other.coeffs.items():
                mono = (i1 + i2, j1 + j2, k1 + k2)
                out[mono] = out.get(mono, ZERO) + c1 * c2
        return TrivariatePolynomial(out)

    def scale(self, s: Scalar) -> "TrivariatePolynomial":
        s = Fraction(s)
        return TrivariatePolynomial({m: c * s for m, c in self.coeffs.items()})

    # -- calculus ----------------------------------------------------------

    def evaluate(self, point: Iterable[Scalar]) -> Fraction:
        x, y, z = (Fraction(p) for p in point)
        total = ZERO
        for (i, j, k), c in self.coeffs.items():
            total += c * x**i * y**j * z**k
        return total

    def partial(self, axis: int) -> "TrivariatePolynomial":
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.coeffs.items():
            e = mono[axis]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[axis] = e - 1
            key = tuple(lowered)
            out[key] = out.get(key, ZERO) + c * e
        return TrivariatePolynomial(out)

    def gradient_at(self, point: Iterable[Scalar]) -> tuple[Fraction, Fraction, Fraction]:
        pt = tuple(Fraction(p) for p in point)
        return (
            self.partial(0).evaluate(pt),
            self.partial(1).evaluate(pt),
            self.partial(2).evaluate(pt),
        )

    def translated(self, dx: Scalar, dy: Scalar, dz: Scalar) -> "TrivariatePolynomial":
        """Substitute (x, y, z) -> (x + dx, y + dy, z + dz)."""
        shift = (Fraction(dx), Fraction(dy), Fraction(dz))
        out: dict[Monomial, Fraction] = {}
        for (i, j, k), c in self.coeffs.items():
            # expand (x+dx)^i (y+dy)^j (z+dz)^k by binomials
            for a in range(i + 1):
                ca = c * _BINOM[i][a] * shift[0] ** (i - a)
                for b in range(j + 1):
                    cb = ca * _BINOM[j][b] * shift[1] ** (j - b)
                    for d in range(k + 1):
                        cd = cb * _BINOM[k][d] * shift[2] ** (k - d)
                        mono = (a, b, d)
                        out[mono] = out.get(mono, ZERO) + cd
        return TrivariatePolynomial(out)


def poly_from_terms(terms: Iterable[tuple[Monomial, Scalar]]) -> TrivariatePolynomial:
    out: dict[Monomial, Fraction] = {}
    for mono, c in terms:
        out[mono] = out.get(mono, ZERO) + Fraction(c)
    return TrivariatePolynomial(out)


def restrict_to_circle(poly: TrivariatePolynomial, r: Scalar) -> tuple[list[Fraction], list[Fraction]]:
    """Normal form of ``poly`` on the circle {x = 0, y^2 + z^2 = r^2}.

    Substitutes x = 0 and rewrites even/odd powers of z with
    z^2 -> r^2 - y^2, yielding p(y) + z*q(y). Returns the coefficient
    lists of p and q (ascending powers of y); the polynomial vanishes
    identically on the circle iff both are zero.
    """
    r2 = Fraction(r) ** 2
    p = [ZERO] * (MAX_DEGREE + 1)
    q = [ZERO] * (MAX_DEGREE + 1)
    for (i, j, k), c in poly.coeffs.items():
        if i != 0:
            continue
        m, odd = divmod(k, 2)
        # c * y^j * (r^2 - y^2)^m, optionally times z
        target = q if odd else p
        for a in range(m + 1):
            coeff = c * _BINOM[m][a] * r2 ** (m - a) * (-1) ** a
            target[j + 2 * a] += coeff
    while p and p[-1] == 0:
        p.pop()
    while q and q[-1] == 0:
        q.pop()
    return p, q


def vanishes_on_circle(poly: TrivariatePolynomial, r: Scalar) -> bool:
    p, q = restrict_to_circle(poly, r)
    return not p and not q
