"""Necessary conditions for an implicit quartic/cubic to be a Dupin cyclide.

The checks are necessary, not sufficient: certain degenerate surfaces
(touching spheres, a sphere with a point on it, a double sphere, a bare
circle, surfaces with few or no real points) satisfy them as well. Full
residual vectors are reported so callers and tests can see exactly which
polynomial fails; the final component verdicts live in
:mod:`dupin.components`, where the degenerate loci on the circle family
are filtered out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidVector, NotACubicCyclide
from .family import DarbouxQuartic, IntermediateDarboux
from .scalars import Scalar

# Coefficient tuple layout used internally: (b1,b2,b3, c1,c2,c3, d1,d2,d3, e1,e2,e3, f0)
_SWAP12 = (1, 0, 2)
_SWAP13 = (2, 1, 0)


@dataclass(frozen=True)
class Aggregates:
    """The symmetric building blocks of the condition polynomials."""

    B0: Scalar
    C0: Scalar
    E0: Scalar
    W1: Scalar
    W2: Scalar
    W3: Scalar
    W4: Scalar


@dataclass(frozen=True)
class QuarticConditionReport:
    """Residuals of the 12 necessary polynomials for the shifted quartic.

    K/L/M come in three index-permuted copies each (indices 1<->2 and
    1<->3 swapped simultaneously in all coefficient families); the N
    residuals are symmetric.
    """

    K1: Scalar
    K2: Scalar
    K3: Scalar
    L1: Scalar
    L2: Scalar
    L3: Scalar
    M1: Scalar
    M2: Scalar
    M3: Scalar
    N1: Scalar
    N2: Scalar
    N3: Scalar

    @property
    def all_vanish(self) -> bool:
        return all(getattr(self, f) == 0 for f in self.__dataclass_fields__)

    def as_dict(self) -> dict[str, Scalar]:
        return {f: getattr(self, f) for f in self.__dataclass_fields__}


@dataclass(frozen=True)
class CubicConditionReport:
    """Cleared residuals of the cubic necessary conditions.

    Residuals are numerators over powers of B0 (B0^3 for the linear
    coefficients, B0^4 for the constant), the smallest powers that make
    them polynomial in the input.
    """

    e1_residual: Scalar
    e2_residual: Scalar
    e3_residual: Scalar
    f0_residual: Scalar

    @property
    def all_vanish(self) -> bool:
        return all(getattr(self, f) == 0 for f in self.__dataclass_fields__)

    def as_dict(self) -> dict[str, Scalar]:
        return {f: getattr(self, f) for f in self.__dataclass_fields__}


def _coeff_tuple(q: DarbouxQuartic | IntermediateDarboux):
    if isinstance(q, IntermediateDarboux):
        z = Fraction(0)
        return ((z, z, z), (q.c1, q.c2, q.c3), (q.d1, q.d2, q.d3),
                (q.e1, q.e2, q.e3), q.f0)
    return ((q.b1, q.b2, q.b3), (q.c1, q.c2, q.c3), (q.d1, q.d2, q.d3),
            (q.e1, q.e2, q.e3), q.f0)


def _permuted(coeffs, perm):
    b, c, d, e, f0 = coeffs
    take = lambda t: tuple(t[i] for i in perm)
    return (take(b), take(c), take(d), take(e), f0)


def aggregates(q: DarbouxQuartic | IntermediateDarboux) -> Aggregates:
    (b1, b2, b3), (c1, c2, c3), (d1, d2, d3), (e1, e2, e3), _ = _coeff_tuple(q)
    return Aggregates(
        B0=b1**2 + b2**2 + b3**2,
        C0=c1 + c2 + c3,
        E0=e1**2 + e2**2 + e3**2,
        W1=c1 * c2 + c1 * c3 + c2 * c3 - d1**2 - d2**2 - d3**2,
        W2=c1 * c2 * c3 + 2 * d1 * d2 * d3 - c1 * d1**2 - c2 * d2**2 - c3 * d3**2,
        W3=(b1**2 * c1 + b2**2 * c2 + b3**2 * c3
            + 2 * b2 * b3 * d1 + 2 * b1 * b3 * d2 + 2 * b1 * b2 * d3),
        W4=(c1 * e1**2 + c2 * e2**2 + c3 * e3**2
            + 2 * d1 * e2 * e3 + 2 * d2 * e1 * e3 + 2 * d3 * e1 * e2),
    )


def _klm(coeffs):
    """K1, L1, M1 evaluated on one coefficient arrangement."""
    _, (c1, c2, c3), (d1, d2, d3), (e1, e2, e3), f0 = coeffs
    C0 = c1 + c2 + c3
    E0 = e1**2 + e2**2 + e3**2
    W1 = c1 * c2 + c1 * c3 + c2 * c3 - d1**2 - d2**2 - d3**2
    W2 = c1 * c2 * c3 + 2 * d1 * d2 * d3 - c1 * d1**2 - c2 * d2**2 - c3 * d3**2
    K1 = (c3 - c2) * e2 * e3 + d1 * (e2**2 - e3**2) + (d2 * e2 - d3 * e3) * e1
    L1 = ((W1 + 4 * f0 - (c2 + c3) ** 2 - d2**2 - d3**2) * e1
          + (C0 * d3 + c3 * d3 - d1 * d2) * e2
          + (C0 * d2 + c2 * d2 - d1 * d3) * e3)
    M1 = (2 * (c1 * e1 + d3 * e2 + d2 * e3) * (W1 + 4 * f0)
          + e1 * (W2 - C0 * W1 - 4 * E0))
    return K1, L1, M1


def quartic_dupin_conditions(q: IntermediateDarboux) -> QuarticConditionReport:
    """Exact residuals of the 12 necessary polynomials for the shifted form."""
    coeffs = _coeff_tuple(q)
    a = aggregates(q)
    f0 = q.f0
    K1, L1, M1 = _klm(coeffs)
    K2, L2, M2 = _klm(_permuted(coeffs, _SWAP12))
    K3, L3, M3 = _klm(_permuted(coeffs, _SWAP13))
    P = a.W1 + 4 * f0
    Q = a.W2 + a.C0 * a.W1 + 8 * a.C0 * f0 - 4 * a.E0
    N1 = ((4 * a.W1 + 12 * f0 - 3 * a.C0**2) * P
          - 2 * a.C0 * (a.W2 - a.C0 * a.W1 - 6 * a.E0) - 4 * a.W4)
    N2 = 4 * (a.W2 - a.C0 * a.W1 - 2 * a.E0) * P + (a.C0**2 - 4 * f0) * Q
    N3 = Q**2 - 4 * P**3
    return QuarticConditionReport(K1, K2, K3, L1, L2, L3, M1, M2, M3, N1, N2, N3)


def _cubic_e_target(coeffs):
    """B0^3 times the closed-form value forced on e1 for a cubic Dupin cyclide."""
    (b1, b2, b3), (c1, c2, c3), (d1, d2, d3), _, _ = coeffs
    B0 = b1**2 + b2**2 + b3**2
    W3 = (b1**2 * c1 + b2**2 * c2 + b3**2 * c3
          + 2 * b2 * b3 * d1 + 2 * b1 * b3 * d2 + 2 * b1 * b2 * d3)
    s = b3 * d2 + b2 * d3
    return (-b1 * (W3 - (c2 + c3) * B0) ** 2
            + 2 * b1**2 * B0 * (b3 * c3 * d2 + b2 * c2 * d3)
            - 4 * b1 * B0 * s**2
            + 2 * B0 * s * (b2**2 * c1 + b3**2 * c1 - 2 * b2 * b3 * d1)
            - 2 * B0 * b2 * b3 * (c2 - c3) * (b2 * d2 - b3 * d3)
            + b1 * B0**2 * ((c1 - c2) * (c1 - c3) - d1**2 + d2**2 + d3**2)
            + 2 * d1 * B0**2 * (b2 * d2 + b3 * d3))


def cubic_dupin_conditions(q: DarbouxQuartic) -> CubicConditionReport:
    """Exact cleared residuals of the cubic necessary conditions (a0 = 0)."""
    if q.a0 != 0:
        raise InvalidVector(f"cubic conditions require a0 = 0, got a0 = {q.a0}")
    coeffs = _coeff_tuple(q)
    a = aggregates(q)
    if a.B0 == 0:
        raise NotACubicCyclide("no cubic terms: b1 = b2 = b3 = 0",
                               {"b": [q.b1, q.b2, q.b3]})
    B0 = a.B0
    e = (q.e1, q.e2, q.e3)
    targets = (
        _cubic_e_target(coeffs),
        _cubic_e_target(_permuted(coeffs, _SWAP12)),
        _cubic_e_target(_permuted(coeffs, _SWAP13)),
    )
    e_res = tuple(4 * B0**3 * ei - ti for ei, ti in zip(e, targets))
    f0_res = (4 * B0**4 * q.f0
              - a.W3 * (a.W3 - a.C0 * B0) ** 2
              - a.W3 * a.W1 * B0**2
              - (a.W2 - a.C0 * a.W1) * B0**3)
    return CubicConditionReport(*e_res, f0_res)
