"""Smooth blending along the fixed circle and constructive family solvers.

Two surfaces of the family blend smoothly along the circle iff their
gradients are proportional there, which reduces to equality of the
rational tangency function

    F(y, z) = (v2*y + v3*z + v4) / (u2*y + u3*z + u4)

on the circle. F is constant exactly when the tangent-plane envelope is a
circular cone (lambda != 0), a cylinder (lambda = 0) or the plane of the
circle (lambda = inf); for Villarceau members the envelope is an
unsupported quartic surface. The solvers below produce, for each envelope,
the family of principal-component members touching it, plus the pencil
that exhausts blending inside the Villarceau component.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .components import (Verdict, classify, principal_test, tangency_matrix,
                         villarceau_test)
from .errors import (BothSidesDegenerate, ComponentMismatch, InvalidVector,
                     NonRationalSolution, NoRealSolution)
from .family import CircleFamilyVector
from .poly import TrivariatePolynomial, poly_from_terms
from .scalars import ONE, ZERO, Scalar, rational_sqrt


@dataclass(frozen=True)
class TangencyFunction:
    """Numerator/denominator line coefficients of F on the circle."""

    v2: Scalar
    v3: Scalar
    v4: Scalar
    u2: Scalar
    u3: Scalar
    u4: Scalar

    @classmethod
    def of(cls, vec: CircleFamilyVector) -> "TangencyFunction":
        return cls(vec.v2, vec.v3, vec.v4, vec.u2, vec.u3, vec.u4)

    @property
    def numerator_zero(self) -> bool:
        return self.v2 == 0 and self.v3 == 0 and self.v4 == 0

    @property
    def denominator_zero(self) -> bool:
        return self.u2 == 0 and self.u3 == 0 and self.u4 == 0


class TangencyKind(enum.Enum):
    CONSTANT = "constant"
    INFINITE = "infinite"
    NON_CONSTANT = "non_constant"


@dataclass(frozen=True)
class ConeParameter:
    """Constant value of the tangency function, when it exists.

    kind = CONSTANT carries the finite rational value; INFINITE marks a
    zero denominator with nonzero numerator (plane envelope). NON_CONSTANT
    covers rank 2 of the tangency matrix and the fully degenerate 0/0 case
    (no constant value is defined on either).
    """

    kind: TangencyKind
    value: Scalar | None = None

    @property
    def is_zero(self) -> bool:
        return self.kind is TangencyKind.CONSTANT and self.value == 0


class EnvelopeKind(enum.Enum):
    CONE = "cone"
    CYLINDER = "cylinder"
    PLANE = "plane"
    QUARTIC = "quartic_unsupported"


@dataclass(frozen=True)
class EnvelopeSurface:
    """Tangent-plane envelope along the circle.

    Supported kinds satisfy y^2 + z^2 = (r - lambda*x/(2r))^2 (the plane
    case degenerates to x = 0); the quartic case is detected and refused.
    """

    kind: EnvelopeKind
    lam: Scalar | None
    implicit: TrivariatePolynomial | None

    def gradient_at(self, point) -> tuple[Fraction, Fraction, Fraction]:
        if self.implicit is None:
            raise ComponentMismatch("unsupported quartic envelope has no implicit form")
        return self.implicit.gradient_at(point)


def blend_check(a: CircleFamilyVector, b: CircleFamilyVector) -> bool:
    """True iff the two surfaces share tangent planes along the circle.

    Decided by cross-multiplying the two tangency functions and reducing
    the difference modulo y^2 + z^2 - r^2; exact, and immune to isolated
    zeros of either denominator on the circle.
    """
    if a.r != b.r:
        raise InvalidVector(f"circle radii differ: {a.r} != {b.r}")
    fa, fb = TangencyFunction.of(a), TangencyFunction.of(b)
    if (fa.numerator_zero and fa.denominator_zero
            and fb.numerator_zero and fb.denominator_zero):
        raise BothSidesDegenerate(
            "both tangency functions are identically 0/0 on the circle",
            {"a": list(a.coords()), "b": list(b.coords())})
    # cross = (v_a . l)(u_b . l) - (v_b . l)(u_a . l), a quadratic in (y, z)
    ayy = fa.v2 * fb.u2 - fb.v2 * fa.u2
    azz = fa.v3 * fb.u3 - fb.v3 * fa.u3
    ayz = fa.v2 * fb.u3 + fa.v3 * fb.u2 - fb.v2 * fa.u3 - fb.v3 * fa.u2
    ay = fa.v2 * fb.u4 + fa.v4 * fb.u2 - fb.v2 * fa.u4 - fb.v4 * fa.u2
    az = fa.v3 * fb.u4 + fa.v4 * fb.u3 - fb.v3 * fa.u4 - fb.v4 * fa.u3
    ac = fa.v4 * fb.u4 - fb.v4 * fa.u4
    r2 = a.r**2
    # reduce modulo z^2 -> r^2 - y^2: parts p(y) and z*q(y)
    return (ayy - azz == 0 and ay == 0 and ac + azz * r2 == 0
            and ayz == 0 and az == 0)


def tangency_constant(vec: CircleFamilyVector) -> ConeParameter:
    """Constant value of F on the circle, or NON_CONSTANT at rank 2."""
    rows = tangency_matrix(vec)
    minors = [rows[i][0] * rows[j][1] - rows[j][0] * rows[i][1]
              for i in range(3) for j in range(i + 1, 3)]
    if any(m != 0 for m in minors):
        return ConeParameter(TangencyKind.NON_CONSTANT)
    den_zero = all(u == 0 for u, _ in rows)
    num_zero = all(v == 0 for _, v in rows)
    if den_zero and num_zero:
        return ConeParameter(TangencyKind.NON_CONSTANT)
    if den_zero:
        return ConeParameter(TangencyKind.INFINITE)
    for u, v in rows:
        if u != 0:
            return ConeParameter(TangencyKind.CONSTANT, v / u)
    raise AssertionError("unreachable")


def envelope(vec: CircleFamilyVector) -> EnvelopeSurface:
    """Tangent-plane envelope of the surface along the circle."""
    lam = tangency_constant(vec)
    r = vec.r
    if lam.kind is TangencyKind.NON_CONSTANT:
        return EnvelopeSurface(EnvelopeKind.QUARTIC, None, None)
    if lam.kind is TangencyKind.INFINITE:
        plane = poly_from_terms([((1, 0, 0), ONE)])
        return EnvelopeSurface(EnvelopeKind.PLANE, None, plane)
    c = lam.value
    # y^2 + z^2 - (r - c*x/(2r))^2
    implicit = poly_from_terms([
        ((0, 2, 0), ONE),
        ((0, 0, 2), ONE),
        ((0, 0, 0), -(r**2)),
        ((1, 0, 0), c),
        ((2, 0, 0), -(c**2) / (4 * r**2)),
    ])
    kind = EnvelopeKind.CYLINDER if c == 0 else EnvelopeKind.CONE
    return EnvelopeSurface(kind, c, implicit)


def cone_family_solve(r: Scalar, lam: Scalar, u0: Scalar, u1: Scalar,
                      u2: Scalar, u3: Scalar) -> CircleFamilyVector:
    """Principal-component member touching the cone of parameter lam != 0.

    The tangency conditions force v2, v3, v4; u4 and v1 then solve the two
    remaining equations, which are linear in them.
    """
    r, lam, u0, u1, u2, u3 = (Fraction(t) for t in (r, lam, u0, u1, u2, u3))
    if lam == 0:
        raise InvalidVector("cone parameter must be nonzero (use the cylinder family)")
    if u0 == 0:
        raise InvalidVector("cone family solver requires u0 != 0")
    if r <= 0:
        raise InvalidVector("circle radius must be positive")
    r2 = r**2
    n2 = u2**2 + u3**2
    u4 = (4 * r2 * u1 * (lam * u0 - u1) + lam**2 * n2) / (2 * lam**2 * u0)
    v1 = (16 * r2**2 * (lam * u0 - u1) ** 2 + 4 * lam**2 * r2 * u1**2
          - lam**2 * (lam**2 + 4 * r2) * n2) / (8 * lam**2 * r2 * u0)
    return CircleFamilyVector(r, u0, u1, u2, u3, u4,
                              v1, lam * u2, lam * u3, lam * u4)


def cylinder_family_solve(r: Scalar, u0: Scalar, u2: Scalar, u3: Scalar,
                          u4: Scalar) -> list[CircleFamilyVector]:
    """Principal-component members touching the cylinder (lam = 0).

    u1 and the whole v-line vanish; v1 solves a quadratic. Rational roots
    are returned exactly (larger root first); negative or non-square
    discriminants raise the corresponding domain error.
    """
    r, u0, u2, u3, u4 = (Fraction(t) for t in (r, u0, u2, u3, u4))
    if r <= 0:
        raise InvalidVector("circle radius must be positive")
    r2 = r**2
    # v1^2 - 2(r^2 u0 - u4) v1 - r^2(u2^2+u3^2) + u4^2 = 0
    half = r2 * u0 - u4
    disc = half**2 + r2 * (u2**2 + u3**2) - u4**2
    if disc < 0:
        raise NoRealSolution("cylinder family: negative discriminant",
                             {"discriminant": disc})
    s = rational_sqrt(disc)
    if s is None:
        raise NonRationalSolution("cylinder family: irrational roots",
                                  {"discriminant": disc})
    roots = [half + s] if s == 0 else [half + s, half - s]
    return [CircleFamilyVector(r, u0, ZERO, u2, u3, u4, v1, ZERO, ZERO, ZERO)
            for v1 in roots]


def plane_family_solve(r: Scalar, u0: Scalar, u1: Scalar, v2: Scalar,
                       v3: Scalar) -> CircleFamilyVector:
    """Principal-component member touching the plane of the circle (lam = inf).

    Requires u0 != 0: the cubic members of this family degenerate to a
    reducible touching sphere/plane surface.
    """
    r, u0, u1, v2, v3 = (Fraction(t) for t in (r, u0, u1, v2, v3))
    if u0 == 0:
        raise InvalidVector("plane family requires u0 != 0 (cubic members degenerate)")
    if r <= 0:
        raise InvalidVector("circle radius must be positive")
    r2 = r**2
    v1 = (16 * r2**2 * u0**2 + 4 * r2 * u1**2 - v2**2 - v3**2) / (8 * r2 * u0)
    return CircleFamilyVector(r, u0, u1, ZERO, ZERO, ZERO,
                              v1, v2, v3, 2 * r2 * u1)


class TorusForm(enum.Enum):
    TUBE_CIRCLE = "I"    # circle wraps around the torus tube (cylinder contact)
    HOLE_CIRCLE = "II"   # circle wraps around the torus hole (cone contact)


def torus_recognize(vec: CircleFamilyVector) -> TorusForm | None:
    """Detect whether a principal-component member is an actual torus.

    Case I: tangent cylinder, section by the circle plane is a congruent
    circle pair. Case II: tangent cone with concentric section. Returns
    None when neither closed-form shape matches exactly.
    """
    if not principal_test(vec).is_member:
        raise ComponentMismatch("torus recognition requires a principal-component member",
                                {"witness": principal_test(vec).as_dict()})
    if vec.u0 == 0:
        return None
    w = vec.scaled(ONE / vec.u0)
    r2 = w.r**2
    if (w.v2 == 0 and w.v3 == 0 and w.v4 == 0
            and w.u2**2 + w.u3**2 == 2 * w.u4 and w.v1 == -w.u4):
        return TorusForm.TUBE_CIRCLE
    lam = tangency_constant(w)
    if (lam.kind is TangencyKind.CONSTANT and lam.value != 0
            and w.u2 == 0 and w.u3 == 0 and w.v2 == 0 and w.v3 == 0):
        c = lam.value
        u4_expect = 2 * r2 * w.u1 * (c - w.u1) / c**2
        v1_expect = (c**2 * w.u1**2 + 4 * r2 * (c - w.u1) ** 2) / (2 * c**2)
        if w.u4 == u4_expect and w.v1 == v1_expect and w.v4 == c * w.u4:
            return TorusForm.HOLE_CIRCLE
    return None


def villarceau_pencil(vec: CircleFamilyVector, t: Scalar) -> CircleFamilyVector:
    """Perturb a Villarceau member by t times the squared-circle surface
    (x^2+y^2+z^2-r^2)^2 + 4 r^2 x^2; only u0 and v1 move.

    The pencil exhausts all smooth blends with the given member inside
    the Villarceau component.
    """
    verdict = classify(vec).verdict
    if verdict is not Verdict.VILLARCEAU_DUPIN:
        raise ComponentMismatch(
            f"pencil requires a Villarceau member, got {verdict.value}",
            {"witness": villarceau_test(vec).as_dict()})
    t = Fraction(t)
    return vec.with_updates(u0=vec.u0 + t, v1=vec.v1 + 2 * vec.r**2 * t)
