"""Circle-family vectors and general implicit-surface coefficient forms.

A surface through the fixed circle {x = 0, y^2 + z^2 = r^2} is encoded by
the projective coefficient tuple [u0..u4; v1..v4] of

    u0*(x^2+y^2+z^2-r^2)^2
      + 2*(x^2+y^2+z^2-r^2)*(u1*x + u2*y + u3*z + u4)
      + 2*x*(v1*x + v2*y + v3*z + v4)  =  0.

Expanding this gives the general quartic form

    a0*(x^2+y^2+z^2)^2 + 2*(b1*x+b2*y+b3*z)*(x^2+y^2+z^2)
      + c1*x^2+c2*y^2+c3*z^2 + 2*d1*y*z+2*d2*x*z+2*d3*x*y
      + 2*e1*x+2*e2*y+2*e3*z + f0  =  0,

and, after normalizing a0 = 1 and shifting by -(b1,b2,b3)/2 to kill the
cubic terms, the intermediate form with leading (x^2+y^2+z^2)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import CubicInput, InvalidVector
from .poly import TrivariatePolynomial, poly_from_terms, restrict_to_circle
from .scalars import ONE, ZERO, Scalar, format_scalar, parse_scalar


@dataclass(frozen=True)
class CircleFamilyVector:
    """Projective point [u0..u4; v1..v4] plus the circle radius r > 0."""

    r: Scalar
    u0: Scalar
    u1: Scalar
    u2: Scalar
    u3: Scalar
    u4: Scalar
    v1: Scalar
    v2: Scalar
    v3: Scalar
    v4: Scalar

    def __post_init__(self):
        for name in ("r", "u0", "u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.r <= 0:
            raise InvalidVector(f"circle radius must be positive, got {self.r}")
        if not any(self.coords()):
            raise InvalidVector("all nine coefficients are zero")

    def coords(self) -> tuple[Fraction, ...]:
        return (self.u0, self.u1, self.u2, self.u3, self.u4,
                self.v1, self.v2, self.v3, self.v4)

    def u(self) -> tuple[Fraction, ...]:
        return (self.u0, self.u1, self.u2, self.u3, self.u4)

    def v(self) -> tuple[Fraction, ...]:
        return (self.v1, self.v2, self.v3, self.v4)

    def scaled(self, s: Scalar) -> "CircleFamilyVector":
        s = Fraction(s)
        if s == 0:
            raise InvalidVector("projective scale must be nonzero")
        return CircleFamilyVector(self.r, *(c * s for c in self.coords()))

    def with_updates(self, **kw: Scalar) -> "CircleFamilyVector":
        data = {"r": self.r, **{k: getattr(self, k) for k in
                                ("u0", "u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4")}}
        data.update(kw)
        return CircleFamilyVector(**data)

    def to_json_dict(self) -> dict:
        return {
            "r": format_scalar(self.r),
            "u": [format_scalar(c) for c in self.u()],
            "v": [format_scalar(c) for c in self.v()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CircleFamilyVector":
        from .errors import VectorFormatError

        if not isinstance(data, dict):
            raise VectorFormatError("vector payload must be a JSON object")
        try:
            r = parse_scalar(data["r"])
            u = [parse_scalar(c) for c in data["u"]]
            v = [parse_scalar(c) for c in data["v"]]
        except KeyError as exc:
            raise VectorFormatError(f"missing key {exc}") from None
        if len(u) != 5 or len(v) != 4:
            raise VectorFormatError("expected 5 u-coefficients and 4 v-coefficients")
        return cls(r, *u, *v)


@dataclass(frozen=True)
class DarbouxQuartic:
    """Coefficients of the general (possibly cubic, a0 = 0) implicit form."""

    a0: Scalar
    b1: Scalar
    b2: Scalar
    b3: Scalar
    c1: Scalar
    c2: Scalar
    c3: Scalar
    d1: Scalar
    d2: Scalar
    d3: Scalar
    e1: Scalar
    e2: Scalar
    e3: Scalar
    f0: Scalar

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not any(getattr(self, name) for name in self.__dataclass_fields__):
            raise InvalidVector("all Darboux coefficients are zero")

    def degree(self) -> int:
        return 4 if self.a0 != 0 else 3

    def polynomial(self) -> TrivariatePolynomial:
        s = self
        terms = [
            # a0*(x^2+y^2+z^2)^2
            ((4, 0, 0), s.a0), ((0, 4, 0), s.a0), ((0, 0, 4), s.a0),
            ((2, 2, 0), 2 * s.a0), ((2, 0, 2), 2 * s.a0), ((0, 2, 2), 2 * s.a0),
            # 2*(b1 x + b2 y + b3 z)*(x^2+y^2+z^2)
            ((3, 0, 0), 2 * s.b1), ((1, 2, 0), 2 * s.b1), ((1, 0, 2), 2 * s.b1),
            ((2, 1, 0), 2 * s.b2), ((0, 3, 0), 2 * s.b2), ((0, 1, 2), 2 * s.b2),
            ((2, 0, 1), 2 * s.b3), ((0, 2, 1), 2 * s.b3), ((0, 0, 3), 2 * s.b3),
            # quadratic block
            ((2, 0, 0), s.c1), ((0, 2, 0), s.c2), ((0, 0, 2), s.c3),
            ((0, 1, 1), 2 * s.d1), ((1, 0, 1), 2 * s.d2), ((1, 1, 0), 2 * s.d3),
            # linear + constant
            ((1, 0, 0), 2 * s.e1), ((0, 1, 0), 2 * s.e2), ((0, 0, 1), 2 * s.e3),
            ((0, 0, 0), s.f0),
        ]
        return poly_from_terms(terms)


@dataclass(frozen=True)
class IntermediateDarboux:
    """Shifted quartic form: leading (x^2+y^2+z^2)^2, no cubic terms."""

    c1: Scalar
    c2: Scalar
    c3: Scalar
    d1: Scalar
    d2: Scalar
    d3: Scalar
    e1: Scalar
    e2: Scalar
    e3: Scalar
    f0: Scalar

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def polynomial(self) -> TrivariatePolynomial:
        return DarbouxQuartic(ONE, ZERO, ZERO, ZERO,
                              self.c1, self.c2, self.c3,
                              self.d1, self.d2, self.d3,
                              self.e1, self.e2, self.e3, self.f0).polynomial()


def expand(vec: CircleFamilyVector) -> DarbouxQuartic:
    """Expand the circle-family form into general Darboux coefficients."""
    r2 = vec.r**2
    return DarbouxQuartic(
        a0=vec.u0,
        b1=vec.u1, b2=vec.u2, b3=vec.u3,
        c1=-2 * vec.u0 * r2 + 2 * vec.u4 + 2 * vec.v1,
        c2=-2 * vec.u0 * r2 + 2 * vec.u4,
        c3=-2 * vec.u0 * r2 + 2 * vec.u4,
        d1=ZERO, d2=vec.v3, d3=vec.v2,
        e1=vec.v4 - r2 * vec.u1,
        e2=-r2 * vec.u2,
        e3=-r2 * vec.u3,
        f0=vec.u0 * r2**2 - 2 * r2 * vec.u4,
    )


def family_polynomial(vec: CircleFamilyVector) -> TrivariatePolynomial:
    return expand(vec).polynomial()


def contains_circle(q: DarbouxQuartic, r: Scalar) -> bool:
    """True iff the surface contains the circle {x = 0, y^2 + z^2 = r^2}.

    Decided exactly: restrict to x = 0, reduce z^2 -> r^2 - y^2 to the
    normal form p(y) + z*q(y), and require both parts to vanish.
    """
    if Fraction(r) <= 0:
        raise InvalidVector("circle radius must be positive")
    p, qq = restrict_to_circle(q.polynomial(), r)
    return not p and not qq


def to_intermediate(vec: CircleFamilyVector) -> IntermediateDarboux:
    """Normalize u0 = 1 and shift by -(u1,u2,u3)/2 to kill cubic terms.

    The closed-form coefficients below agree with the generic route
    "expand, divide by u0, translate, collect" (property-tested against it).
    """
    if vec.u0 == 0:
        raise CubicInput("u0 is zero; the shifted quartic form does not exist",
                         {"u0": vec.u0})
    s = ONE / vec.u0
    u1, u2, u3, u4 = (s * vec.u1, s * vec.u2, s * vec.u3, s * vec.u4)
    v1, v2, v3, v4 = (s * vec.v1, s * vec.v2, s * vec.v3, s * vec.v4)
    r2 = vec.r**2
    U0 = u1**2 + u2**2 + u3**2
    dotuv = u1 * v1 + u2 * v2 + u3 * v3
    return IntermediateDarboux(
        c1=2 * (u4 + v1 - r2) - u1**2 - U0 / 2,
        c2=2 * (u4 - r2) - u2**2 - U0 / 2,
        c3=2 * (u4 - r2) - u3**2 - U0 / 2,
        d1=-u2 * u3,
        d2=v3 - u1 * u3,
        d3=v2 - u1 * u2,
        e1=-(u1 * v1 + dotuv - 2 * v4 - u1 * (U0 - 2 * u4)) / 2,
        e2=-(u1 * v2 - u2 * (U0 - 2 * u4)) / 2,
        e3=-(u1 * v3 - u3 * (U0 - 2 * u4)) / 2,
        f0=(-3 * U0**2 / 16
            + (U0 * (u4 + r2) + u1 * (dotuv - 2 * v4)) / 2
            - 2 * r2 * u4 + r2**2),
    )


def normalize(vec: CircleFamilyVector) -> CircleFamilyVector:
    """Canonical projective representative.

    Integer coefficients with content 1, first nonzero coordinate (in the
    order u0..u4, v1..v4) positive. The radius is a parameter and is left
    untouched.
    """
    coords = vec.coords()
    denom_lcm = reduce(lambda a, b: a * b // gcd(a, b),
                       (c.denominator for c in coords), 1)
    ints = [c * denom_lcm for c in coords]
    content = reduce(gcd, (abs(int(c)) for c in ints), 0)
    ints = [c / content for c in ints]
    first = next(c for c in ints if c != 0)
    if first < 0:
        ints = [-c for c in ints]
    return CircleFamilyVector(vec.r, *ints)
