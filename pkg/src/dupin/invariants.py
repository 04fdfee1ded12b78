"""The Möbius invariant J0 of Dupin cyclide equations.

J0 extends the toric invariant (r/R)^2 * (1 - (r/R)^2) to every Dupin
cyclide: smooth cyclides have 0 < J0 <= 1/4, horn cyclides J0 = 0 and
spindle-type singular cyclides J0 < 0. Closed forms exist per component
and per envelope type; they are ratios of equal projective weight, so the
value is invariant under rescaling of the coefficient vector.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .blending import ConeParameter, TangencyKind, tangency_constant
from .components import Verdict, classify, principal_test, villarceau_test
from .errors import ComponentMismatch, InvalidVector, UndefinedInvariant
from .family import CircleFamilyVector
from .scalars import Scalar


class Smoothness(enum.Enum):
    SMOOTH = "smooth"
    HORN = "horn"
    SINGULAR = "singular"


@dataclass(frozen=True)
class J0Value:
    value: Scalar
    smoothness: Smoothness

    @classmethod
    def of(cls, value: Fraction) -> "J0Value":
        if value > Fraction(1, 4):
            raise UndefinedInvariant("J0 above 1/4 is impossible for these formulas",
                                     {"value": value})
        if value > 0:
            kind = Smoothness.SMOOTH
        elif value == 0:
            kind = Smoothness.HORN
        else:
            kind = Smoothness.SINGULAR
        return cls(value, kind)

    def as_dict(self) -> dict[str, str]:
        return {"J0": str(self.value), "class": self.smoothness.value}


@dataclass(frozen=True)
class TorusParams:
    Rmajor: Scalar
    rminor: Scalar

    def __post_init__(self):
        object.__setattr__(self, "Rmajor", Fraction(self.Rmajor))
        object.__setattr__(self, "rminor", Fraction(self.rminor))
        if self.Rmajor <= 0 or self.rminor <= 0:
            raise InvalidVector("torus radii must be positive")


def j0_torus(p: TorusParams) -> J0Value:
    q = p.rminor**2 / p.Rmajor**2
    return J0Value.of(q * (1 - q))


def _villarceau_value(vec: CircleFamilyVector) -> Fraction:
    r2 = vec.r**2
    den = 4 * (r2 * (vec.v1**2 + vec.v2**2 + vec.v3**2) - vec.v4**2)
    if den == 0:
        raise UndefinedInvariant("Villarceau invariant denominator vanishes",
                                 {"denominator": den})
    return Fraction(1, 4) - r2 * vec.v1**2 / den


def villarceau_value_from_u(vec: CircleFamilyVector) -> Fraction:
    """Equivalent u-side expression gap / (4*gap + v1^2); equals the v-side
    form on the whole component (regression-tested), kept as a cross-check."""
    gap = vec.r**2 * (vec.u2**2 + vec.u3**2) - vec.u4**2
    den = 4 * gap + vec.v1**2
    if den == 0:
        raise UndefinedInvariant("u-side invariant denominator vanishes",
                                 {"denominator": den})
    return gap / den


def j0_villarceau(vec: CircleFamilyVector) -> J0Value:
    verdict = classify(vec).verdict
    if verdict not in (Verdict.VILLARCEAU_DUPIN, Verdict.HORN_BOUNDARY):
        raise ComponentMismatch(
            f"Villarceau invariant needs a Villarceau member, got {verdict.value}",
            {"witness": villarceau_test(vec).as_dict()})
    return J0Value.of(_villarceau_value(vec))


def _principal_value(vec: CircleFamilyVector, lam: ConeParameter) -> Fraction:
    r2 = vec.r**2
    if lam.kind is TangencyKind.NON_CONSTANT:
        raise ComponentMismatch("tangency function is not constant on the circle",
                                {"T": [str(m) for m in
                                       (principal_test(vec).T2,
                                        principal_test(vec).T3,
                                        principal_test(vec).T4)]})
    if lam.kind is TangencyKind.INFINITE:
        if vec.u0 == 0:
            raise UndefinedInvariant("plane-contact invariant needs u0 != 0",
                                     {"u0": vec.u0})
        return Fraction(1, 4) - (3 * r2 * vec.u0 - vec.v1) ** 2 / (4 * r2**2 * vec.u0**2)
    c = lam.value
    if c == 0:
        if vec.v1 == 0:
            raise UndefinedInvariant("cylinder-contact invariant needs v1 != 0",
                                     {"v1": vec.v1})
        return (Fraction(1, 4)
                - (4 * r2 * vec.u0 - 4 * vec.u4 - 3 * vec.v1) ** 2 / (4 * vec.v1**2))
    den_root = 2 * r2 * c * vec.u0 - 2 * r2 * vec.u1 - c * vec.u4
    if den_root == 0:
        raise UndefinedInvariant("cone-contact invariant denominator vanishes",
                                 {"lambda": c})
    num_root = (4 * r2**2 * c * vec.u0 - 2 * r2 * (c**2 + 6 * r2) * vec.u1
                + c * (c**2 + 2 * r2) * vec.u4)
    return Fraction(1, 4) - num_root**2 / (16 * r2**2 * den_root**2)


def j0_principal(vec: CircleFamilyVector) -> J0Value:
    """Invariant routed by the envelope type (cone / cylinder / plane).

    When several u-entries are nonzero the candidate constants v_i/u_i are
    cross-checked for agreement rather than assumed equal.
    """
    witness = principal_test(vec)
    if not witness.is_member:
        raise ComponentMismatch("not a principal-component member",
                                {"witness": witness.as_dict()})
    lam = tangency_constant(vec)
    if lam.kind is TangencyKind.CONSTANT:
        ratios = {vi / ui for ui, vi in ((vec.u2, vec.v2), (vec.u3, vec.v3),
                                         (vec.u4, vec.v4)) if ui != 0}
        if len(ratios) != 1:
            raise ComponentMismatch("inconsistent tangency ratios",
                                    {"ratios": sorted(map(str, ratios))})
    return J0Value.of(_principal_value(vec, lam))


def j0(vec: CircleFamilyVector) -> J0Value:
    """Dispatch the invariant by component verdict.

    Horn-boundary points admit both routes; both are evaluated and must
    agree (they do identically on that stratum; if one formula is
    undefined the other is used).
    """
    outcome = classify(vec)
    verdict = outcome.verdict
    if verdict is Verdict.VILLARCEAU_DUPIN:
        return j0_villarceau(vec)
    if verdict is Verdict.PRINCIPAL_DUPIN:
        return j0_principal(vec)
    if verdict is Verdict.HORN_BOUNDARY:
        values = []
        for route in (_villarceau_value,
                      lambda v: _principal_value(v, tangency_constant(v))):
            try:
                values.append(route(vec))
            except UndefinedInvariant:
                continue
        if not values:
            raise UndefinedInvariant("both invariant routes are undefined",
                                     {"vector": list(vec.coords())})
        if len(values) == 2 and values[0] != values[1]:
            raise UndefinedInvariant("invariant routes disagree on the horn boundary",
                                     {"villarceau": values[0], "principal": values[1]})
        return J0Value.of(values[0])
    raise ComponentMismatch(
        f"no invariant for verdict {verdict.value}",
        {"witnesses": outcome.as_dict()["witnesses"]})
