"""Classification of circle-family vectors into Dupin components.

A vector lies in the Villarceau component iff four explicit polynomials
vanish and a strict gap inequality holds; it lies in the principal
component iff two structured matrices have rank <= 1 (decided by exact
2x2 minors). Degenerate loci (touching spheres, the bare circle, double
spheres) are detected through a third matrix and a contact relation, and
the final verdict applies a fixed precedence so overlaps are resolved
deterministically.

Membership in the Villarceau component is equivalent to being a
non-degenerate Dupin cyclide with the circle as a Villarceau circle.
For the principal component the conditions are necessary; the verdict
``PrincipalDupin`` means "principal-component member passing the
non-degeneracy filters", the strongest supported claim.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidVector, NonRationalSolution, NoRealSolution
from .family import CircleFamilyVector
from .scalars import ONE, ZERO, Scalar, rational_sqrt


class Verdict(enum.Enum):
    VILLARCEAU_DUPIN = "VillarceauDupin"
    PRINCIPAL_DUPIN = "PrincipalDupin"
    HORN_BOUNDARY = "HornBoundary"
    TOUCHING_SPHERES = "TouchingSpheresDegenerate"
    CIRCLE = "CircleDegenerate"
    DOUBLE_SPHERE = "DoubleSphereDegenerate"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class VillarceauWitness:
    """Residuals of the four Villarceau equations plus the gap term.

    Membership: r1 = r2 = r3 = r4 = 0 and gap > 0. Equalities with
    gap = 0 mark the horn boundary (those points also satisfy the
    principal rank conditions).
    """

    r1: Scalar
    r2: Scalar
    r3: Scalar
    r4: Scalar
    gap: Scalar

    @property
    def equalities_hold(self) -> bool:
        return self.r1 == 0 and self.r2 == 0 and self.r3 == 0 and self.r4 == 0

    @property
    def is_member(self) -> bool:
        return self.equalities_hold and self.gap > 0

    @property
    def is_horn_boundary(self) -> bool:
        return self.equalities_hold and self.gap == 0

    def as_dict(self) -> dict[str, Scalar]:
        return {"r1": self.r1, "r2": self.r2, "r3": self.r3, "r4": self.r4,
                "gap": self.gap}


@dataclass(frozen=True)
class PrincipalWitness:
    """Minors deciding the two rank-1 conditions of the principal component.

    T2, T3, T4 are the 2x2 minors of the 3x2 tangency matrix N. minorsM
    holds the retained 2x2 minors of the 9x2 matrix M, keyed by row pair;
    pairs inside rows 1-3 and inside rows 7-9 are omitted because they are
    fixed multiples of the T-minors.
    """

    T2: Scalar
    T3: Scalar
    T4: Scalar
    minorsM: dict[tuple[int, int], Scalar]
    U0: Scalar

    @property
    def is_member(self) -> bool:
        return (self.T2 == 0 and self.T3 == 0 and self.T4 == 0
                and all(m == 0 for m in self.minorsM.values()))

    def as_dict(self) -> dict[str, object]:
        return {
            "T2": self.T2, "T3": self.T3, "T4": self.T4, "U0": self.U0,
            "minorsM": {f"{i}-{j}": m for (i, j), m in sorted(self.minorsM.items())},
        }


@dataclass(frozen=True)
class DegenerateWitness:
    """Rank data of the 6x2 contact matrix L plus the touching relation."""

    minorsL: dict[tuple[int, int], Scalar]
    touchResidual: Scalar
    rankL: int
    circleFlags: tuple[bool, bool]

    @property
    def in_touching_locus(self) -> bool:
        return self.rankL <= 1 and self.touchResidual == 0

    @property
    def is_circle(self) -> bool:
        return self.rankL == 0 and all(self.circleFlags)

    def as_dict(self) -> dict[str, object]:
        return {
            "minorsL": {f"{i}-{j}": m for (i, j), m in sorted(self.minorsL.items())},
            "touchResidual": self.touchResidual,
            "rankL": self.rankL,
            "circleFlags": list(self.circleFlags),
        }


@dataclass(frozen=True)
class ComponentVerdict:
    verdict: Verdict
    villarceau: VillarceauWitness
    principal: PrincipalWitness
    degenerate: DegenerateWitness

    def as_dict(self) -> dict[str, object]:
        return {
            "verdict": self.verdict.value,
            "witnesses": {
                "villarceau": self.villarceau.as_dict(),
                "principal": self.principal.as_dict(),
                "degenerate": self.degenerate.as_dict(),
            },
        }


def tangency_matrix(vec: CircleFamilyVector) -> list[tuple[Fraction, Fraction]]:
    """3x2 matrix whose rank <= 1 makes the tangency function constant."""
    return [(vec.u2, vec.v2), (vec.u3, vec.v3), (vec.u4, vec.v4)]


def principal_matrix(vec: CircleFamilyVector) -> list[tuple[Fraction, Fraction]]:
    """9x2 matrix of the principal-component rank condition (rows 1-indexed)."""
    r2 = vec.r**2
    r4 = r2**2
    u0, u1, u2, u3, u4 = vec.u()
    v1, v2, v3, v4 = vec.v()
    w = v4 - 2 * r2 * u1
    k = v1 + u4 - 2 * r2 * u0
    return [
        (u2, v2 * w),
        (u3, v3 * w),
        (u4, v4 * w),
        (2 * u0, v2**2 + v3**2 - 4 * r2 * u1**2),
        (u1, 4 * r2 * u0 * v4 - 2 * r2 * (u2 * v2 + u3 * v3) - 4 * r2 * u1 * (v1 + u4)),
        (v1, 4 * r4 * (u2**2 + u3**2 + 2 * u0 * v1) - 4 * r2 * (v1 + u4) ** 2 - w**2),
        (v2, -8 * r4 * u1 * u2 - 4 * r2 * v2 * k),
        (v3, -8 * r4 * u1 * u3 - 4 * r2 * v3 * k),
        (v4, -8 * r4 * u1 * u4 - 4 * r2 * v4 * k),
    ]


def touching_matrix(vec: CircleFamilyVector) -> list[tuple[Fraction, Fraction]]:
    """6x2 matrix cutting out the touching-spheres locus (with the contact relation)."""
    u0, u1, u2, u3, u4 = vec.u()
    v1, v2, v3, v4 = vec.v()
    return [
        (u2, v2),
        (u3, v3),
        (u4, v4),
        (u0 * v2, 2 * (u1 * v2 - u2 * v1)),
        (u0 * v3, 2 * (u1 * v3 - u3 * v1)),
        (u0 * v4, 2 * (u1 * v4 - u4 * v1)),
    ]


# Row pairs of the 9x2 matrix whose minors repeat T-minors up to a factor.
_IGNORED_M_PAIRS = {(1, 2), (1, 3), (2, 3), (7, 8), (7, 9), (8, 9)}


def _all_minors(rows: list[tuple[Fraction, Fraction]],
                skip: set[tuple[int, int]] | None = None) -> dict[tuple[int, int], Fraction]:
    out = {}
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            key = (i + 1, j + 1)
            if skip and key in skip:
                continue
            out[key] = rows[i][0] * rows[j][1] - rows[j][0] * rows[i][1]
    return out


def _minor_rank(rows: list[tuple[Fraction, Fraction]],
                minors: dict[tuple[int, int], Fraction]) -> int:
    if any(m != 0 for m in minors.values()):
        return 2
    if any(a != 0 or b != 0 for a, b in rows):
        return 1
    return 0


def villarceau_test(vec: CircleFamilyVector) -> VillarceauWitness:
    r2 = vec.r**2
    return VillarceauWitness(
        r1=vec.v4 - 2 * r2 * vec.u1,
        r2=vec.v1 + 2 * vec.u4 - 2 * r2 * vec.u0,
        r3=vec.u2 * vec.v2 + vec.u3 * vec.v3 - 2 * vec.u1 * vec.u4,
        r4=(4 * r2 * (vec.u1**2 + vec.u2**2 + vec.u3**2)
            - 4 * vec.u4**2 - vec.v2**2 - vec.v3**2),
        gap=r2 * (vec.u2**2 + vec.u3**2) - vec.u4**2,
    )


def principal_test(vec: CircleFamilyVector) -> PrincipalWitness:
    minorsM = _all_minors(principal_matrix(vec), skip=_IGNORED_M_PAIRS)
    return PrincipalWitness(
        T2=vec.u3 * vec.v4 - vec.u4 * vec.v3,
        T3=vec.u2 * vec.v4 - vec.u4 * vec.v2,
        T4=vec.u2 * vec.v3 - vec.u3 * vec.v2,
        minorsM=minorsM,
        U0=vec.u1**2 + vec.u2**2 + vec.u3**2,
    )


def degenerate_test(vec: CircleFamilyVector) -> DegenerateWitness:
    rows = touching_matrix(vec)
    minors = _all_minors(rows)
    r2 = vec.r**2
    touch = (4 * r2 * (vec.u1**2 + vec.u2**2 + vec.u3**2)
             + vec.v2**2 + vec.v3**2
             - 8 * vec.v1 * (r2 * vec.u0 - vec.u4)
             - 4 * vec.v4 * vec.u1 - 4 * vec.u4**2)
    return DegenerateWitness(
        minorsL=minors,
        touchResidual=touch,
        rankL=_minor_rank(rows, minors),
        circleFlags=(vec.u1 == 0, vec.v1 - 2 * r2 * vec.u0 == 0),
    )


def classify(vec: CircleFamilyVector) -> ComponentVerdict:
    """Deterministic verdict with a fixed precedence on component overlaps.

    Order: circle degeneration, touching spheres (contact matrix of rank
    exactly 1, so that rank-0 double spheres fall through to the
    demotion rule), Villarceau member, horn boundary, principal member
    (demoted to the double-sphere verdict at contact rank 0), outside.
    """
    vil = villarceau_test(vec)
    pri = principal_test(vec)
    deg = degenerate_test(vec)

    if deg.is_circle:
        verdict = Verdict.CIRCLE
    elif deg.rankL == 1 and deg.touchResidual == 0:
        verdict = Verdict.TOUCHING_SPHERES
    elif vil.is_member:
        verdict = Verdict.VILLARCEAU_DUPIN
    elif vil.is_horn_boundary:
        verdict = Verdict.HORN_BOUNDARY
    elif pri.is_member:
        verdict = Verdict.DOUBLE_SPHERE if deg.rankL == 0 else Verdict.PRINCIPAL_DUPIN
    else:
        verdict = Verdict.OUTSIDE
    return ComponentVerdict(verdict, vil, pri, deg)


def villarceau_complete(r: Scalar, u0: Scalar, u1: Scalar, u2: Scalar,
                        u3: Scalar, u4: Scalar) -> list[CircleFamilyVector]:
    """Complete u-data to full Villarceau members.

    v4 and v1 are forced linearly; (v2, v3) is the intersection of a line
    with a circle, giving 0, 1 or 2 exact rational solutions. Raises
    :class:`NoRealSolution` for negative discriminant and
    :class:`NonRationalSolution` (with the discriminant in the detail)
    when real solutions exist but are irrational.
    """
    r, u0, u1, u2, u3, u4 = (Fraction(t) for t in (r, u0, u1, u2, u3, u4))
    if r <= 0:
        raise InvalidVector("circle radius must be positive")
    if u2 == 0 and u3 == 0:
        raise InvalidVector("completion requires (u2, u3) != (0, 0)")
    r2 = r**2
    n2 = u2**2 + u3**2
    U0 = u1**2 + n2
    gap = r2 * n2 - u4**2
    disc = 4 * U0 * gap  # = tau^2 for the line/circle intersection below
    if disc < 0:
        raise NoRealSolution("no real completion: the gap term is negative",
                             {"discriminant": disc, "gap": gap})
    tau = rational_sqrt(disc)
    if tau is None:
        raise NonRationalSolution("real completions exist but are irrational",
                                  {"discriminant": disc})
    v4 = 2 * r2 * u1
    v1 = 2 * r2 * u0 - 2 * u4
    c = 2 * u1 * u4
    out = []
    for t in ([tau, -tau] if tau != 0 else [tau]):
        v2 = (c * u2 - t * u3) / n2
        v3 = (c * u3 + t * u2) / n2
        out.append(CircleFamilyVector(r, u0, u1, u2, u3, u4, v1, v2, v3, v4))
    return out


def representative_principal_torus(r: Scalar, R: Scalar) -> CircleFamilyVector:
    """Torus with tube radius r and center radius R, carrying the circle
    as a principal circle (the circle wraps around the tube)."""
    r, R = Fraction(r), Fraction(R)
    if not 0 < r < R:
        raise InvalidVector(f"need 0 < r < R, got r={r}, R={R}")
    return CircleFamilyVector(r, ONE, ZERO, -2 * R, ZERO, 2 * R**2,
                              -2 * R**2, ZERO, ZERO, ZERO)


def representative_villarceau_torus(r: Scalar, b: Scalar) -> CircleFamilyVector:
    """Torus with center radius r and tube radius b < r, carrying the
    circle (radius r) as a Villarceau circle.

    Requires sqrt(r^2 - b^2) to be rational; otherwise raises
    :class:`NonRationalSolution` with the squared value in the detail.
    """
    r, b = Fraction(r), Fraction(b)
    if not 0 < b < r:
        raise InvalidVector(f"need 0 < b < r, got b={b}, r={r}")
    w2 = r**2 - b**2
    w = rational_sqrt(w2)
    if w is None:
        raise NonRationalSolution("tilt parameter sqrt(r^2 - b^2) is irrational",
                                  {"w_squared": w2})
    return CircleFamilyVector(r, ONE, ZERO, -2 * b, ZERO, 2 * b**2,
                              2 * r**2 - 4 * b**2, ZERO, -4 * b * w, ZERO)
