"""Built-in gallery of six smoothly blended cyclide pairs (circle radius 1).

Each pair is produced by the constructive solvers, one panel per envelope
situation: a shared cone (a), a shared cylinder with torus/cyclide and
torus/torus combinations (b, c, d), the plane of the circle (e), and a
Villarceau pencil pair (f). The gallery doubles as an end-to-end smoke
test: every vector classifies as a component member, every pair blends,
and the invariant is reported for each surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blending import (blend_check, cone_family_solve, cylinder_family_solve,
                       plane_family_solve, villarceau_pencil)
from .components import ComponentVerdict, classify, villarceau_complete
from .errors import KernelError
from .family import CircleFamilyVector
from .invariants import J0Value, j0

F = Fraction


@dataclass(frozen=True)
class PanelReport:
    name: str
    vectors: tuple[CircleFamilyVector, CircleFamilyVector]
    verdicts: tuple[ComponentVerdict, ComponentVerdict]
    invariants: tuple[J0Value, J0Value]
    blend: bool


def _cylinder_pick(u0, u2, u3, u4, v1) -> CircleFamilyVector:
    for cand in cylinder_family_solve(1, u0, u2, u3, u4):
        if cand.v1 == v1:
            return cand
    raise KernelError(f"cylinder family has no root v1 = {v1}")


def build_panels() -> list[tuple[str, CircleFamilyVector, CircleFamilyVector]]:
    """The six pairs, built from their generating parameters."""
    torus_b = _cylinder_pick(1, -3, 0, F(9, 2), F(-9, 2))
    villarceau_base = villarceau_complete(1, 1, 0, 1, 0, F(12, 13))[1]
    return [
        ("a",
         cone_family_solve(1, -1, 1, F(-49, 30), 0, F(76, 15)),
         cone_family_solve(1, -1, 1, -2, -5, 0)),
        ("b",
         torus_b,
         _cylinder_pick(1, 0, F(76, 15), F(323, 30), F(-361, 30))),
        ("c",
         _cylinder_pick(F(17, 15), F(17, 3), 0, F(85, 6), F(-85, 6)),
         torus_b),
        ("d",
         _cylinder_pick(1, 0, 0, -4, 8),
         torus_b),
        ("e",
         plane_family_solve(1, 1, 1, 1, 0),
         plane_family_solve(1, 1, F(9, 5), 1, 0)),
        ("f",
         villarceau_base,
         villarceau_pencil(villarceau_base, F(2, 5))),
    ]


def run_gallery() -> list[PanelReport]:
    """Classify, blend-check and evaluate the invariant on every panel.

    Any failure aborts with the offending residuals attached.
    """
    reports = []
    for name, first, second in build_panels():
        verdicts = (classify(first), classify(second))
        for vec, verdict in zip((first, second), verdicts):
            if verdict.verdict.value not in ("VillarceauDupin", "PrincipalDupin"):
                raise KernelError(
                    f"gallery panel {name}: unexpected verdict {verdict.verdict.value}",
                    verdict.as_dict()["witnesses"])
        if not blend_check(first, second):
            raise KernelError(f"gallery panel {name}: pair does not blend",
                              {"first": list(first.coords()),
                               "second": list(second.coords())})
        reports.append(PanelReport(
            name=name,
            vectors=(first, second),
            verdicts=verdicts,
            invariants=(j0(first), j0(second)),
            blend=True,
        ))
    return reports
