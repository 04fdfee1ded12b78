"""Exact-arithmetic kernel for Dupin cyclides through a fixed circle.

Classification of implicit quartic/cubic surfaces through the circle
{x = 0, y^2 + z^2 = r^2} into Villarceau / principal Dupin components and
their degenerate loci, constructive solvers for every smooth-blending
family along the circle, the Möbius invariant J0, and a floating-point
mesher for OBJ export. Served over HTTP by :mod:`dupin.service` and
scripted through the thin CLI client in :mod:`dupin.cli`.
"""

__version__ = "0.1.0"

from .blending import (ConeParameter, EnvelopeKind, EnvelopeSurface,
                       TangencyFunction, TangencyKind, TorusForm, blend_check,
                       cone_family_solve, cylinder_family_solve, envelope,
                       plane_family_solve, tangency_constant, torus_recognize,
                       villarceau_pencil)
from .components import (ComponentVerdict, DegenerateWitness, PrincipalWitness,
                         Verdict, VillarceauWitness, classify, degenerate_test,
                         principal_test, representative_principal_torus,
                         representative_villarceau_torus, villarceau_complete,
                         villarceau_test)
from .conditions import (Aggregates, CubicConditionReport,
                         QuarticConditionReport, aggregates,
                         cubic_dupin_conditions, quartic_dupin_conditions)
from .errors import (BothSidesDegenerate, ComponentMismatch, CubicInput,
                     EmptySurface, InvalidVector, KernelError,
                     NonRationalSolution, NoRealSolution, NotACubicCyclide,
                     UndefinedInvariant, VectorFormatError)
from .family import (CircleFamilyVector, DarbouxQuartic, IntermediateDarboux,
                     contains_circle, expand, family_polynomial, normalize,
                     to_intermediate)
from .invariants import (J0Value, Smoothness, TorusParams, j0, j0_principal,
                         j0_torus, j0_villarceau)
from .meshing import (RationalCirclePoint, TriangleMesh, export_obj, mesh,
                      read_vector_json, sample_circle, write_vector_json)
from .poly import TrivariatePolynomial, restrict_to_circle, vanishes_on_circle
from .scalars import Scalar, format_scalar, parse_scalar, rational_sqrt

__all__ = [name for name in dir() if not name.startswith("_")]
