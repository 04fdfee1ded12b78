"""Domain errors raised by the kernel.

Every error carries a stable machine-readable ``code`` and a ``detail``
mapping with the exact rational data (residuals, discriminants, ...) that
caused the rejection, so callers can serialize the full audit trail.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping


def _stringify(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return value


class KernelError(Exception):
    """Base class for domain errors (mapped to exit code 2 by the CLI)."""

    code = "KernelError"

    def __init__(self, message: str, detail: Mapping[str, Any] | None = None):
        super().__init__(message)
        self.detail: dict[str, Any] = _stringify(dict(detail or {}))


class CubicInput(KernelError):
    """Leading coefficient u0 is zero; use the cubic code path."""

    code = "CubicInput"


class NotACubicCyclide(KernelError):
    """No cubic terms present (b-coefficients all zero)."""

    code = "NotACubicCyclide"


class NoRealSolution(KernelError):
    """A completion/solve step has negative discriminant."""

    code = "NoRealSolution"


class NonRationalSolution(KernelError):
    """Real solutions exist but are irrational; detail carries the
    discriminant so callers may fall back to floating point."""

    code = "NonRationalSolution"


class ComponentMismatch(KernelError):
    """Operation applied to a vector outside the required component."""

    code = "ComponentMismatch"


class BothSidesDegenerate(KernelError):
    """Both tangency functions are identically 0/0 on the circle."""

    code = "BothSidesDegenerate"


class UndefinedInvariant(KernelError):
    """A routed invariant formula has vanishing denominator."""

    code = "UndefinedInvariant"


class EmptySurface(KernelError):
    """No sign change of the implicit function inside the sampling box."""

    code = "EmptySurface"


class InvalidVector(ValueError):
    """Constructor-level validation failure (usage error, exit code 1)."""


class VectorFormatError(ValueError):
    """Malformed exact-scalar JSON (floats are rejected by design)."""
