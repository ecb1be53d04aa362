"""Exception hierarchy.

Every computational failure raised by the package derives from
``BetaError`` and names the module it came from, so the CLI and the tool
surface can attribute diagnostics without parsing messages.
"""

from typing import Any, Optional, Sequence


class BetaError(Exception):
    """Base class for all pipeline failures."""

    module = "ym_beta"

    def __init__(self, message: str, module: Optional[str] = None):
        super().__init__(message)
        if module is not None:
            self.module = module


class StructuralError(BetaError):
    """Shapes, gradings or dimensions do not fit together."""


class ParseError(BetaError):
    module = "lie"

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownNameError(BetaError):
    """A built-in name was not recognised; carries close matches."""

    def __init__(self, kind: str, name: str, suggestions: Sequence[str], module: str = "lie"):
        message = f"Unknown {kind} '{name}'"
        if suggestions:
            message += f". Did you mean: {', '.join(suggestions)}?"
        super().__init__(message, module=module)
        self.name = name
        self.suggestions = list(suggestions)


class ProportionalityError(BetaError):
    module = "lie"

    def __init__(self, message: str, residual: dict):
        super().__init__(message)
        self.residual = residual


class UnsupportedExponentError(BetaError):
    module = "tintegrals"


class FitError(BetaError):
    module = "tintegrals"

    def __init__(self, message: str, condition_number: float):
        super().__init__(f"{message} (condition number {condition_number:.3e})")
        self.condition_number = condition_number


class ReductionError(BetaError):
    module = "diagrams"

    def __init__(self, message: str, residue: Any, module: Optional[str] = None):
        super().__init__(message, module=module)
        self.residue = residue


class LandauPoleError(BetaError):
    module = "cohomology"

    def __init__(self, lam: float, critical_lambda: float):
        super().__init__(
            f"lambda={lam:g} lies beyond the Landau pole at lambda*={critical_lambda:.6g}"
        )
        self.lam = lam
        self.critical_lambda = critical_lambda


class InvariantViolation(BetaError):
    """Input data fails one or more algebraic invariants."""

    module = "lie"

    def __init__(self, what: str, issues: list):
        shown = "; ".join(str(issue) for issue in issues[:5])
        more = f" (+{len(issues) - 5} more)" if len(issues) > 5 else ""
        super().__init__(f"{what} violates {len(issues)} invariant(s): {shown}{more}")
        self.issues = list(issues)
