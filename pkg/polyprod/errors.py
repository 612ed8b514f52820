"""Exception hierarchy for polyprod."""

from typing import Any
from typing import List
from typing import Optional


class PolyprodError(Exception):
    """Base class for all polyprod errors."""


class FactorizationError(PolyprodError, ArithmeticError):
    """Raised when a cofactor resists every rho restart.

    Attributes:
        n: The integer that was being factored.
        partial: Prime factors found before giving up, as a FactorMap.
        cofactor: The composite part that could not be split.
    """

    def __init__(self, n: int, partial: Any, cofactor: int) -> None:
        self.n = n
        self.partial = partial
        self.cofactor = cofactor
        super().__init__(
            f"partial factorization of {n}: cofactor {cofactor} resisted rho"
        )


class DegenerateReductionError(PolyprodError, ValueError):
    """Raised when a prime divides every coefficient of a polynomial."""

    def __init__(self, p: int) -> None:
        self.p = p
        super().__init__(f"degenerate reduction: {p} divides every coefficient")


class ZeroValueError(PolyprodError, ValueError):
    """Raised when P(i) = 0 for an index inside a product range."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"P({index}) = 0, the product vanishes from n = {index}")


class RootFindingError(PolyprodError, ArithmeticError):
    """Raised when the simultaneous root iteration does not converge."""

    def __init__(self, best: List[complex], residual: float, iterations: int) -> None:
        self.best = best
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"root iteration did not converge after {iterations} steps "
            f"(best residual {residual:.3e})"
        )


class InternalConsistencyError(PolyprodError, AssertionError):
    """Raised when a result fails its own verification."""


class PolynomialParseError(PolyprodError, ValueError):
    """Raised for malformed polynomial text."""

    def __init__(self, message: str, text: str, position: int) -> None:
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class ParameterError(PolyprodError, ValueError):
    """Raised when a run configuration is invalid."""


class CommandError(PolyprodError):
    """Wraps a downstream failure with the command that triggered it."""

    def __init__(self, command: str, cause: Exception) -> None:
        self.command = command
        self.cause = cause
        super().__init__(f"{command}: {cause}")


def error_payload(error: Exception, command: Optional[str] = None) -> dict:
    """Build the machine-readable error payload emitted by the CLI."""
    cause = error.cause if isinstance(error, CommandError) else error
    payload = {
        "type": type(cause).__name__,
        "message": str(cause),
        "command": command or getattr(error, "command", None),
    }
    if isinstance(cause, PolynomialParseError):
        payload["position"] = cause.position
    if isinstance(cause, ZeroValueError):
        payload["index"] = cause.index
    return {"error": payload}
