"""Exception types shared across the package.

Checker functions return verdicts (bool or Witness); exceptions are reserved
for misuse (non-composable arrows, malformed squares) and for declared
capability limits (unsupported limits, inadmissible pushouts, closure
overflow).
"""


class AdhesivityError(Exception):
    """Base class for all package-specific errors."""


class NotComposable(AdhesivityError):
    """Raised when composing morphisms whose cod/dom do not match."""


class InvalidSquare(AdhesivityError):
    """Raised when a commuting square's boundary does not typecheck or commute."""


class NotAdmissible(AdhesivityError):
    """Raised when a pushout is requested along a morphism outside the
    category's declared admissible class."""


class NotRegular(AdhesivityError):
    """Raised when an operation requires a regular mono and the argument is not one."""


class UnsupportedLimit(AdhesivityError):
    """Raised when a limit shape is outside what the category implements."""


class UnsupportedColimit(AdhesivityError):
    """Raised when a colimit shape is outside what the category implements."""


class EdgeMismatch(AdhesivityError):
    """Raised when pasting squares whose shared edge disagrees."""


class NotAPushout(AdhesivityError):
    """Raised when a construction requires a pushout square and certification fails."""


class PreconditionUnmet(AdhesivityError):
    """Raised when a theorem-shaped check is called with hypotheses that fail."""


class MissingKernelPair(AdhesivityError):
    """Raised when a kernel pair needed for a construction does not exist
    or exceeds the search bound."""


class ClosureOverflow(AdhesivityError):
    """Raised when an iterated closure or enumeration exceeds its configured cap."""


class HypothesisFailed(AdhesivityError):
    """Raised by conditional checkers when the side condition that justifies
    the simplified form fails, so no verdict is available."""
