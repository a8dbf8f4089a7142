"""Exception taxonomy.

Every exception raised on purpose by this package derives from
:class:`FluxtailError`, so callers can catch one type at the boundary.
Domain-style failures also derive from :class:`ValueError` to stay friendly
to generic call sites.
"""


class FluxtailError(Exception):
    """Base class for all errors raised by fluxtail."""


class DomainError(FluxtailError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class TailRangeError(DomainError):
    """Asked for the asymptotic tail below its range of validity (x < 1)."""


class WorldlineError(DomainError):
    """Worldline approximation inapplicable (spatial/temporal ratio s >= 1)."""


class BracketError(FluxtailError):
    """A root bracket does not actually bracket a sign change."""


class FitBracketError(BracketError):
    """The fit target is not bracketed by the scan interval."""


class ConvergenceError(FluxtailError):
    """An iteration failed to converge within its budget."""


class QuadratureError(FluxtailError):
    """Adaptive quadrature did not reach the requested accuracy."""


class UnitError(FluxtailError, ValueError):
    """Dimensionally incompatible unit conversion."""


class BarrierAbsentError(FluxtailError):
    """No classically forbidden region (turning points) inside the range."""


class AboveBarrierError(FluxtailError):
    """The energy sits at or above the barrier top; WKB exponent undefined."""


class CatalogError(FluxtailError, ValueError):
    """Malformed system/particle catalog; message carries the field path."""
