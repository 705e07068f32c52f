"""Exception types shared across the package."""

from __future__ import annotations


class GeopackError(Exception):
    """Base class for every error raised by this package."""


class ParseError(GeopackError):
    """Malformed edge-list text or family-spec string."""


class SpecError(GeopackError):
    """Invalid parameters for a named graph family."""


class DomainError(GeopackError):
    """Input lies outside the domain of the requested operation."""


class ContractViolation(GeopackError):
    """A documented precondition was broken by the caller."""


class Unsupported(GeopackError):
    """No closed-form value is available for the requested family/invariant pair."""


class BudgetExceeded(GeopackError):
    """A solver ran out of time or search nodes before proving optimality.

    ``lower`` and ``upper`` carry the certified bounds known when the budget
    ran out; ``nodes`` is the number of search nodes spent.  Exact solvers
    raise this instead of ever returning a heuristic value as exact.
    """

    def __init__(
        self,
        message: str,
        *,
        lower: int | None = None,
        upper: int | None = None,
        nodes: int | None = None,
    ) -> None:
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class EnumerationOverflow(BudgetExceeded):
    """The maximal-geodesic catalog hit its enumeration cap."""
