"""Exception types shared across the package."""


class ConicertError(Exception):
    """Base class for all package-specific errors."""


class InvalidSpecError(ConicertError, ValueError):
    """A surface spec violates its hypotheses (square a, zero b, c = d = 0, ...)."""


class FactorizationLimitError(ConicertError):
    """The deterministic factorization pipeline exhausted its iteration budget."""


class SearchBudgetError(ConicertError):
    """A bounded point search hit its height/iteration budget without an answer.

    Distinct from "no solution exists": raised only when the search could not
    decide within the configured budget.
    """


class DegenerateCenterError(ConicertError):
    """No projection chart works for the requested stereographic parametrization."""


class VerificationError(ConicertError):
    """A construction failed its mandatory symbolic post-check (internal bug)."""
