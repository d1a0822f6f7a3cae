"""Search budgets and their environment-variable overrides.

All point searches are deterministic; the budgets only bound how far they go
before raising SearchBudgetError.  Defaults are desk-scale and documented in
the README; override via CONICERT_DESCENT_HEIGHT, CONICERT_FALLBACK_HEIGHT,
CONICERT_QUADRIC_HEIGHT.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class SearchBudgets:
    """Height limits for the constructive searches."""

    descent_height: int = 10**6   # modular-congruence stage of the descent
    fallback_height: int = 10**4  # exhaustive norm-equation fallback
    quadric_height: int = 10**4   # sieved quaternary point search

    @staticmethod
    def from_env() -> "SearchBudgets":
        return SearchBudgets(
            descent_height=_env_int("CONICERT_DESCENT_HEIGHT", 10**6),
            fallback_height=_env_int("CONICERT_FALLBACK_HEIGHT", 10**4),
            quadric_height=_env_int("CONICERT_QUADRIC_HEIGHT", 10**4),
        )


DEFAULT_BUDGETS = SearchBudgets.from_env()
