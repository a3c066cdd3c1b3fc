"""Runtime settings shared by the facade, the tools and the CLI."""

import os
from dataclasses import dataclass, replace

from .errors import ConfigError

JOBS_ENV = "HERMDIG_JOBS"
DEFAULT_TOLERANCE = 1e-9


def _jobs_from_env() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise ConfigError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ConfigError(f"{JOBS_ENV} must be at least 1, got {jobs}")
    return jobs


@dataclass(frozen=True)
class Settings:
    tolerance: float = DEFAULT_TOLERANCE
    jobs: int = 1
    large: bool = False
    work_dir: str = "."
    hd_dir: str = ".hermdig"
    progress: bool = False

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be at least 1, got {self.jobs}")

    @classmethod
    def from_env(cls, **overrides) -> "Settings":
        """Build settings with `jobs` falling back to HERMDIG_JOBS.

        Overrides whose value is None are ignored so CLI flags can be passed
        through unconditionally.
        """
        given = {k: v for k, v in overrides.items() if v is not None}
        if "jobs" not in given:
            given["jobs"] = _jobs_from_env()
        return cls(**given)

    def with_(self, **changes) -> "Settings":
        return replace(self, **changes)
