import os
from dataclasses import dataclass
from dataclasses import field
from dataclasses import fields
from dataclasses import replace
from typing import Any
from typing import Dict
from typing import Optional
from typing import get_type_hints

from dotenv import find_dotenv
from dotenv import load_dotenv


ENV_PREFIX = "POLYPROD_"


def _default_threads() -> int:
    return os.cpu_count() or 1


@dataclass(kw_only=True, frozen=True)
class Configuration:
    """Tunable settings shared by the library and the command line."""

    threads: int = field(default_factory=_default_threads)  # Worker processes
    roots_brute_threshold: int = 100_000  # Below this p, roots are found by scan
    trial_division_bound: int = 1_000_000  # Trial division limit before rho
    rho_restarts: int = 20  # Rho seeds c = 1..rho_restarts
    rho_max_steps: int = 1_000_000  # Iterations per rho seed
    root_tolerance: float = 1e-10  # Relative residual for complex roots
    root_max_iterations: int = 1000  # Aberth iteration cap
    kernel_digits_limit: int = 64  # Longer kernels are reported by digest
    log_level: str = "INFO"
    log_file: Optional[str] = None

    @classmethod
    def from_environment(cls, **overrides: Any) -> "Configuration":
        """Create a Configuration from POLYPROD_* variables and a .env file.

        Args:
            **overrides: Values that win over the environment (CLI flags).
                None values are ignored.

        Returns:
            Configuration: The resolved configuration.

        Raises:
            ValueError: If an environment value cannot be coerced.
        """
        load_dotenv(find_dotenv(usecwd=True))
        hints = get_type_hints(cls)
        values: Dict[str, Any] = {}
        for f in fields(cls):
            if not f.init:
                continue
            raw = os.environ.get(f"{ENV_PREFIX}{f.name.upper()}")
            if raw:
                values[f.name] = _coerce(f.name, hints[f.name], raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        """Reject settings no computation can run with."""
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")
        if self.roots_brute_threshold < 2:
            raise ValueError("roots_brute_threshold must be at least 2")
        if self.rho_restarts < 1 or self.rho_max_steps < 1:
            raise ValueError("rho_restarts and rho_max_steps must be positive")
        if not 0 < self.root_tolerance < 1:
            raise ValueError("root_tolerance must lie in (0, 1)")

    def with_threads(self, threads: Optional[int]) -> "Configuration":
        return self if threads is None else replace(self, threads=threads)


def _coerce(name: str, hint: Any, raw: str) -> Any:
    target = int if hint is int else float if hint is float else str
    try:
        return target(raw)
    except ValueError as e:
        raise ValueError(
            f"{ENV_PREFIX}{name.upper()}={raw!r} is not a valid {target.__name__}"
        ) from e
