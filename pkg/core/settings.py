"""
Numeric constants and process-wide configuration.
"""
import os
from dataclasses import dataclass, field, replace
from typing import Optional


def _threads_from_env() -> int:
    raw = os.environ.get("TQFT_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass(frozen=True)
class Settings:
    """
    Tolerances, caps and defaults used across the toolkit.
    """
    tol_eq: float = 1e-9
    tol_snap: float = 1e-6
    tol_modular: float = 1e-8
    default_seed: int = 0xC0FFEE
    max_group_order: int = 5040
    exhaustive_assoc_cap: int = 512
    max_cobordism_width: int = 8
    max_tensor_entries: int = 10 ** 7
    brute_force_cap: int = 10 ** 8
    twist_order_bound: int = 1000
    casimir_scale: float = 0.25
    nmax_cap: int = 10 ** 7
    retry_budget: int = 8
    threads: int = field(default_factory=_threads_from_env)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the process-wide settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def replace_settings(**overrides) -> Settings:
    """Replace selected fields of the process-wide settings and return them."""
    global _settings
    _settings = replace(get_settings(), **overrides)
    return _settings


def reset_settings() -> None:
    """Drop overrides; the next get_settings() re-reads the environment."""
    global _settings
    _settings = None
