"""Enumeration guards and their resolution."""
import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache

from .errors import InvalidConfigError


@dataclass(frozen=True)
class Guards:
    """Size limits for exhaustive enumeration and oracle runs."""
    max_set_size: int = 15  # B_15 is about 1.38e9 set partitions
    max_multiset_size: int = 15  # Multiset-partition streams
    max_oracle_composition: int = 6  # verify_composition / verify_product
    max_oracle_sweep: int = 8  # Brute-force multiplicity sweeps
    seed: int = 1729  # Randomized oracle trials

    def with_overrides(self, values: dict) -> 'Guards':
        """Return a copy with known keys replaced, unknown keys ignored."""
        known = {f.name for f in fields(self)}
        updates = {}
        for key, value in values.items():
            key = key.replace('-', '_')
            if key in known:
                updates[key] = parse_size(value, key)
        return replace(self, **updates)


ENV_VARS = {
    'max_set_size': 'MIXDIFF_MAX_SET_SIZE',
    'max_multiset_size': 'MIXDIFF_MAX_MULTISET_SIZE',
    'max_oracle_composition': 'MIXDIFF_MAX_ORACLE_COMPOSITION',
    'max_oracle_sweep': 'MIXDIFF_MAX_ORACLE_SWEEP',
    'seed': 'MIXDIFF_SEED',
}


def parse_size(value: object, name: str = "value") -> int:
    """Parse a non-negative integer setting.

    Accepts ints and decimal strings ("8", " 12 ").

    Raises:
        InvalidConfigError: If the value is not a non-negative integer
    """
    if isinstance(value, bool):
        raise InvalidConfigError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, int):
        number = value
    else:
        try:
            number = int(str(value).strip())
        except ValueError:
            raise InvalidConfigError(f"{name} must be an integer, got {value!r}") from None
    if number < 0:
        raise InvalidConfigError(f"{name} must be non-negative, got {number}")
    return number


def guards_from_env(base: Guards, environ: dict | None = None) -> Guards:
    """Apply MIXDIFF_* environment variables on top of base."""
    environ = os.environ if environ is None else environ
    updates = {}
    for key, var in ENV_VARS.items():
        raw = environ.get(var)
        if raw is not None and raw.strip():
            updates[key] = parse_size(raw, var)
    return replace(base, **updates)


@lru_cache(maxsize=1)
def current_guards() -> Guards:
    """Resolve guards: defaults, then config files, then environment."""
    from .utils.config_file import load_config

    config = load_config()
    return guards_from_env(config.guards)


def reset_guards() -> None:
    """Forget the cached guards so the next lookup re-reads files and env."""
    current_guards.cache_clear()


def resolve_limit(max_size: int | None, attribute: str) -> int:
    """Return max_size if given, else the configured guard named attribute."""
    if max_size is not None:
        return max_size
    return getattr(current_guards(), attribute)


__all__ = [
    'Guards',
    'ENV_VARS',
    'parse_size',
    'guards_from_env',
    'current_guards',
    'reset_guards',
    'resolve_limit',
]
