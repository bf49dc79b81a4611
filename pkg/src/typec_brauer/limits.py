"""Resource bound for the exhaustive enumerations."""

import os

ENV_VAR = "TYPECBRAUER_ENUM_BOUND"
DEFAULT_ENUM_BOUND = 5


def enumeration_bound(override=None) -> int:
    """Effective bound: explicit override, else the environment, else the default."""
    if override is not None:
        return int(override)
    raw = os.environ.get(ENV_VAR)
    if raw is not None:
        return int(raw)
    return DEFAULT_ENUM_BOUND
