from __future__ import annotations

import os

ENV_VAR = "TVSYN_MAX_ENUM"


def enum_limit(default: int) -> int:
    """Return the enumeration guard, overridden by ``TVSYN_MAX_ENUM`` if set."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
