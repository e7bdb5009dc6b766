"""Caps on the exponential enumerations.

Both sweeps (2^n splitting states, 2^e spanning subgraphs) refuse to run
past a configurable size.  The default cap is 24; the environment variable
VKBR_MAX_CROSSINGS overrides it for both kinds of sweep.
"""

import os

DEFAULT_CAP = 24
CAP_ENV_VAR = "VKBR_MAX_CROSSINGS"


class SizeLimitError(ValueError):
    """An enumeration would exceed the configured size cap."""


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SizeLimitError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise SizeLimitError(f"{CAP_ENV_VAR} must be nonnegative, got {cap}")
    return cap


def check_enumeration_size(count: int, what: str) -> None:
    """Raise SizeLimitError when `count` items exceed the cap."""
    cap = enumeration_cap()
    if count > cap:
        raise SizeLimitError(
            f"{what}: size {count} exceeds the cap of {cap} "
            f"(set {CAP_ENV_VAR} to override)"
        )
