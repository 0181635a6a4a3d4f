"""Desk-scale enumeration limits.

Every exhaustive routine checks its work estimate against a cap. The
environment variable ``SSC_MAX_ENUM`` overrides all caps at once.
"""

from __future__ import annotations

import os

FIELD_EXHAUSTIVE = 2**16
SUBSPACE_ENUM = 10**7
CELL_ENUM = 10**7
QSYSTEM_ENUM = 2**16
EXACT_SEARCH = 10**5
FERRERS_DOTS = 20


class CapExceeded(ValueError):
    """Raised when a request exceeds a desk-scale enumeration cap."""


def cap(default: int) -> int:
    override = os.environ.get("SSC_MAX_ENUM")
    if override:
        return int(override)
    return default


def check(size: int, default: int, what: str) -> None:
    limit = cap(default)
    if size > limit:
        raise CapExceeded(f"{what}: {size} exceeds the enumeration cap {limit} (set SSC_MAX_ENUM to override)")
