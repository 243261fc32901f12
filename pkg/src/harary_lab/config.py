"""Order and size bounds shared by every module.

Defaults can be raised (up to a hard cap) with the ``HARARY_LAB_BOUNDS``
environment variable, e.g. ``HARARY_LAB_BOUNDS="partition=13,canonical=11"``.
"""

from __future__ import annotations

import os

# name -> (default, hard cap)
_BOUNDS: dict[str, tuple[int, int]] = {
    "canonical": (10, 12),  # vertices, canonical labeling
    "contains": (10, 10),  # vertices, brute-force containment
    "enumerate": (7, 7),  # vertices, non-isomorphic enumeration
    "classify": (6, 7),  # vertices, property classification
    "partition": (12, 14),  # vertices, set-partition enumeration
    "colorings": (10**7, 10**8),  # k**n maps for the direct count
    "chromatic": (12, 14),  # vertices, deletion-contraction
    "tutte_edges": (16, 20),
    "matching_edges": (16, 20),
    "xi_edges": (14, 16),  # state sum
    "xi_order": (10, 12),  # recursion
    "subset_order": (16, 20),
    "spectrum": (10, 16),
}


class BoundExceeded(ValueError):
    """Raised when an input is larger than the configured bound."""


def _overrides() -> dict[str, int]:
    raw = os.environ.get("HARARY_LAB_BOUNDS", "").strip()
    out: dict[str, int] = {}
    if not raw:
        return out
    for item in raw.split(","):
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in _BOUNDS:
            raise ValueError(f"unknown bound {name!r} in HARARY_LAB_BOUNDS")
        v = int(value)
        cap = _BOUNDS[name][1]
        if v < 0 or v > cap:
            raise ValueError(f"bound {name}={v} outside 0..{cap}")
        out[name] = v
    return out


def bound(name: str) -> int:
    """Current value of a named bound."""
    return _overrides().get(name, _BOUNDS[name][0])


def check(name: str, value: int, what: str = "") -> None:
    limit = bound(name)
    if value > limit:
        label = what or name
        raise BoundExceeded(f"{label} = {value} exceeds bound {limit} ({name})")


def all_bounds() -> dict[str, int]:
    return {name: bound(name) for name in _BOUNDS}
