"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` twin. Set ``HARARY_LAB_PURE=1`` to force the
fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("HARARY_LAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels


def _as_bytes(valid) -> bytes:
    return valid if isinstance(valid, (bytes, bytearray)) else bytes(valid)


def partition_counts(valid, n: int, prune: bool) -> list[int]:
    return list(_impl.partition_counts(_as_bytes(valid), n, prune))


def coloring_count(valid, n: int, k: int) -> int:
    if n and k <= 0:
        return 0
    return int(_impl.coloring_count(_as_bytes(valid), n, k))


def xi_counts(n: int, eu, ev) -> dict[tuple[int, int, int], int]:
    return dict(_impl.xi_counts(n, list(eu), list(ev)))


def tutte_counts(n: int, eu, ev) -> dict[tuple[int, int], int]:
    return dict(_impl.tutte_counts(n, list(eu), list(ev)))


def matching_counts(n: int, eu, ev) -> list[int]:
    return list(_impl.matching_counts(n, list(eu), list(ev)))
