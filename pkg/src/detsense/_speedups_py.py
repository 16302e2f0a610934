"""Pure numpy fallback for the circular spacing enumeration.

Same contract as the compiled _speedups module.  Patterns are filtered
in chunks, applying one rotation constraint at a time so survivors
shrink geometrically before the next constraint is checked.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 22


def _survivors(spacing: int, length: int):
    mask = np.uint64((1 << length) - 1)
    smax = min(spacing, length - 1)
    n = 1 << length
    for start in range(0, n, _CHUNK):
        v = np.arange(start, min(start + _CHUNK, n), dtype=np.uint64)
        for s in range(1, smax + 1):
            if v.size == 0:
                break
            sh = np.uint64(s)
            back = np.uint64(length - s)
            rot = ((v << sh) | (v >> back)) & mask
            v = v[(v & rot) == 0]
        yield v


def circular_spacing_count(spacing: int, length: int) -> int:
    if not (1 <= length <= 30) or spacing < 1:
        raise ValueError("need 1 <= length <= 30 and spacing >= 1")
    return int(sum(v.size for v in _survivors(spacing, length)))


def circular_spacing_members(spacing: int, length: int) -> list:
    if not (1 <= length <= 24) or spacing < 1:
        raise ValueError("need 1 <= length <= 24 and spacing >= 1")
    parts = [v for v in _survivors(spacing, length) if v.size]
    if not parts:
        return []
    return [int(x) for x in np.concatenate(parts)]
