"""Backend selection for the spacing enumeration kernels.

Imports the compiled extension when it was built, otherwise the pure
numpy fallback.  BACKEND records which one won so tests and benchmarks
can report it.  Both backends implement the same two functions with
identical results:

* circular_spacing_count(spacing, length) -> int
* circular_spacing_members(spacing, length) -> list[int], sorted
"""

from __future__ import annotations

try:
    from . import _speedups as _impl

    BACKEND = "cython"
except ImportError:  # extension not built, e.g. no compiler at install time
    from . import _speedups_py as _impl

    BACKEND = "python"

from . import _speedups_py as _pure


def circular_spacing_count(spacing: int, length: int) -> int:
    return _impl.circular_spacing_count(spacing, length)


def circular_spacing_members(spacing: int, length: int) -> list:
    return list(_impl.circular_spacing_members(spacing, length))


def available_backends() -> dict:
    """Importable kernel implementations keyed by name."""
    out = {"python": _pure}
    if BACKEND == "cython":
        out["cython"] = _impl
    return out
