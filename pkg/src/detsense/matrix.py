"""Sensing matrix containers.

A SensingMatrix stores small-alphabet entries ({0,1}, {-1,+1} or
{-1,0,+1}) as int8 together with per-column squared norms, so coherence
can later be certified with exact integer arithmetic.  RealMatrix is the
float counterpart used for the random baseline.  Both are frozen and
their arrays are marked read-only after validation.
"""

from __future__ import annotations

import dataclasses
from types import MappingProxyType

import numpy as np

from .errors import ParameterError

ALPHABETS = {
    "binary": (0, 1),
    "bipolar": (-1, 1),
    "ternary": (-1, 0, 1),
}

# hard cap on rows*cols for any constructed matrix; keeps every code path
# comfortably in memory at desk scale
MAX_ENTRIES = 1 << 27


def check_matrix_size(rows: int, cols: int) -> None:
    if rows < 1 or cols < 1:
        raise ParameterError("matrix dimensions must be positive")
    if rows * cols > MAX_ENTRIES:
        raise ParameterError(
            f"matrix with {rows}x{cols} = {rows * cols} entries exceeds "
            f"the {MAX_ENTRIES} entry cap")


@dataclasses.dataclass(frozen=True, eq=False, repr=False)
class SensingMatrix:
    """Integer-alphabet matrix whose columns are the sensing vectors.

    entries       (m, n) int8 array
    alphabet      'binary', 'bipolar' or 'ternary'
    norm_squares  (n,) int64, squared Euclidean norm of each column
    descriptor    construction parameters, for provenance and file headers
    """

    entries: np.ndarray
    alphabet: str
    norm_squares: np.ndarray
    descriptor: MappingProxyType

    def __init__(self, entries, alphabet: str, descriptor=None):
        ent = np.asarray(entries, dtype=np.int8)
        if ent.ndim != 2:
            raise ParameterError("entries must be a 2-d array")
        check_matrix_size(ent.shape[0], ent.shape[1])
        if alphabet not in ALPHABETS:
            raise ParameterError(f"unknown alphabet {alphabet!r}")
        allowed = ALPHABETS[alphabet]
        values = np.unique(ent)
        if not np.all(np.isin(values, allowed)):
            raise ParameterError(
                f"entries contain values outside the {alphabet} alphabet")
        ns = (ent.astype(np.int64) ** 2).sum(axis=0)
        if np.any(ns == 0):
            raise ParameterError("zero column is not allowed")
        ent = np.ascontiguousarray(ent)
        ent.setflags(write=False)
        ns.setflags(write=False)
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "norm_squares", ns)
        object.__setattr__(self, "descriptor",
                           MappingProxyType(dict(descriptor or {})))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def constant_norm_square(self):
        """The common squared column norm, or None if columns differ."""
        first = int(self.norm_squares[0])
        if np.all(self.norm_squares == first):
            return first
        return None

    def unit_columns(self) -> np.ndarray:
        """float64 copy with each column scaled to unit Euclidean norm."""
        return self.entries / np.sqrt(self.norm_squares.astype(np.float64))

    def __repr__(self) -> str:
        return (f"SensingMatrix({self.rows}x{self.cols}, "
                f"alphabet={self.alphabet!r})")


@dataclasses.dataclass(frozen=True, eq=False, repr=False)
class RealMatrix:
    """Real-valued matrix with unit-norm columns (the random baseline)."""

    entries: np.ndarray
    descriptor: MappingProxyType
    alphabet: str = "gaussian"

    def __init__(self, entries, descriptor=None, alphabet: str = "gaussian"):
        ent = np.ascontiguousarray(np.asarray(entries, dtype=np.float64))
        if ent.ndim != 2:
            raise ParameterError("entries must be a 2-d array")
        check_matrix_size(ent.shape[0], ent.shape[1])
        norms = np.sqrt((ent * ent).sum(axis=0))
        if np.any(norms == 0):
            raise ParameterError("zero column is not allowed")
        if not np.allclose(norms, 1.0, atol=1e-9):
            raise ParameterError("RealMatrix columns must be unit-normalized")
        ent.setflags(write=False)
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "descriptor",
                           MappingProxyType(dict(descriptor or {})))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def unit_columns(self) -> np.ndarray:
        return self.entries

    def __repr__(self) -> str:
        return f"RealMatrix({self.rows}x{self.cols})"


def as_unit_columns(matrix) -> np.ndarray:
    """Unit-column float64 view of any accepted matrix representation.

    SensingMatrix and RealMatrix are normalized through their own
    methods; a bare ndarray is trusted to hold unit columns already.
    """
    if isinstance(matrix, (SensingMatrix, RealMatrix)):
        return matrix.unit_columns()
    arr = np.asarray(matrix, dtype=np.float64)
    if arr.ndim != 2:
        raise ParameterError("expected a 2-d array of unit columns")
    return arr
