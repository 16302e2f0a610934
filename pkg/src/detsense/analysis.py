"""Exact coherence certificates and circulant structure discovery.

Coherence of an integer-alphabet matrix is certified exactly: the Gram
matrix of {-1,0,1} columns holds integer entries far below 2^53, so a
float64 BLAS product is exact and the maximum off-diagonal magnitude is
an exact integer.  The certificate carries the coherence as a Fraction
and the Gershgorin restricted-isometry table delta_k = (k-1) * mu.

The shift-group partition groups columns that are circular rotations of
one another; the recovery module exploits it to correlate against a
whole group with one FFT.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

import numpy as np

from .errors import InvariantError, ParameterError
from .matrix import RealMatrix, SensingMatrix

_GRAM_BLOCK = 4096


@dataclasses.dataclass(frozen=True)
class CoherenceCertificate:
    """Exact coherence data for a constant-column-norm integer matrix.

    max_inner     largest |<a_i, a_j>| over distinct columns, unnormalized
    norm_square   the common squared column norm
    coherence     Fraction(max_inner, norm_square)
    rip_order_max largest k with (k-1) * coherence < 1 (n when coherence 0)
    delta_table   k -> (k-1) * coherence for k = 1 .. rip_order_max
                  (empty when coherence is 0, the table is all zeros)
    degenerate    True when two columns are equal up to sign (coherence 1)
    """

    max_inner: int
    norm_square: int
    coherence: Fraction
    rip_order_max: int
    delta_table: dict
    degenerate: bool

    @property
    def coherence_float(self) -> float:
        return float(self.coherence)


def _max_offdiag_inner(entries: np.ndarray) -> int:
    e = entries.astype(np.float64)
    n = e.shape[1]
    best = 0.0
    for start in range(0, n, _GRAM_BLOCK):
        stop = min(start + _GRAM_BLOCK, n)
        gram = e[:, start:stop].T @ e
        for local in range(stop - start):
            gram[local, start + local] = 0.0
        block_max = np.abs(gram).max()
        if block_max > best:
            best = block_max
    return int(round(best))


def coherence(matrix: SensingMatrix) -> CoherenceCertificate:
    """Certify the coherence of a constant-norm integer matrix exactly.

    Requires at least two columns and a constant squared column norm.
    Entry magnitudes at most one and row counts below 2^24 keep every
    inner product an exactly representable float64 integer.
    """
    if matrix.cols < 2:
        raise ParameterError("coherence needs at least two columns")
    norm_square = matrix.constant_norm_square
    if norm_square is None:
        raise ParameterError("coherence requires constant column norms")
    max_inner = _max_offdiag_inner(matrix.entries)
    mu = Fraction(max_inner, norm_square)
    if mu > 1:
        raise InvariantError("inner product above the column norm")
    degenerate = max_inner == norm_square
    if mu == 0:
        order = matrix.cols
        table = {}
    else:
        order = (mu.denominator - 1) // mu.numerator + 1
        table = {k: (k - 1) * mu for k in range(1, order + 1)}
    return CoherenceCertificate(max_inner, norm_square, mu, order, table,
                                degenerate)


def coherence_bound_from_distance(length: int, min_distance: int):
    """Coherence bound and order threshold implied by a code distance.

    Bipolar columns built from a length-``length`` binary code with
    minimum distance d have pairwise normalized inner products at most
    (length - 2d) / length in magnitude.  Returns that bound as a
    Fraction together with the strict sparsity threshold
    length / (length - 2d) + 1 (math.inf when the bound is zero).
    Distances above length / 2 are rejected.
    """
    if length < 1:
        raise ParameterError("length must be positive")
    if not 0 <= min_distance * 2 <= length:
        raise ParameterError("need 0 <= min_distance <= length / 2")
    bound = Fraction(length - 2 * min_distance, length)
    if bound == 0:
        return bound, math.inf
    return bound, Fraction(length, length - 2 * min_distance) + 1


@dataclasses.dataclass(frozen=True)
class ShiftGroup:
    """Columns that are circular shifts of one shared base column.

    Member ``members[t]`` equals the base rotated so that entry s of the
    column is base[(s + offsets[t]) mod rows].  The base is the
    rotation with the smallest encoding, so the partition does not
    depend on column order.  period is the number of distinct rotations
    of the base; it always divides the row count.
    """

    members: tuple
    offsets: tuple
    base: np.ndarray
    period: int


@dataclasses.dataclass(frozen=True)
class ShiftGroupPartition:
    rows: int
    groups: tuple

    @property
    def group_count(self) -> int:
        return len(self.groups)


def _column_key_bytes(column: np.ndarray) -> bytes:
    if column.dtype.kind in "iu":
        # shift {-1,0,1} to {0,1,2} so byte order matches numeric order
        return (column.astype(np.int16) + 1).astype(np.uint8).tobytes()
    return np.ascontiguousarray(column).tobytes()


def shift_group_partition(matrix) -> ShiftGroupPartition:
    """Partition the columns into circular-shift equivalence classes."""
    if isinstance(matrix, (SensingMatrix, RealMatrix)):
        entries = matrix.entries
    else:
        entries = np.asarray(matrix)
        if entries.ndim != 2:
            raise ParameterError("expected a 2-d array")
    m, n = entries.shape
    itemsize = np.dtype(entries.dtype).itemsize
    groups = {}
    for j in range(n):
        column = np.ascontiguousarray(entries[:, j])
        raw = _column_key_bytes(column)
        doubled = raw + raw
        rotations = [doubled[itemsize * s: itemsize * (s + m)]
                     for s in range(m)]
        canonical = min(rotations)
        jstar = rotations.index(canonical)
        period = m
        for s in range(1, m):
            if rotations[s] == raw:
                period = s
                break
        if m % period != 0:
            raise InvariantError("rotation period does not divide the length")
        offset = (-jstar) % period
        base = np.roll(column, -jstar)
        key = (canonical, period)
        groups.setdefault(key, (base, []))[1].append((j, offset))
    built = []
    for (key, (base, members)) in groups.items():
        members.sort()
        base = np.ascontiguousarray(base)
        base.setflags(write=False)
        built.append(ShiftGroup(
            members=tuple(j for j, _ in members),
            offsets=tuple(off for _, off in members),
            base=base,
            period=key[1],
        ))
    built.sort(key=lambda g: g.members[0])
    return ShiftGroupPartition(rows=m, groups=tuple(built))
