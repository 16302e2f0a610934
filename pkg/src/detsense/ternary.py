"""Ternary sensing matrices by embedding bipolar columns into binary
column supports.

Given a binary matrix S of constant column weight w and a bipolar
matrix X with w rows, every pair (S column, X column) yields a ternary
column: the X column written into the support of the S column, zeros
elsewhere.  Inner products between ternary columns that share a support
equal the corresponding X inner products exactly; across different
supports they are bounded by the S overlap, because every overlap cell
contributes a factor in {-1, +1}.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .errors import ParameterError
from .matrix import SensingMatrix, check_matrix_size

# lengths 2^j - 1 that are prime, the sizes where both factor familes
# of interest exist at matching dimensions
MERSENNE_PRIMES = (3, 7, 31, 127, 8191)


@dataclasses.dataclass(frozen=True)
class EmbeddingPattern:
    """Positions inside a length-``length`` vector that receive values."""

    length: int
    one_positions: tuple

    def __post_init__(self):
        pos = tuple(int(t) for t in self.one_positions)
        if any(not 0 <= t < self.length for t in pos):
            raise ParameterError("positions out of range")
        if len(set(pos)) != len(pos):
            raise ParameterError("positions must be distinct")
        if tuple(sorted(pos)) != pos:
            raise ParameterError("positions must be sorted ascending")
        object.__setattr__(self, "one_positions", pos)

    @classmethod
    def from_indicator(cls, vector) -> "EmbeddingPattern":
        arr = np.asarray(vector)
        if arr.ndim != 1 or not np.all(np.isin(arr, (0, 1))):
            raise ParameterError("indicator must be a 1-d 0/1 vector")
        return cls(arr.size, tuple(int(t) for t in np.flatnonzero(arr)))

    @property
    def weight(self) -> int:
        return len(self.one_positions)


def embed(pattern: EmbeddingPattern, values) -> np.ndarray:
    """Scatter ``values`` into the pattern positions of a zero vector."""
    vals = np.asarray(values)
    if vals.ndim != 1 or vals.size != pattern.weight:
        raise ParameterError("value count must equal the pattern weight")
    out = np.zeros(pattern.length, dtype=np.result_type(vals, np.int8))
    out[list(pattern.one_positions)] = vals
    return out


def ternary_params(p: int, k: int):
    """Factor parameters (spacing, field_degree) for a target sparsity.

    For a Mersenne-prime weight p and target order k < p, the bipolar
    factor needs pairwise inner bound p/k, achieved with spacing
    i = ceil(log2 k) at field degree matching the weight: returns
    (p // k, ceil(log2 k)) as (inner_bound, spacing).
    """
    if p not in MERSENNE_PRIMES:
        raise ParameterError(f"p must be one of {MERSENNE_PRIMES}")
    if not 1 <= k < p:
        raise ParameterError("need 1 <= k < p")
    return p // k, math.ceil(math.log2(k)) if k > 1 else 0


def ternary_matrix(binary_part: SensingMatrix,
                   bipolar_part: SensingMatrix) -> SensingMatrix:
    """Kronecker-style combination of a binary and a bipolar matrix.

    Output column (i, j), laid out i-major, is bipolar column j embedded
    into the support of binary column i.  All columns have squared norm
    equal to the binary column weight.  The descriptor records the two
    inner-product bounds: within a shared support (the bipolar maximum)
    and across supports (the binary overlap maximum).
    """
    if binary_part.alphabet != "binary":
        raise ParameterError("first factor must be a binary matrix")
    if bipolar_part.alphabet != "bipolar":
        raise ParameterError("second factor must be a bipolar matrix")
    weight = binary_part.constant_norm_square
    if weight is None:
        raise ParameterError("binary factor must have constant column weight")
    if bipolar_part.rows != weight:
        raise ParameterError(
            f"bipolar factor needs {weight} rows to fill the supports, "
            f"got {bipolar_part.rows}")
    m = binary_part.rows
    n_s = binary_part.cols
    n_x = bipolar_part.cols
    check_matrix_size(m, n_s * n_x)
    entries = np.zeros((m, n_s * n_x), dtype=np.int8)
    xe = bipolar_part.entries
    for i in range(n_s):
        support = np.flatnonzero(binary_part.entries[:, i])
        block = entries[:, i * n_x:(i + 1) * n_x]
        block[support, :] = xe
    from .analysis import coherence  # local import, avoids a cycle

    same_bound = coherence(bipolar_part).max_inner if n_x > 1 else 0
    cross_bound = coherence(binary_part).max_inner if n_s > 1 else 0
    descriptor = {
        "family": "ternary",
        "same_pattern_bound": same_bound,
        "cross_pattern_bound": cross_bound,
    }
    for key, value in binary_part.descriptor.items():
        descriptor[f"s_{key}"] = value
    for key, value in bipolar_part.descriptor.items():
        descriptor[f"x_{key}"] = value
    return SensingMatrix(entries, "ternary", descriptor)


def walsh_hadamard_matrix(exponent: int) -> SensingMatrix:
    """Sylvester-type bipolar 2^exponent square matrix, orthogonal columns."""
    if not 0 <= exponent <= 13:
        raise ParameterError("exponent must be in [0, 13]")
    core = np.array([[1, 1], [1, -1]], dtype=np.int8)
    h = np.array([[1]], dtype=np.int8)
    for _ in range(exponent):
        h = np.kron(h, core)
    return SensingMatrix(h.astype(np.int8), "bipolar",
                         {"family": "walsh-hadamard", "exponent": exponent})
