"""Binary sensing matrices from polynomial evaluation and from optical
orthogonal codes.

Two families live here.  The DeVore family evaluates every polynomial
of degree at most r over a field of size p and marks one cell per
evaluation point on a p x p grid, giving p^2 x p^(r+1) matrices with
column weight p and pairwise overlaps at most r.  The OOC family takes
cyclotomic classes in GF(16^a), whose difference structure keeps all
circular auto and cross correlations at or below 2, and spins each
codeword through all of its cyclic shifts.
"""

from __future__ import annotations

import dataclasses
import itertools

import numpy as np

from .errors import InvariantError, ParameterError
from .galois import build_field, discrete_log, _is_prime
from .matrix import SensingMatrix, check_matrix_size

MAX_DEVORE_P = 64


@dataclasses.dataclass(frozen=True)
class DevoreDesign:
    """Parameters of one polynomial-evaluation design."""

    p: int
    r: int

    def __post_init__(self):
        p, r = self.p, self.r
        if p < 2 or p > MAX_DEVORE_P:
            raise ParameterError(f"p must be in [2, {MAX_DEVORE_P}]")
        if not (_is_prime(p) or _is_power_of_two(p)):
            raise ParameterError("p must be prime or a power of two")
        if not 0 <= r < p:
            raise ParameterError("need 0 <= r < p")

    @property
    def rows(self) -> int:
        return self.p * self.p

    @property
    def cols(self) -> int:
        return self.p ** (self.r + 1)

    @property
    def column_weight(self) -> int:
        return self.p


def _is_power_of_two(p: int) -> bool:
    return p >= 2 and (p & (p - 1)) == 0


def _field_ops(p: int):
    """(add, mul) callables for arithmetic on {0..p-1}."""
    if _is_prime(p):
        return (lambda a, b: (a + b) % p), (lambda a, b: (a * b) % p)
    field = build_field(2, p.bit_length() - 1)
    return field.add, field.mul


def devore_matrix(p: int, r: int) -> SensingMatrix:
    """Binary p^2 x p^(r+1) matrix of polynomial evaluation graphs.

    Columns are indexed by coefficient tuples (c_0, ..., c_r) in
    lexicographic order; the column for Q(x) = sum c_j x^j has ones
    exactly at rows x*p + Q(x).  Two distinct polynomials of degree at
    most r agree on at most r points, so unnormalized pairwise inner
    products never exceed r.
    """
    design = DevoreDesign(p, r)
    check_matrix_size(design.rows, design.cols)
    add, mul = _field_ops(p)
    entries = np.zeros((design.rows, design.cols), dtype=np.int8)
    for col, coeffs in enumerate(itertools.product(range(p), repeat=r + 1)):
        # Horner from the top coefficient; coeffs[j] multiplies x^j
        for x in range(p):
            acc = 0
            for c in reversed(coeffs):
                acc = add(mul(acc, x), c)
            entries[x * p + acc, col] = 1
    descriptor = {"family": "devore", "p": p, "r": r}
    if not _is_prime(p):
        descriptor["modulus"] = build_field(2, p.bit_length() - 1).modulus.bits
    return SensingMatrix(entries, "binary", descriptor)


def johnson_bound(m: int, w: int, max_overlap: int) -> int:
    """Largest code size allowed for binary weight-w words of length m
    with pairwise intersections at most max_overlap.

    Nested floor chain, innermost level first:
    R = floor(m/w * floor((m-1)/(w-1) * ... * floor((m-L)/(w-L)) ...))
    with L = max_overlap.
    """
    if not 0 <= max_overlap < w <= m:
        raise ParameterError("need 0 <= max_overlap < w <= m")
    value = (m - max_overlap) // (w - max_overlap)
    for j in range(max_overlap - 1, -1, -1):
        value = (m - j) * value // (w - j)
    return value


def devore_optimality_ratio(p: int, r: int):
    """cols / johnson_bound for the (p, r) design, as an exact Fraction."""
    from fractions import Fraction

    design = DevoreDesign(p, r)
    bound = johnson_bound(design.rows, design.column_weight, r)
    return Fraction(design.cols, bound)


@dataclasses.dataclass(frozen=True)
class OocCodeFamily:
    """Constant-weight cyclic code family with correlation bound 2.

    supports holds one sorted tuple of one-positions per codeword; all
    circular autocorrelations (nonzero shift) and cross correlations of
    the indicator vectors are at most correlation_bound.
    """

    a: int
    length: int
    weight: int
    supports: tuple
    correlation_bound: int


def _rotate_support(support, shift: int, length: int):
    return tuple(sorted((pos + shift) % length for pos in support))


def _verify_correlations(supports, length: int, bound: int) -> None:
    full = (1 << length) - 1
    masks = []
    for support in supports:
        mask = 0
        for pos in support:
            mask |= 1 << pos
        masks.append(mask)
    rotations = [
        [((m << s) | (m >> (length - s))) & full if s else m
         for s in range(length)]
        for m in masks
    ]
    for idx, m1 in enumerate(masks):
        for jdx in range(idx, len(masks)):
            for shift in range(length):
                if idx == jdx and shift == 0:
                    continue
                if (m1 & rotations[jdx][shift]).bit_count() > bound:
                    raise InvariantError(
                        f"correlation bound {bound} violated at pair "
                        f"({idx}, {jdx}) shift {shift}")


def ooc_family(a: int) -> OocCodeFamily:
    """Weight-5 optical orthogonal code of length 16^a - 1.

    Work in GF(16^a) with primitive element g and d = (16^a - 1) / 5.
    The d-th powers split the nonzero elements into five cosets; for
    each i in 1..d-1 the codeword support is
    log_g(g^(j*d + i) - 1) for j = 1..5.  Subtracting one is XOR with
    one in characteristic two.  Correlations are verified exhaustively.
    """
    if a not in (1, 2):
        raise ParameterError("a must be 1 or 2")
    field = build_field(2, 4 * a)
    q = field.order
    length = q - 1
    if length % 5 != 0:
        raise InvariantError("field order minus one must be divisible by 5")
    d = length // 5
    supports = []
    for i in range(1, d):
        positions = []
        for j in range(1, 6):
            v = field.exp(j * d + i)
            shifted = v ^ 1  # v - 1 in characteristic 2
            if shifted == 0:
                raise InvariantError("coset element equal to one")
            positions.append(discrete_log(field, shifted))
        support = tuple(sorted(positions))
        if len(set(support)) != 5:
            raise InvariantError("codeword support has repeated positions")
        supports.append(support)
    _verify_correlations(supports, length, 2)
    return OocCodeFamily(a, length, 5, tuple(supports), 2)


def ooc_matrix(a: int) -> SensingMatrix:
    """Binary matrix of all distinct cyclic shifts of the OOC codewords.

    Each codeword contributes its full shift orbit; duplicate columns
    arising from overlapping orbits are removed, keeping first
    occurrence order (codeword index, then shift).
    """
    family = ooc_family(a)
    length = family.length
    seen = {}
    order = []
    for support in family.supports:
        for shift in range(length):
            col = _rotate_support(support, shift, length)
            if col not in seen:
                seen[col] = True
                order.append(col)
    check_matrix_size(length, len(order))
    entries = np.zeros((length, len(order)), dtype=np.int8)
    for col_idx, support in enumerate(order):
        entries[list(support), col_idx] = 1
    descriptor = {
        "family": "ooc",
        "a": a,
        "modulus": build_field(2, 4 * a).modulus.bits,
    }
    return SensingMatrix(entries, "binary", descriptor)
