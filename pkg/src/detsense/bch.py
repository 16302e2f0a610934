"""Bipolar sensing matrices from even-weight subcodes of cyclic codes.

The construction selects roots of x^(2^mt - 1) + 1 whose exponent bit
patterns keep every pair of ones at circular distance greater than a
chosen spacing.  The product of those roots is the parity-check
polynomial h of a cyclic code; the even-weight codewords of that code,
mapped 0 -> -1 and 1 -> +1 and scaled by 1/sqrt(n), give columns whose
pairwise inner products are bounded by the code's minimum distance.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from . import kernels
from .errors import InvariantError, ParameterError
from .galois import (BinaryPolynomial, build_field, clmul, poly_divmod,
                     poly_mul, product_of_roots)
from .matrix import SensingMatrix, check_matrix_size

MAX_FIELD_DEGREE = 24
# full codeword enumeration is 2^(dimension-1) words; cap the exponent
MAX_ENUM_LOG2 = 26


@dataclasses.dataclass(frozen=True)
class SpacingSequenceSet:
    """All length-bit patterns meeting a circular spacing constraint.

    members are the qualifying patterns as ints, sorted ascending.  A
    pattern qualifies when every circular run of zeros between
    consecutive ones has length at least min_spacing.  Patterns with
    fewer than two ones qualify vacuously.
    """

    length: int
    min_spacing: int
    members: tuple

    @property
    def count(self) -> int:
        return len(self.members)


def enumerate_spacing_sequences(length: int, min_spacing: int) -> SpacingSequenceSet:
    """Exhaustively enumerate qualifying patterns of the given length."""
    if not 1 <= min_spacing <= length:
        raise ParameterError("need 1 <= min_spacing <= length")
    if length > MAX_FIELD_DEGREE:
        raise ParameterError(f"length capped at {MAX_FIELD_DEGREE}")
    members = kernels.circular_spacing_members(min_spacing, length)
    return SpacingSequenceSet(length, min_spacing, tuple(members))


@dataclasses.dataclass(frozen=True)
class BchCodeSpec:
    """Derived data for one (field_degree, spacing) code.

    length              2^field_degree - 1
    modulus             canonical primitive polynomial of the field
    parity_check        h, product of the selected roots
    generator           g = (x^length + 1) / h
    dimension           deg h, equals the spacing sequence count
    min_distance_bound  guaranteed minimum Hamming distance of the code
    """

    field_degree: int
    spacing: int
    length: int
    modulus: BinaryPolynomial
    parity_check: BinaryPolynomial
    generator: BinaryPolynomial
    dimension: int
    min_distance_bound: int


def build_code_spec(field_degree: int, spacing: int) -> BchCodeSpec:
    """Construct the code whose parity-check roots obey the spacing rule.

    The selected exponent set is closed under doubling mod 2^mt - 1
    (rotation of the bit pattern), so h lands in GF(2)[x].  Checked
    invariants: h * g == x^n + 1, (x + 1) divides h, and
    deg h == the spacing sequence count.
    """
    if field_degree < 2:
        # degree 1 leaves only one root exponent, no room for a code
        raise ParameterError("field_degree must be at least 2")
    if not 1 <= spacing <= field_degree:
        raise ParameterError("need 1 <= spacing <= field_degree")
    if field_degree > MAX_FIELD_DEGREE:
        raise ParameterError(f"field_degree capped at {MAX_FIELD_DEGREE}")
    seqs = enumerate_spacing_sequences(field_degree, spacing)
    field = build_field(2, field_degree)
    n = (1 << field_degree) - 1
    h = product_of_roots(field, seqs.members)
    if h.degree != seqs.count:
        raise InvariantError("parity-check degree != root count")
    if bin(h.bits).count("1") % 2 != 0:
        raise InvariantError("x + 1 does not divide the parity check")
    full = BinaryPolynomial((1 << n) | 1)
    g, rem = poly_divmod(full, h)
    if rem.bits != 0:
        raise InvariantError("parity check does not divide x^n + 1")
    if poly_mul(g, h) != full:
        raise InvariantError("generator times parity check != x^n + 1")
    low = field_degree - spacing - 1
    if low >= 0:
        dmin = (1 << (field_degree - 1)) - (1 << low)
    else:
        # maximal spacing: the code consists of maximal-length sequences,
        # their complements and zero; true distance is 2^(mt-1) - 1
        dmin = (1 << (field_degree - 1)) - 1
    return BchCodeSpec(field_degree, spacing, n, field.modulus, h, g,
                       seqs.count, dmin)


def enumerate_even_parity_codewords(spec: BchCodeSpec) -> list:
    """All even-weight codewords as bit-packed ints, sorted ascending.

    The even-weight subcode is the ideal generated by (x + 1) * g in
    GF(2)[x] / (x^length + 1); multiplying every message of degree
    below dimension - 1 by that base enumerates it without duplicates,
    2^(dimension - 1) words in total.  The set is closed under circular
    shift and contains no complementary pair.
    """
    if spec.dimension - 1 > MAX_ENUM_LOG2:
        raise ParameterError(
            f"2^{spec.dimension - 1} codewords exceed the enumeration cap")
    base = clmul(0b11, spec.generator.bits)
    words = [clmul(u, base) for u in range(1 << (spec.dimension - 1))]
    top = 1 << spec.length
    for w in words:
        if w >= top:
            raise InvariantError("codeword exceeds the code length")
    words.sort()
    return words


def assemble_bipolar_matrix(spec: BchCodeSpec) -> SensingMatrix:
    """Map codewords to {-1,+1} columns, one column per codeword.

    Bit t of a codeword becomes entry t of its column (+1 for a one,
    -1 for a zero), columns ordered by ascending codeword value.  When
    spacing == field_degree the all-zero codeword is dropped, giving a
    square circulant of all cyclic shifts of one maximal-length
    sequence; otherwise the all-minus column is kept.
    """
    words = enumerate_even_parity_codewords(spec)
    if spec.spacing == spec.field_degree:
        words = [w for w in words if w != 0]
    if not words:
        raise InvariantError("no codewords to assemble")
    check_matrix_size(spec.length, len(words))
    # words can exceed 64 bits, so unpack through a byte buffer
    nbytes = (spec.length + 7) // 8
    raw = np.frombuffer(
        b"".join(w.to_bytes(nbytes, "little") for w in words),
        dtype=np.uint8).reshape(len(words), nbytes)
    bits = np.unpackbits(raw, axis=1, bitorder="little")[:, :spec.length]
    entries = (bits.T.astype(np.int8) * 2 - 1)
    descriptor = {
        "family": "bch",
        "mtilde": spec.field_degree,
        "i": spec.spacing,
        "modulus": spec.modulus.bits,
    }
    return SensingMatrix(entries, "bipolar", descriptor)


def bipolar_matrix(field_degree: int, spacing: int) -> SensingMatrix:
    """Convenience wrapper: spec construction plus assembly."""
    return assemble_bipolar_matrix(build_code_spec(field_degree, spacing))
