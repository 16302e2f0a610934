"""Exact arithmetic over GF(2)[x] and small finite fields.

Polynomials over GF(2) are packed into Python ints, one coefficient per
bit (bit t is the coefficient of x^t), so addition is XOR and
multiplication is a carry-less product.  Field elements are plain ints:
for GF(2^e) the int packs the polynomial-basis coordinates under the
field's modulus, for prime GF(p) it is the usual residue.  Everything
here is immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import functools

from .errors import InvariantError, ParameterError

MAX_FIELD_ORDER = 1 << 24
MAX_EXTENSION_DEGREE = 24


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-packed GF(2) polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


class BinaryPolynomial:
    """A polynomial over GF(2), stored as a bit mask.

    The zero polynomial has degree -inf so that
    deg(a*b) == deg(a) + deg(b) holds without special cases.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: int):
        if bits < 0:
            raise ParameterError("polynomial mask must be non-negative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryPolynomial is immutable")

    @property
    def degree(self) -> int | float:
        return self.bits.bit_length() - 1 if self.bits else float("-inf")

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryPolynomial) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("BinaryPolynomial", self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_mul(self, other)

    def __divmod__(self, other: "BinaryPolynomial"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_divmod(self, other)[1]

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for t in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> t) & 1:
                terms.append("1" if t == 0 else ("x" if t == 1 else f"x^{t}"))
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"BinaryPolynomial({bin(self.bits)})"


def poly_mul(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Product in GF(2)[x].  deg(a*b) = deg a + deg b, always exact."""
    return BinaryPolynomial(clmul(a.bits, b.bits))


def poly_divmod(a: BinaryPolynomial, b: BinaryPolynomial):
    """Quotient and remainder of a by b in GF(2)[x].

    Raises ZeroDivisionError when b is the zero polynomial.
    Satisfies a == q*b + r with deg r < deg b.
    """
    if b.bits == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bits.bit_length() - 1
    q = 0
    r = a.bits
    while r and r.bit_length() - 1 >= db:
        shift = (r.bit_length() - 1) - db
        q |= 1 << shift
        r ^= b.bits << shift
    return BinaryPolynomial(q), BinaryPolynomial(r)


def _poly_mulmod(a: int, b: int, mod: int) -> int:
    out = clmul(a, b)
    dm = mod.bit_length() - 1
    while out and out.bit_length() - 1 >= dm:
        out ^= mod << ((out.bit_length() - 1) - dm)
    return out


def _poly_powmod(base: int, exponent: int, mod: int) -> int:
    result = 1
    acc = base
    while exponent:
        if exponent & 1:
            result = _poly_mulmod(result, acc, mod)
        acc = _poly_mulmod(acc, acc, mod)
        exponent >>= 1
    return result


def _factorize(n: int) -> list[int]:
    """Distinct prime factors by trial division.  Fine for n < 2^25."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def find_primitive_polynomial(degree: int) -> BinaryPolynomial:
    """Smallest-encoding primitive polynomial of the given degree over GF(2).

    Candidates of degree e are scanned in increasing integer encoding and
    the first one for which x has multiplicative order 2^e - 1 is
    returned.  Primitivity of x subsumes irreducibility.  Results are
    cached, so every caller in the process agrees on the canonical
    modulus for a given degree.
    """
    if not 1 <= degree <= MAX_EXTENSION_DEGREE:
        raise ParameterError(f"degree must be in [1, {MAX_EXTENSION_DEGREE}]")
    if degree == 1:
        return BinaryPolynomial(0b11)  # x + 1
    group = (1 << degree) - 1
    factors = _factorize(group)
    # constant term must be 1, else x divides the candidate
    for bits in range((1 << degree) + 1, 1 << (degree + 1), 2):
        if _poly_powmod(2, group, bits) != 1:
            continue
        if all(_poly_powmod(2, group // f, bits) != 1 for f in factors):
            return BinaryPolynomial(bits)
    raise InvariantError(f"no primitive polynomial of degree {degree} found")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class ExtensionField:
    """A finite field GF(p^e) with exp/log tables for O(1) arithmetic.

    Elements are ints in [0, order).  For characteristic 2 the int packs
    polynomial-basis coordinates modulo ``modulus``; for odd primes only
    e = 1 is supported and elements are residues mod p.  The generator
    is x (encoding 2) in extension fields and the smallest primitive
    root mod p in prime fields.  Instances are immutable; build them
    through :func:`build_field`, which caches per (p, e).
    """

    def __init__(self, characteristic: int, degree: int,
                 modulus: BinaryPolynomial | None, generator: int,
                 exp_table: tuple, log_table: tuple):
        self.characteristic = characteristic
        self.degree = degree
        self.order = characteristic ** degree
        self.modulus = modulus
        self.generator = generator
        self._exp = exp_table
        self._log = log_table

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.degree})"

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise ParameterError(f"{a} is not an element of {self!r}")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.characteristic == 2:
            return a ^ b
        return (a + b) % self.characteristic

    def sub(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.characteristic == 2:
            return a ^ b
        return (a - b) % self.characteristic

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a: int, k: int) -> int:
        self._check(a)
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * k) % (self.order - 1)]

    def exp(self, j: int) -> int:
        """generator ** j, exponent reduced mod order-1."""
        return self._exp[j % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log base the generator.  Zero has no logarithm."""
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("discrete log of zero")
        return self._log[a]

    def elements(self) -> range:
        return range(self.order)


@functools.lru_cache(maxsize=None)
def build_field(characteristic: int, degree: int) -> ExtensionField:
    """Construct GF(characteristic^degree) with its canonical generator.

    Characteristic 2 supports degrees up to 24 under the canonical
    primitive modulus from :func:`find_primitive_polynomial`.  Odd
    characteristics must be prime and are limited to degree 1 (the
    constructions here never need odd-characteristic extensions).
    Field order is capped at 2^24 to keep the tables desk-sized.
    """
    if degree < 1:
        raise ParameterError("degree must be at least 1")
    if not _is_prime(characteristic):
        raise ParameterError(f"characteristic {characteristic} is not prime")
    order = characteristic ** degree
    if order > MAX_FIELD_ORDER:
        raise ParameterError(f"field order {order} exceeds {MAX_FIELD_ORDER}")

    if characteristic == 2:
        modulus = find_primitive_polynomial(degree)
        mbits = modulus.bits
        top = 1 << degree
        exp = [0] * (order - 1)
        log = [-1] * order
        v = 1
        for j in range(order - 1):
            exp[j] = v
            log[v] = j
            v <<= 1
            if v & top:
                v ^= mbits
        if v != 1:
            raise InvariantError("generator order check failed")
        generator = 2 if degree > 1 else 1  # x, which is 1 mod (x+1) in GF(2)
        return ExtensionField(2, degree, modulus, generator,
                              tuple(exp), tuple(log))

    if degree != 1:
        raise ParameterError("odd characteristics support degree 1 only")
    p = characteristic
    factors = _factorize(p - 1)
    generator = None
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            generator = g
            break
    if generator is None:
        if p == 2:
            generator = 1
        else:
            raise InvariantError(f"no primitive root mod {p}")
    exp = [0] * max(p - 1, 1)
    log = [-1] * p
    v = 1
    for j in range(p - 1):
        exp[j] = v
        log[v] = j
        v = (v * generator) % p
    return ExtensionField(p, 1, None, generator, tuple(exp), tuple(log))


def product_of_roots(field: ExtensionField, exponents) -> BinaryPolynomial:
    """prod_{r in exponents} (x + g^r) over a characteristic-2 field.

    The exponent set must be closed under the Frobenius map r -> 2r
    (mod order-1, with 0 fixed); only then do all product coefficients
    land in the prime subfield {0, 1}.  A coefficient outside {0, 1}
    raises InvariantError.  The result has degree len(exponents).
    """
    if field.characteristic != 2:
        raise ParameterError("product_of_roots needs a characteristic-2 field")
    exps = sorted(set(int(e) for e in exponents))
    coeffs = [1]
    for e in exps:
        root = field.exp(e)
        nxt = [0] * (len(coeffs) + 1)
        for t, c in enumerate(coeffs):
            nxt[t + 1] ^= c
            nxt[t] = field.add(nxt[t], field.mul(c, root))
        coeffs = nxt
    bits = 0
    for t, c in enumerate(coeffs):
        if c not in (0, 1):
            raise InvariantError(
                "exponent set is not conjugation-closed, "
                f"coefficient {c} escapes GF(2)")
        bits |= c << t
    return BinaryPolynomial(bits)


def discrete_log(field: ExtensionField, value: int) -> int:
    """Discrete logarithm of value base the field generator."""
    return field.log(value)
