"""Arithmetic in the binary fields GF(2^(2m+1)) with the Suzuki twist.

Field elements are bit-polynomials packed into Python ints: bit i holds the
coefficient of x^i.  A :class:`Field` fixes the degree d = 2m+1 (always odd,
at least 3) and an irreducible reduction modulus, and hands out thin
:class:`FieldElement` wrappers that support ``+``, ``*``, ``**``, ``.inv()``
and ``.twist()``.

Because the degree is odd, the map x -> x**(2**(m+1)) is a field automorphism
whose square is the ordinary squaring map; it is the "twist" the whole 4x4
matrix construction hinges on.

For the sizes this package targets the field eagerly builds discrete
log/antilog tables over the smallest primitive element, so mul/inv/pow are a
couple of list lookups.  The schoolbook shift-and-xor routines used to build
the tables are kept as the reference path and the test suite checks the two
against each other exhaustively on small fields.
"""

from __future__ import annotations

from typing import Iterator

# Degrees above this skip table construction and fall back to the raw
# shift-and-xor routines (tables are O(2^degree) memory).
_TABLE_DEGREE_LIMIT = 20

# Full q*q multiplication tables (the matrix kernels' fast path) are built
# only for small fields.
_MUL_TABLE_ORDER_LIMIT = 512


class FieldMismatchError(ValueError):
    """Raised when an operation mixes elements of different fields."""


# ---------------------------------------------------------------------------
# GF(2)[x] helpers on raw bit-polynomials
# ---------------------------------------------------------------------------

def _poly_mul(a: int, b: int) -> int:
    """Carry-less product of two bit-polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _poly_mod(a: int, mod: int) -> int:
    """Remainder of a bit-polynomial modulo another."""
    dm = mod.bit_length() - 1
    while a.bit_length() - 1 >= dm and a:
        a ^= mod << (a.bit_length() - 1 - dm)
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _pow2_frobenius(mod: int, k: int) -> int:
    """x^(2^k) reduced modulo ``mod``, by k squarings."""
    h = _poly_mod(0b10, mod)
    for _ in range(k):
        h = _poly_mod(_poly_mul(h, h), mod)
    return h


def _factor(n: int) -> dict[int, int]:
    """Trial-division factorization; only ever called on small integers."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_irreducible(poly: int) -> bool:
    """Irreducibility over GF(2): x^(2^d) == x mod poly, plus the gcd
    condition gcd(x^(2^(d/p)) - x, poly) == 1 for every prime p dividing d."""
    d = poly.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if poly & 1 == 0:  # divisible by x
        return False
    if _pow2_frobenius(poly, d) != 0b10:
        return False
    for p in _factor(d):
        h = _pow2_frobenius(poly, d // p)
        if _poly_gcd(h ^ 0b10, poly) != 1:
            return False
    return True


def find_modulus(m: int) -> int:
    """Smallest irreducible bit-polynomial of degree 2m+1 (bit i = coeff of x^i)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    d = 2 * m + 1
    for cand in range((1 << d) | 1, 1 << (d + 1), 2):
        if is_irreducible(cand):
            return cand
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


# ---------------------------------------------------------------------------
# Field and elements
# ---------------------------------------------------------------------------

class Field:
    """GF(2^(2m+1)) under a fixed irreducible modulus.

    Attributes
    ----------
    m : twist parameter, q = 2^(2m+1)
    degree : 2m+1
    q : field order
    modulus : reduction polynomial, bit i = coefficient of x^i
    twist_exponent : 2^(m+1), the exponent of the twist automorphism
    """

    def __init__(self, m: int, modulus: int | None = None) -> None:
        if m < 1:
            raise ValueError("m must be >= 1 (field order 2^(2m+1) >= 8)")
        self.m = m
        self.degree = 2 * m + 1
        self.q = 1 << self.degree
        self.twist_exponent = 1 << (m + 1)
        if modulus is None:
            modulus = find_modulus(m)
        else:
            if modulus.bit_length() - 1 != self.degree:
                raise ValueError(
                    f"modulus degree {modulus.bit_length() - 1} != {self.degree}")
            if not is_irreducible(modulus):
                raise ValueError(f"modulus 0x{modulus:x} is reducible over GF(2)")
        self.modulus = modulus
        self.element_bytes = (self.degree + 7) // 8

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._mul_table: list[list[int]] | None = None
        self._generator: int | None = None
        if self.degree <= _TABLE_DEGREE_LIMIT:
            self._build_tables()

        self.zero = FieldElement(0, self)
        self.one = FieldElement(1, self)

    # -- raw reference arithmetic (no tables) --

    def _raw_mul(self, a: int, b: int) -> int:
        top = 1 << self.degree
        mod = self.modulus
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if a & top:
                a ^= mod
            b >>= 1
        return r

    def _raw_pow(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            k >>= 1
        return r

    def _find_generator(self) -> int:
        """Smallest element (as a bit pattern) of multiplicative order q-1."""
        cofactors = [(self.q - 1) // p for p in _factor(self.q - 1)]
        for g in range(2, self.q):
            if all(self._raw_pow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("unreachable: the multiplicative group is cyclic")

    def _build_tables(self) -> None:
        g = self._find_generator()
        self._generator = g
        q1 = self.q - 1
        exp = [1] * q1
        log = [0] * self.q
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = self._raw_mul(v, g)
        self._exp = exp
        self._log = log
        if self.q <= _MUL_TABLE_ORDER_LIMIT:
            mul = self._mul
            self._mul_table = [[mul(a, b) for b in range(self.q)] for a in range(self.q)]

    # -- table-backed arithmetic on raw ints --

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            return self._raw_mul(a, b)
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self._exp is None:
            return self._raw_pow(a, self.q - 2)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def _pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("zero has no multiplicative inverse")
            return 0
        if self._exp is None:
            if k < 0:
                return self._raw_pow(self._raw_pow(a, self.q - 2), -k)
            return self._raw_pow(a, k)
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def _twist(self, a: int) -> int:
        return self._pow(a, self.twist_exponent)

    # -- public surface --

    def element(self, bits: int) -> "FieldElement":
        """Wrap a bit-polynomial; bits must lie below the field degree."""
        if not 0 <= bits < self.q:
            raise ValueError(f"element 0x{bits:x} out of range for GF(2^{self.degree})")
        return FieldElement(bits, self)

    def elements(self) -> Iterator["FieldElement"]:
        for bits in range(self.q):
            yield FieldElement(bits, self)

    def primitive_element(self) -> "FieldElement":
        """Smallest generator of the multiplicative group, in bit order."""
        if self._generator is None:
            self._generator = self._find_generator()
        return FieldElement(self._generator, self)

    def __iter__(self) -> Iterator["FieldElement"]:
        return self.elements()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return self.degree == other.degree and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.degree, self.modulus))

    def __repr__(self) -> str:
        return f"Field(m={self.m}, modulus=0x{self.modulus:x})"


class FieldElement:
    """An element of a :class:`Field`, immutable and hashable."""

    __slots__ = ("bits", "field")

    def __init__(self, bits: int, field: Field) -> None:
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FieldElement is immutable")

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatchError(
                f"elements of {self.field!r} and {other.field!r} do not mix")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.bits ^ other.bits, self.field)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field._mul(self.bits, other.bits), self.field)

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.field._pow(self.bits, k), self.field)

    def inv(self) -> "FieldElement":
        return FieldElement(self.field._inv(self.bits), self.field)

    def twist(self) -> "FieldElement":
        """The automorphism x -> x**(2**(m+1)); twist(twist(x)) == x*x."""
        return FieldElement(self.field._twist(self.bits), self.field)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.bits == other.bits and self.field == other.field

    def __hash__(self) -> int:
        return hash((self.bits, self.field.modulus))

    def __repr__(self) -> str:
        return f"FieldElement(0b{self.bits:0{self.field.degree}b})"
