"""Exact arithmetic in binary extension fields GF(2^m).

Elements are integer bit masks over a fixed modulus polynomial.  Fields
up to degree 20 carry full exponent/antilog tables, so multiplication is
two lookups; larger fields multiply carry-lessly and reduce on the fly.
The modulus for each degree comes from a fixed table, which pins down
the primitive element alpha and makes all downstream artifacts
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _gf2x
from ._tables import PRIMITIVE_POLY

MAX_FIELD_DEGREE = 32  # build_field range; primitivity is certified up to here
TABLE_DEGREE = 20  # full exp/log tables up to this degree


class BinaryField:
    """GF(2^m) with a fixed modulus polynomial.

    Immutable after construction; all operations are pure, so instances
    are safe to share across threads.
    """

    def __init__(self, m: int, modulus: int, primitive: bool):
        self.m = m
        self.modulus = modulus
        self.order = (1 << m) - 1  # size of the multiplicative group
        self.primitive = primitive
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        if primitive and m <= TABLE_DEGREE:
            self._build_tables()

    def _build_tables(self) -> None:
        order = self.order
        exp = [0] * order
        log = [0] * (order + 1)
        top = 1 << self.m
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & top:
                x ^= self.modulus
        if x != 1:
            raise ValueError(f"modulus 0x{self.modulus:X} is not primitive")
        self.exp = exp
        self.log = log

    # --- arithmetic on raw masks ---

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.log is not None:
            return self.exp[(self.log[a] + self.log[b]) % self.order]
        if a == b:
            return _gf2x.sqmod(a, self.modulus)  # spread-squaring beats the bit loop
        return _gf2x.mulmod(a, b, self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.log is not None:
            return self.exp[(-self.log[a]) % self.order]
        return _gf2x.powmod(a, self.order - 1, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero field element")
            return 0 if e else 1
        e %= self.order
        if self.log is not None:
            return self.exp[(self.log[a] * e) % self.order]
        return _gf2x.powmod(a, e, self.modulus)

    def alpha_pow(self, k: int) -> int:
        """alpha^k where alpha = x is the fixed primitive element."""
        if not self.primitive:
            raise ValueError("field modulus is not certified primitive")
        k %= self.order
        if self.exp is not None:
            return self.exp[k]
        return _gf2x.powmod(2, k, self.modulus)

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + a^4 + ... + a^(2^(m-1)), in {0, 1}."""
        t = a
        c = a
        for _ in range(self.m - 1):
            c = self.mul(c, c)
            t ^= c
        if t not in (0, 1):
            raise AssertionError("trace escaped the prime subfield")
        return t

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        if self.log is not None:
            from math import gcd

            return self.order // gcd(self.order, self.log[a])
        t = self.order
        for p in _gf2x._prime_factors(self.order):
            while t % p == 0 and _gf2x.powmod(a, t // p, self.modulus) == 1:
                t //= p
        return t

    # --- element wrapping ---

    def element(self, value: int) -> FieldElement:
        if not 0 <= value <= self.order:
            raise ValueError(f"value 0x{value:X} out of range for GF(2^{self.m})")
        return FieldElement(self, value)

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, self.alpha_pow(1))

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryField) and (self.m, self.modulus) == (
            other.m,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __repr__(self) -> str:
        return f"BinaryField(m={self.m}, modulus=0x{self.modulus:X})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a BinaryField, with operator sugar over the int core."""

    field: BinaryField
    value: int

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.value ^ other.value)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()

    @property
    def exponent(self) -> int | None:
        """Discrete log base alpha, or None for the zero element.

        Requires lookup tables, hence degree <= 20.
        """
        if self.value == 0:
            return None
        if self.field.log is None:
            raise ValueError("no discrete-log table for this field size")
        return self.field.log[self.value]

    def trace(self) -> int:
        return self.field.trace(self.value)

    def order(self) -> int:
        return self.field.element_order(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement(GF(2^{self.field.m}), 0x{self.value:X})"


_field_cache: dict[int, BinaryField] = {}


def build_field(m: int) -> BinaryField:
    """GF(2^m) over the fixed lexicographically smallest primitive modulus.

    Only 2 <= m <= 32 is supported; that is the range over which the
    modulus table is certified primitive.
    """
    if not 2 <= m <= MAX_FIELD_DEGREE:
        raise ValueError(f"extension degree {m} outside supported range 2..32")
    f = _field_cache.get(m)
    if f is None:
        f = BinaryField(m, PRIMITIVE_POLY[m], primitive=True)
        _field_cache[m] = f
    return f


def build_field_with_modulus(m: int, modulus: int) -> BinaryField:
    """GF(2^m) over an explicit primitive modulus (for alternate-modulus checks)."""
    if _gf2x.deg(modulus) != m:
        raise ValueError("modulus degree does not match m")
    if not _gf2x.is_primitive(modulus):
        raise ValueError(f"0x{modulus:X} is not primitive")
    return BinaryField(m, modulus, primitive=True)


def alternate_primitive_modulus(m: int) -> int:
    """The second-smallest primitive polynomial of degree m, in lex order."""
    return _gf2x.find_primitive(m, skip=1)


def _ord2(n: int) -> int:
    if n == 1:
        return 1
    m, t = 1, 2 % n
    while t != 1:
        t = t * 2 % n
        m += 1
    return m


def field_for_order(n: int) -> BinaryField:
    """The smallest binary field containing primitive n-th roots of unity.

    For degrees beyond 32 the modulus is the lexicographically smallest
    irreducible polynomial (no primitive element is certified there);
    use ``nth_root_of_unity`` to obtain a root.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    m = _ord2(n)
    if m == 1:
        m = 2  # n = 1: any field works, use the smallest supported
    if m <= MAX_FIELD_DEGREE:
        return build_field(m)
    f = _field_cache.get(-m)
    if f is None:
        f = BinaryField(m, _gf2x.find_irreducible(m), primitive=False)
        _field_cache[-m] = f
    return f


def nth_root_of_unity(field: BinaryField, n: int) -> FieldElement:
    """A primitive n-th root of unity beta in the field.

    For fields with a certified primitive alpha this is alpha^((2^m-1)/n),
    so the choice is fixed by the modulus table.  Otherwise a root of
    exact order n is found by deterministic search.
    """
    if n < 1 or field.order % n:
        raise ValueError(f"{n} does not divide 2^{field.m} - 1")
    if field.primitive:
        return field.element(field.alpha_pow(field.order // n))
    cofactor = field.order // n
    primes = _gf2x._prime_factors(n) if n > 1 else []
    for z in range(2, 1 << min(field.m, 24)):
        cand = _gf2x.powmod(z, cofactor, field.modulus)
        if cand == 0 or (n > 1 and cand == 1):
            continue
        if all(_gf2x.powmod(cand, n // p, field.modulus) != 1 for p in primes):
            return field.element(cand)
    raise ValueError(f"no element of order {n} found")  # pragma: no cover


def beta_exponent(field: BinaryField, n: int) -> int:
    """Exponent e with beta = alpha^e for the canonical n-th root of unity."""
    if not field.primitive:
        raise ValueError("field has no certified primitive element")
    if n < 1 or field.order % n:
        raise ValueError(f"{n} does not divide 2^{field.m} - 1")
    return field.order // n
