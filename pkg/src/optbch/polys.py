"""Polynomials over GF(2): ring operations, minimal polynomials and the
canonical factorization of x^n - 1 through cyclotomic cosets.

Coefficients live in an integer bit mask, least significant bit =
constant term; that convention holds everywhere, including the hex
serialization used in certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _gf2x
from .cosets import all_cosets, coset_of, ord_mod
from .fields import BinaryField, FieldElement, field_for_order, nth_root_of_unity

# conjugate orbits up to this size expand the defining product directly;
# larger ones (factorization sweeps at degree ~200) switch to the Krylov
# linear-dependency method, which needs only |orbit| field multiplications
_PRODUCT_EXPANSION_LIMIT = 64


@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    """A polynomial over GF(2), wrapped around its coefficient mask."""

    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("coefficient mask must be nonnegative")

    @property
    def degree(self) -> int:
        """Degree; -1 stands in for the zero polynomial."""
        return self.mask.bit_length() - 1

    def __add__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(self.mask ^ other.mask)

    __sub__ = __add__

    def __mul__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(_gf2x.mul(self.mask, other.mask))

    def __divmod__(self, other: BinaryPolynomial) -> tuple[BinaryPolynomial, BinaryPolynomial]:
        q, r = _gf2x.divmod_(self.mask, other.mask)
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __floordiv__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(_gf2x.mod(self.mask, other.mask))

    def __bool__(self) -> bool:
        return self.mask != 0

    def coefficient(self, i: int) -> int:
        return self.mask >> i & 1

    def evaluate(self, e: FieldElement) -> FieldElement:
        """Value at a field element, by Horner's rule."""
        f = e.field
        acc = 0
        for i in range(self.degree, -1, -1):
            acc = f.mul(acc, e.value) ^ (self.mask >> i & 1)
        return f.element(acc)

    def to_hex(self) -> str:
        return f"0x{self.mask:X}"

    @classmethod
    def from_hex(cls, s: str) -> BinaryPolynomial:
        return cls(int(s, 16))

    @classmethod
    def from_coefficients(cls, coeffs) -> BinaryPolynomial:
        """From an iterable of 0/1 coefficients, constant term first."""
        mask = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                mask |= 1 << i
        return cls(mask)

    def __str__(self) -> str:
        if self.mask == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if self.mask >> i & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"BinaryPolynomial({self.to_hex()})"


ONE = BinaryPolynomial(1)
X = BinaryPolynomial(2)


def gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_gf2x.gcd(a.mask, b.mask))


def lcm(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    if not a or not b:
        return BinaryPolynomial(0)
    g = _gf2x.gcd(a.mask, b.mask)
    return BinaryPolynomial(_gf2x.mul(_gf2x.divmod_(a.mask, g)[0], b.mask))


def x_pow_n_minus_one(n: int) -> BinaryPolynomial:
    return BinaryPolynomial((1 << n) | 1)


def reciprocal(p: BinaryPolynomial) -> BinaryPolynomial:
    """Coefficient-reversed polynomial of the same degree.

    For a parity-check polynomial h this is the generator of the dual
    code.  Requires a nonzero constant term, otherwise the reversal
    would silently drop degree.
    """
    if not p:
        raise ValueError("zero polynomial has no reciprocal")
    if not p.mask & 1:
        raise ValueError("reciprocal requires a nonzero constant term")
    mask = 0
    d = p.degree
    for i in range(d + 1):
        if p.mask >> i & 1:
            mask |= 1 << (d - i)
    return BinaryPolynomial(mask)


def minimal_polynomial(field: BinaryField, e: FieldElement | int) -> BinaryPolynomial:
    """Monic polynomial of least degree over GF(2) with e as a root.

    The roots are the conjugates e, e^2, e^4, ...; small orbits expand
    the product of (x - conjugate) directly and assert that every
    coefficient lands in GF(2), large orbits locate the first linear
    dependency among the powers of e instead.
    """
    value = e.value if isinstance(e, FieldElement) else e
    if isinstance(e, FieldElement) and e.field != field:
        raise ValueError("element does not belong to the given field")
    if value == 0:
        raise ValueError("zero has no minimal polynomial here")
    conjugates = [value]
    c = field.mul(value, value)
    while c != value:
        conjugates.append(c)
        c = field.mul(c, c)
    if len(conjugates) <= _PRODUCT_EXPANSION_LIMIT:
        poly = _expand_root_product(field, conjugates)
    else:
        poly = _krylov_minimal_polynomial(field, value, len(conjugates))
    return BinaryPolynomial(poly)


def _expand_root_product(field: BinaryField, roots: list[int]) -> int:
    # coeffs[i] holds the field element multiplying x^i
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= field.mul(c, r)
        coeffs = nxt
    mask = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise AssertionError("conjugate product has a coefficient outside GF(2)")
        mask |= c << i
    return mask


def _krylov_minimal_polynomial(field: BinaryField, value: int, expected_degree: int) -> int:
    # echelon rows of span{1, e, e^2, ...}; combo masks track which powers
    pivots: dict[int, tuple[int, int]] = {}  # pivot bit -> (row, combo)
    power = 1
    j = 0
    while True:
        row, combo = power, 1 << j
        while row:
            piv = row.bit_length() - 1
            hit = pivots.get(piv)
            if hit is None:
                break
            row ^= hit[0]
            combo ^= hit[1]
        if row == 0:
            if j != expected_degree:
                raise AssertionError("dependency degree disagrees with orbit size")
            return combo
        pivots[row.bit_length() - 1] = (row, combo)
        power = field.mul(power, value)
        j += 1


def verify_factorization(n: int, field: BinaryField) -> list[BinaryPolynomial]:
    """Irreducible factors of x^n - 1, one per 2-cyclotomic coset mod n.

    Each factor is the minimal polynomial of beta^s for a coset leader s,
    with beta the canonical primitive n-th root of unity in the field.
    The returned list is ordered by ascending leader; the product is
    checked to be exactly x^n - 1 and the factors pairwise coprime.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd")
    if field.order % n:
        raise ValueError(f"{n} does not divide the multiplicative group order")
    beta = nth_root_of_unity(field, n)
    factors = []
    product = 1
    for coset in all_cosets(n).cosets:
        root = beta ** coset.leader
        if coset.leader == 0:
            factor = BinaryPolynomial(0b11)  # x + 1, the beta^0 = 1 factor
        else:
            factor = minimal_polynomial(field, root)
        if factor.degree != coset.size:
            raise AssertionError("factor degree disagrees with coset size")
        factors.append(factor)
        product = _gf2x.mul(product, factor.mask)
    if product != (1 << n) | 1:
        raise AssertionError("factor product is not x^n - 1")
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if _gf2x.gcd(factors[i].mask, factors[j].mask) != 1:
                raise AssertionError("factors are not pairwise coprime")
    return factors


def factor_x_pow_n_minus_one(n: int) -> list[BinaryPolynomial]:
    """verify_factorization with the field chosen automatically."""
    return verify_factorization(n, field_for_order(n))
