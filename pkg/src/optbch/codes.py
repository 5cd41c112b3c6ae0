"""Binary cyclic and BCH codes from defining sets.

A code is pinned down by its length n, the canonical primitive n-th
root of unity beta in GF(2^m) (m the order of 2 mod n), and a defining
set T closed under doubling mod n.  The generator polynomial is the
product of the minimal polynomials of beta^s over the coset leaders in
T; codewords are the multiples of that generator.

Vectors are integer bit masks: bit i is the coefficient of x^i.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from . import _gf2x
from .cosets import coset_of, ord_mod
from .fields import MAX_FIELD_DEGREE, BinaryField, build_field
from .polys import BinaryPolynomial, minimal_polynomial, reciprocal


@dataclass(frozen=True)
class BchDesign:
    """Length, designed distance and starting exponent of a BCH code."""

    n: int
    delta: int
    b: int = 1

    def __post_init__(self):
        if not 2 <= self.delta <= self.n:
            raise ValueError("designed distance must satisfy 2 <= delta <= n")


@dataclass(frozen=True)
class CyclicCode:
    """An [n, k] binary cyclic code with explicit defining set and generator."""

    n: int
    field: BinaryField
    beta_exp: int
    defining_set: tuple[int, ...]
    generator: BinaryPolynomial
    dimension: int
    leaders: tuple[int, ...] = dataclass_field(default=(), repr=False)

    def beta_pow(self, i: int) -> int:
        """beta^i as a raw field mask."""
        return self.field.alpha_pow(self.beta_exp * (i % self.n))

    @property
    def parity_check(self) -> BinaryPolynomial:
        """h(x) = (x^n - 1) / g(x)."""
        q, r = _gf2x.divmod_((1 << self.n) | 1, self.generator.mask)
        if r:
            raise AssertionError("generator does not divide x^n - 1")
        return BinaryPolynomial(q)

    def generator_basis(self) -> list[int]:
        """x^j * g(x) for j < k: an information-set basis of the code."""
        g = self.generator.mask
        return [g << j for j in range(self.dimension)]

    def descriptor(self) -> dict:
        """JSON-ready summary of the construction."""
        return {
            "n": self.n,
            "m": self.field.m,
            "modulus_hex": f"0x{self.field.modulus:X}",
            "beta_exp": self.beta_exp,
            "defining_set_leaders": list(self.leaders),
            "generator_hex": self.generator.to_hex(),
            "dimension": self.dimension,
        }

    def __repr__(self) -> str:
        return f"CyclicCode(n={self.n}, k={self.dimension}, |T|={len(self.defining_set)})"


def _closure_under_doubling(n: int, seeds) -> tuple[list[int], list[int]]:
    """Sorted closure of the seed residues, plus the coset leaders inside it."""
    members: set[int] = set()
    leaders: set[int] = set()
    for s in seeds:
        s %= n
        if s in members:
            continue
        c = coset_of(n, s)
        leaders.add(c.leader)
        members.update(c.members)
    return sorted(members), sorted(leaders)


def _field_for_length(n: int) -> BinaryField:
    m = ord_mod(n)
    if m > MAX_FIELD_DEGREE:
        raise ValueError(
            f"length {n} needs GF(2^{m}); supported construction range is m <= 32"
        )
    return build_field(max(m, 2))


def _make_code(n: int, field: BinaryField, leaders: list[int], T: list[int]) -> CyclicCode:
    if field.order % n:
        raise ValueError(f"{n} does not divide 2^{field.m} - 1")
    beta_exp = field.order // n
    g = 1
    for s in leaders:
        if s == 0:
            factor = 0b11  # x + 1
        else:
            factor = minimal_polynomial(field, field.element(field.alpha_pow(beta_exp * s))).mask
        g = _gf2x.mul(g, factor)
    generator = BinaryPolynomial(g)
    if generator.degree != len(T):
        raise AssertionError("generator degree disagrees with |T|")
    # g | x^n - 1, checked as x^n = 1 mod g without touching degree-n polynomials
    if g != 1 and _gf2x.powmod(2, n, g) != 1:
        raise AssertionError("generator does not divide x^n - 1")
    return CyclicCode(
        n=n,
        field=field,
        beta_exp=beta_exp,
        defining_set=tuple(T),
        generator=generator,
        dimension=n - len(T),
        leaders=tuple(leaders),
    )


def bch_code(design: BchDesign, field: BinaryField | None = None) -> CyclicCode:
    """The BCH code of the given design: defining set is the doubling
    closure of {b, ..., b + delta - 2} mod n, generator the lcm of the
    corresponding minimal polynomials."""
    n = design.n
    if n % 2 == 0:
        raise ValueError("length must be odd")
    if field is None:
        field = _field_for_length(n)
    T, leaders = _closure_under_doubling(n, range(design.b, design.b + design.delta - 1))
    return _make_code(n, field, leaders, T)


def cyclic_from_defining_set(n: int, T, field: BinaryField | None = None) -> CyclicCode:
    """Cyclic code with the given defining set, which must be doubling-closed."""
    if n % 2 == 0:
        raise ValueError("length must be odd")
    Tset = {t % n for t in T}
    for t in Tset:
        if t * 2 % n not in Tset:
            raise ValueError(f"defining set is not closed under doubling: {t}")
    if field is None:
        field = _field_for_length(n)
    members, leaders = _closure_under_doubling(n, Tset)
    return _make_code(n, field, leaders, members)


def dual_code(code: CyclicCode) -> CyclicCode:
    """The dual, generated by the reciprocal of the parity-check polynomial."""
    n = code.n
    h = code.parity_check
    gen = reciprocal(h) if h.mask != 1 else BinaryPolynomial(1)
    in_T = bytearray(n)
    for t in code.defining_set:
        in_T[t] = 1
    T_dual = sorted((-i) % n for i in range(n) if not in_T[i])
    leaders = sorted({coset_of(n, t).leader for t in T_dual})
    dual = CyclicCode(
        n=n,
        field=code.field,
        beta_exp=code.beta_exp,
        defining_set=tuple(T_dual),
        generator=gen,
        dimension=n - len(T_dual),
        leaders=tuple(leaders),
    )
    if dual.dimension + code.dimension != n:
        raise AssertionError("dual dimension mismatch")
    return dual


def encode(code: CyclicCode, message: int) -> int:
    """Codeword mask for a k-bit message mask: message(x) * g(x)."""
    if message.bit_length() > code.dimension:
        raise ValueError("message longer than the code dimension")
    return _gf2x.mul(message, code.generator.mask)


def is_codeword(code: CyclicCode, v: int) -> bool:
    """Membership via divisibility by the generator polynomial."""
    if v.bit_length() > code.n:
        raise ValueError("vector longer than the code length")
    if code.generator.mask == 1:
        return True
    return _gf2x.mod(v, code.generator.mask) == 0


def is_codeword_by_roots(code: CyclicCode, v: int) -> bool:
    """Membership via v(beta^s) = 0 at the defining-set coset leaders.

    Vanishing at a leader forces vanishing at its whole coset (Frobenius
    fixes GF(2) coefficients), so leaders suffice.
    """
    if v.bit_length() > code.n:
        raise ValueError("vector longer than the code length")
    f = code.field
    for s in code.leaders:
        beta_s = code.beta_pow(s)
        acc = 0
        rem = v
        i = 0
        # evaluate v at beta^s by summing beta^(s*i) over set bits
        while rem:
            low = rem & -rem
            i = low.bit_length() - 1
            acc ^= f.pow(beta_s, i)
            rem ^= low
        if acc:
            return False
    return True


def cyclic_shift(code: CyclicCode, v: int, steps: int = 1) -> int:
    """Rotate a codeword mask by the given number of coordinate steps."""
    n = code.n
    steps %= n
    full = (1 << n) - 1
    return ((v << steps) | (v >> (n - steps))) & full


def bch_bound(code: CyclicCode) -> int:
    """Largest lower bound on the distance from consecutive runs in T.

    A run of L consecutive residues (circularly mod n) in the defining
    set forces distance >= L + 1.  Returns 1 for an empty defining set.
    """
    T = code.defining_set  # already sorted
    n = code.n
    if not T:
        return 1
    if len(T) == n:
        return n + 1  # zero code; vacuously beyond every weight
    best = run = 1
    for prev, cur in zip(T, T[1:]):
        run = run + 1 if cur == prev + 1 else 1
        if run > best:
            best = run
    if T[0] == 0 and T[-1] == n - 1:
        # join the run ending at n-1 with the run starting at 0
        head = 1
        while head < len(T) and T[head] == head:
            head += 1
        tail = 1
        while tail < len(T) and T[-tail - 1] == n - 1 - tail:
            tail += 1
        best = max(best, head + tail)
    return best + 1
