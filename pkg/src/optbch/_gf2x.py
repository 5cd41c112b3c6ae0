"""Low-level polynomial arithmetic over GF(2), on plain integer bit masks.

A polynomial is a nonnegative int whose bit i is the coefficient of x^i
(least significant bit = constant term).  These helpers are the shared
core under the public polynomial and field modules; they stay free of
any class wrapping so hot loops pay no object overhead.
"""

from __future__ import annotations

# byte -> bits interleaved with zeros, for GF(2) squaring
_SPREAD = [0] * 256
for _b in range(256):
    _v = 0
    for _i in range(8):
        if _b >> _i & 1:
            _v |= 1 << (2 * _i)
    _SPREAD[_b] = _v


def deg(a: int) -> int:
    """Degree of the polynomial; -1 for the zero polynomial."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product a(x) * b(x)."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def square(a: int) -> int:
    """a(x)^2, i.e. coefficients spread to even positions."""
    r = 0
    shift = 0
    while a:
        r |= _SPREAD[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def mod(a: int, b: int) -> int:
    """Remainder of a(x) modulo b(x); b must be nonzero."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def divmod_(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a(x) / b(x); b must be nonzero."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = 0
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = a.bit_length()
    return q, a


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def mulmod(a: int, b: int, f: int) -> int:
    """a * b reduced modulo f, keeping intermediate degrees below 2*deg(f)."""
    df = f.bit_length() - 1
    top = 1 << df
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= f
    return r


def sqmod(a: int, f: int) -> int:
    return mod(square(a), f)


def powmod(a: int, e: int, f: int) -> int:
    """a(x)^e modulo f(x) for e >= 0."""
    r = 1
    a = mod(a, f)
    while e:
        if e & 1:
            r = mulmod(r, a, f)
        e >>= 1
        if e:
            a = sqmod(a, f)
    return r


def is_irreducible(f: int) -> bool:
    """Ben-Or style irreducibility test for f over GF(2).

    Rejects quickly on small-degree factors (gcd sieve), then checks
    x^(2^m) = x mod f together with the proper-subfield gcd conditions.
    """
    m = deg(f)
    if m <= 0:
        return False
    if not f & 1:
        return False  # divisible by x
    if m == 1:
        return True
    x = 2
    t = x
    sieve = min(8, m // 2)
    for _ in range(sieve):
        t = sqmod(t, f)
        if gcd(t ^ x, f) != 1:
            return False
    for _ in range(sieve, m):
        t = sqmod(t, f)
    if t != x:
        return False
    for p in _prime_factors(m):
        j = m // p
        if j <= sieve:
            continue  # already covered by the sieve
        t = x
        for _ in range(j):
            t = sqmod(t, f)
        if gcd(t ^ x, f) != 1:
            return False
    return True


def find_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree m."""
    base = 1 << m
    for low in range(1, base, 2):
        f = base | low
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {m}")  # unreachable


def is_primitive(f: int) -> bool:
    """True when f is irreducible and x generates GF(2^m)* modulo f."""
    m = deg(f)
    if not is_irreducible(f):
        return False
    order = (1 << m) - 1
    for p in _prime_factors(order):
        if powmod(2, order // p, f) == 1:
            return False
    return True


def find_primitive(m: int, skip: int = 0) -> int:
    """The (skip+1)-th primitive polynomial of degree m in lex order.

    Factoring 2^m - 1 by trial division bounds this to m <= 64.
    """
    if m > 64:
        raise ValueError("primitivity testing supported for degree <= 64")
    base = 1 << m
    seen = 0
    for low in range(1, base, 2):
        f = base | low
        if is_primitive(f):
            if seen == skip:
                return f
            seen += 1
    raise ValueError(f"fewer than {skip + 1} primitive polynomials of degree {m}")


def _prime_factors(x: int) -> list[int]:
    """Distinct prime factors by trial division (fine up to ~2^64)."""
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1 if d == 2 else 2
    if x > 1:
        out.append(x)
    return out
