"""Fixed modulus table for binary extension fields.

``PRIMITIVE_POLY[m]`` is the lexicographically smallest primitive
polynomial of degree m over GF(2), as an integer mask with the constant
term in the least significant bit.  Fixing these makes every generator
polynomial, defining set and certificate reproducible across runs.
Degrees beyond 32 fall back to the lexicographically smallest
*irreducible* polynomial, found on the fly (primitivity is not testable
there without factoring 2^m - 1).
"""

PRIMITIVE_POLY = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1002D,
    17: 0x20009,
    18: 0x40027,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
    25: 0x2000009,
    26: 0x4000047,
    27: 0x8000027,
    28: 0x10000009,
    29: 0x20000005,
    30: 0x40000053,
    31: 0x80000009,
    32: 0x1000000AF,
}
