"""Exact weight distributions, minimum distances and derived code data.

Everything on the certification path is integer arithmetic: exhaustive
enumeration counts codewords by Hamming weight, the MacWilliams
transform moves distributions across duality with divisibility
asserted, and distances come from whichever of {bound pincer, direct
enumeration, dual enumeration, small-support search} pins the value
first.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from math import comb

import numpy as np

from .bounds import sphere_packing_max_d
from .codes import CyclicCode, dual_code, is_codeword_by_roots

DEFAULT_ENUM_CAP = 26  # dimensions up to this enumerate in full
_INNER_BITS = 12  # block size of the vectorized enumeration
_HAS_BITCOUNT = hasattr(np, "bitwise_count")


class EnumerationCapExceeded(ValueError):
    """Requested enumeration would exceed the codeword cap."""


@dataclass(frozen=True)
class WeightDistribution:
    """Map weight -> codeword count for a length-n code."""

    n: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def min_positive_weight(self) -> int:
        return min(w for w in self.counts if w > 0)

    def validate(self, k: int) -> None:
        """Sanity for a genuine [n, 2^k] distribution."""
        if self.counts.get(0) != 1:
            raise AssertionError("weight-0 count must be exactly 1")
        if any(w < 0 or w > self.n for w in self.counts):
            raise AssertionError("weight outside [0, n]")
        if any(c < 0 for c in self.counts.values()):
            raise AssertionError("negative count")
        if self.total() != 1 << k:
            raise AssertionError(f"counts sum to {self.total()}, expected 2^{k}")

    def to_pairs(self) -> list[list]:
        """JSON form: [weight, count-as-decimal-string], ascending weight."""
        return [[w, str(self.counts[w])] for w in sorted(self.counts)]

    @classmethod
    def from_pairs(cls, n: int, pairs) -> WeightDistribution:
        return cls(n, {int(w): int(c) for w, c in pairs})

    def enumerator_string(self) -> str:
        """Human form like '1 + 204z^24 + 51z^32'."""
        parts = []
        for w in sorted(self.counts):
            c = self.counts[w]
            if w == 0:
                parts.append(str(c))
            else:
                coeff = "" if c == 1 else str(c)
                parts.append(f"{coeff}z^{w}")
        return " + ".join(parts) if parts else "0"


# --- exhaustive enumeration over a basis of int masks ---


def span_weight_counts(basis: list[int], n: int, workers: int = 1) -> dict[int, int]:
    """Weight histogram of the 2^len(basis) span of the given rows.

    Gray-code stepping touches one basis row per codeword; large spans
    run a vectorized variant that XORs a precomputed low-bit block
    against each high-bit prefix.  Results are identical either way and
    independent of the worker count.
    """
    k = len(basis)
    if k <= 14:
        return _span_counts_int(basis, n)
    return _span_counts_blocked(basis, n, max(1, workers))


def _span_counts_int(basis: list[int], n: int) -> dict[int, int]:
    counts = [0] * (n + 1)
    counts[0] = 1
    word = 0
    for i in range(1, 1 << len(basis)):
        word ^= basis[(i & -i).bit_length() - 1]
        counts[word.bit_count()] += 1
    return {w: c for w, c in enumerate(counts) if c}


def _rows_to_array(rows: list[int], words: int) -> np.ndarray:
    arr = np.zeros((len(rows), words), dtype=np.uint64)
    for idx, v in enumerate(rows):
        arr[idx] = np.frombuffer(v.to_bytes(words * 8, "little"), dtype=np.uint64)
    return arr


_POP16 = None


def _popcounts(arr: np.ndarray) -> np.ndarray:
    if _HAS_BITCOUNT:
        return np.bitwise_count(arr).sum(axis=1, dtype=np.int64)
    global _POP16
    if _POP16 is None:
        _POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
    return _POP16[arr.view(np.uint16)].sum(axis=1, dtype=np.int64)


def _span_counts_blocked(basis: list[int], n: int, workers: int) -> dict[int, int]:
    k = len(basis)
    words = (n + 63) // 64
    split = min(k, _INNER_BITS)
    low_rows = _rows_to_array(basis[:split], words)
    inner = np.zeros((1 << split, words), dtype=np.uint64)
    for i in range(1, 1 << split):
        low = i & -i
        inner[i] = inner[i ^ low] ^ low_rows[low.bit_length() - 1]
    high = basis[split:]
    high_rows = _rows_to_array(high, words)
    total_prefixes = 1 << len(high)
    if total_prefixes == 1:
        weights = _popcounts(inner)
        hist = np.bincount(weights, minlength=n + 1)
        return {w: int(c) for w, c in enumerate(hist) if c}

    def chunk(start: int, stop: int) -> np.ndarray:
        hist = np.zeros(n + 1, dtype=np.int64)
        g = start ^ (start >> 1)
        prefix_int = 0
        for j in range(len(high)):
            if g >> j & 1:
                prefix_int ^= high[j]
        prefix = np.frombuffer(prefix_int.to_bytes(words * 8, "little"), dtype=np.uint64).copy()
        buf = np.empty_like(inner)
        for i in range(start, stop):
            if i != start:
                prefix ^= high_rows[(i & -i).bit_length() - 1]
            np.bitwise_xor(inner, prefix, out=buf)
            hist += np.bincount(_popcounts(buf), minlength=n + 1)
        return hist

    if workers == 1:
        totals = chunk(0, total_prefixes)
    else:
        bounds = np.linspace(0, total_prefixes, workers + 1, dtype=int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ab: chunk(*ab), zip(bounds[:-1], bounds[1:])))
        totals = sum(parts)
    return {w: int(c) for w, c in enumerate(totals) if c}


def weight_distribution_exhaustive(
    code: CyclicCode, cap: int = DEFAULT_ENUM_CAP, workers: int = 1
) -> WeightDistribution:
    """Exact distribution by enumerating all 2^k codewords."""
    if code.dimension > cap:
        raise EnumerationCapExceeded(
            f"dimension {code.dimension} exceeds enumeration cap {cap}"
        )
    counts = span_weight_counts(code.generator_basis(), code.n, workers)
    wd = WeightDistribution(code.n, counts)
    wd.validate(code.dimension)
    return wd


# --- MacWilliams transform ---


def krawtchouk_row(n: int, i: int) -> list[int]:
    """K_j(i) for j = 0..n via the exact three-term recurrence."""
    row = [0] * (n + 1)
    row[0] = 1
    if n >= 1:
        row[1] = n - 2 * i
    for j in range(1, n):
        num = (n - 2 * i) * row[j] - (n - j + 1) * row[j - 1]
        q, r = divmod(num, j + 1)
        if r:
            raise AssertionError("Krawtchouk recurrence lost integrality")
        row[j + 1] = q
    return row


def macwilliams_transform(wd: WeightDistribution, k: int) -> WeightDistribution:
    """Distribution of the dual of a 2^k-word code with distribution wd.

    Pure integer arithmetic; divisibility by 2^k is asserted rather
    than rounded, so inconsistent inputs fail loudly.
    """
    if wd.total() != 1 << k:
        raise ValueError(f"distribution sums to {wd.total()}, expected 2^{k}")
    n = wd.n
    items = sorted(wd.counts.items())
    rows = {i: krawtchouk_row(n, i) for i, _ in items}
    scale = 1 << k
    out = {}
    for j in range(n + 1):
        s = 0
        for i, a in items:
            s += a * rows[i][j]
        q, r = divmod(s, scale)
        if r or q < 0:
            raise AssertionError(f"MacWilliams coefficient at weight {j} is not a count")
        if q:
            out[j] = q
    return WeightDistribution(n, out)


# --- minimum distance ---


@dataclass(frozen=True)
class DistanceResult:
    """Certified bracket [lower, upper] on the minimum distance.

    exact when the two ends meet; each end carries its provenance.
    """

    lower: int
    upper: int
    lower_source: str
    upper_source: str
    distribution: WeightDistribution | None = dataclass_field(default=None, compare=False)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"distance only bracketed in [{self.lower}, {self.upper}]")
        return self.lower


def distribution_via_dual(
    code: CyclicCode, cap: int = DEFAULT_ENUM_CAP, workers: int = 1
) -> tuple[WeightDistribution, WeightDistribution]:
    """(primary distribution, dual distribution) through the small dual."""
    dual = dual_code(code)
    dual_wd = weight_distribution_exhaustive(dual, cap, workers)
    primary = macwilliams_transform(dual_wd, dual.dimension)
    primary.validate(code.dimension)
    return primary, dual_wd


def min_distance(
    code: CyclicCode,
    cap: int = DEFAULT_ENUM_CAP,
    budget: int = 2_000_000,
    workers: int = 1,
) -> DistanceResult:
    """Exact distance when obtainable, else a certified interval.

    Strategy order: consecutive-root lower bound against the sphere
    packing ceiling (no enumeration); exhaustive enumeration of the
    smaller of code/dual; then a weight-w support search for w <= 4
    within the combination budget.
    """
    from .codes import bch_bound  # local import keeps module load light

    n, k = code.n, code.dimension
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    lower = bch_bound(code)
    upper = sphere_packing_max_d(n, k)
    if lower > upper:
        raise AssertionError(f"bound contradiction: {lower} > {upper} at [{n},{k}]")
    if lower == upper:
        return DistanceResult(upper, upper, "bch_bound", "sphere_packing")
    if k <= cap:
        wd = weight_distribution_exhaustive(code, cap, workers)
        d = wd.min_positive_weight()
        return DistanceResult(d, d, "enumeration", "enumeration", wd)
    if n - k <= cap:
        primary, _ = distribution_via_dual(code, cap, workers)
        d = primary.min_positive_weight()
        return DistanceResult(d, d, "dual_enumeration", "dual_enumeration", primary)
    w = lower
    while w <= min(4, upper - 1) and comb(n, w) <= budget:
        if _exists_word_of_weight(code, w):
            return DistanceResult(w, w, "support_search", "support_search")
        lower = w + 1  # no codeword this light
        w += 1
    if lower == upper:
        return DistanceResult(upper, upper, "support_search", "sphere_packing")
    return DistanceResult(lower, upper, "bch_bound" if lower == bch_bound(code) else "support_search", "sphere_packing")


def _root_rows(code: CyclicCode) -> list[list[int]]:
    f = code.field
    rows = []
    for s in code.leaders:
        b = code.beta_pow(s)
        row = [0] * code.n
        acc = 1
        for i in range(code.n):
            row[i] = acc
            acc = f.mul(acc, b)
        rows.append(row)
    return rows


def _exists_word_of_weight(code: CyclicCode, w: int) -> bool:
    rows = _root_rows(code)
    for support in combinations(range(code.n), w):
        if all(_xor_at(row, support) == 0 for row in rows):
            return True
    return False


def count_words_of_weight(code: CyclicCode, w: int, budget: int = 20_000_000) -> int:
    """Exact number of weight-w codewords by support search."""
    if comb(code.n, w) > budget:
        raise ValueError(f"C({code.n},{w}) exceeds the search budget")
    rows = _root_rows(code)
    count = 0
    for support in combinations(range(code.n), w):
        if all(_xor_at(row, support) == 0 for row in rows):
            count += 1
    return count


def _xor_at(row: list[int], support) -> int:
    acc = 0
    for i in support:
        acc ^= row[i]
    return acc


# --- extended codes ---


@dataclass(frozen=True)
class ExtendedCode:
    """The [n+1, k] overall-parity extension of a base code."""

    base: CyclicCode
    n: int
    dimension: int
    distance: DistanceResult

    def generator_basis(self) -> list[int]:
        """Base basis rows with the parity bit appended at position n-1."""
        rows = []
        for r in self.base.generator_basis():
            parity = r.bit_count() & 1
            rows.append(r | parity << (self.n - 1))
        return rows


def extended_distance(dist: DistanceResult) -> DistanceResult:
    """Distance bracket of the extension: odd weights round up to even."""
    lo = dist.lower + (dist.lower & 1)
    hi = dist.upper + (dist.upper & 1)
    wd = extended_distribution(dist.distribution) if dist.distribution else None
    return DistanceResult(lo, hi, dist.lower_source, dist.upper_source, wd)


def extend_code(code: CyclicCode, dist: DistanceResult | None = None, **dist_kwargs) -> ExtendedCode:
    """Append the overall parity coordinate; distance follows the parity rule."""
    if dist is None:
        dist = min_distance(code, **dist_kwargs)
    return ExtendedCode(code, code.n + 1, code.dimension, extended_distance(dist))


def extended_distribution(wd: WeightDistribution) -> WeightDistribution:
    """Distribution after extension: odd-weight words gain the parity bit."""
    out: dict[int, int] = {}
    for w, c in wd.counts.items():
        we = w + (w & 1)
        out[we] = out.get(we, 0) + c
    return WeightDistribution(wd.n + 1, out)


def extended_dual_distribution(dual_wd: WeightDistribution) -> WeightDistribution:
    """Distribution of the dual of the extended code.

    Requires the base dual to have only even weights; then that dual
    extends by a zero parity bit, and the extended code's dual is the
    union of the extension with its all-ones complement, which maps a
    weight-w class onto weights w and n+1-w.
    """
    for w in dual_wd.counts:
        if w & 1:
            raise ValueError(f"base dual has an odd weight {w}; construction needs even weights")
    n1 = dual_wd.n + 1
    out: dict[int, int] = {}
    for w, c in dual_wd.counts.items():
        out[w] = out.get(w, 0) + c
        out[n1 - w] = out.get(n1 - w, 0) + c
    return WeightDistribution(n1, out)


# --- Pless power moment ---


def pless_fourth_moment_a3(dual_wd: WeightDistribution, n: int, k: int) -> int:
    """Number of weight-3 words of the primary code, from its dual moments.

    Uses the fourth power-moment identity for codes with no weight-1 or
    weight-2 words: 8 * sum j^3 A_j(dual) = 2^(n-k) (n^2 (n+3) - 6 A_3).
    Divisibility failures signal inconsistent inputs.
    """
    s3 = sum(j**3 * a for j, a in dual_wd.counts.items())
    scale = 1 << (n - k)
    q, r = divmod(8 * s3, scale)
    if r:
        raise AssertionError("moment sum not divisible by 2^(n-k)")
    num = n * n * (n + 3) - q
    a3, r = divmod(num, 6)
    if r or a3 < 0:
        raise AssertionError("moment identity yields a non-integer or negative count")
    return a3


# --- trace representation of irreducible-cyclic duals ---


def trace_code_vectors(code: CyclicCode) -> set[int]:
    """{ (Tr(a * gamma^i))_i : a in GF(2^m) } as n-bit masks, gamma = beta^s.

    Summing the geometric series shows these vectors vanish at beta^j
    exactly for j outside -C_s, which is the defining set of the dual of
    a code with defining set C_s; so the set equals that dual.
    """
    if len(code.leaders) != 1:
        raise ValueError("trace representation needs a single-coset defining set")
    s = code.leaders[0]
    f = code.field
    if len(code.defining_set) != f.m:
        raise ValueError(
            f"coset size {len(code.defining_set)} differs from field degree {f.m}"
        )
    gamma = code.beta_pow(s)
    gam_pows = [0] * code.n
    acc = 1
    for i in range(code.n):
        gam_pows[i] = acc
        acc = f.mul(acc, gamma)
    vectors = set()
    for a in range(1 << f.m):
        bits = 0
        for i, g in enumerate(gam_pows):
            if f.trace(f.mul(a, g)):
                bits |= 1 << i
        vectors.add(bits)
    return vectors


def trace_code_equals_dual(code: CyclicCode, cap: int = DEFAULT_ENUM_CAP, workers: int = 1) -> bool:
    """Does the trace construction reproduce the dual code exactly?"""
    dual = dual_code(code)
    if dual.dimension > cap:
        raise EnumerationCapExceeded(f"dual dimension {dual.dimension} exceeds cap {cap}")
    dual_words = set()
    word = 0
    basis = dual.generator_basis()
    dual_words.add(0)
    for i in range(1, 1 << len(basis)):
        word ^= basis[(i & -i).bit_length() - 1]
        dual_words.add(word)
    return trace_code_vectors(code) == dual_words
