"""Sphere packing and Griesmer bounds, optimality certificates, and the
threshold search that pins down when even-designed-distance codes of
length (2^s - 1)/lambda become certifiably distance-optimal.

All inequalities are evaluated in exact big-integer arithmetic; at the
far end of the threshold table the binomial sums pass 10^60.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .cosets import coset_of


def hamming_ball(n: int, radius: int) -> int:
    """Number of vectors within the given Hamming radius of a point."""
    return sum(comb(n, i) for i in range(radius + 1))


def sphere_packing_admits(n: int, k: int, d: int) -> bool:
    """Can an [n, k, d] binary code coexist with the packing inequality?"""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if d < 1:
        raise ValueError("distance must be positive")
    return hamming_ball(n, (d - 1) // 2) <= 1 << (n - k)


def sphere_packing_max_d(n: int, k: int) -> int:
    """Largest d the packing inequality admits for an [n, k] code (capped at n)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    available = 1 << (n - k)
    ball = 1
    r = 0
    while ball <= available:
        r += 1
        ball += comb(n, r)
    # radii up to r-1 fit, so distances up to 2(r-1)+2 are admitted
    return min(2 * r, n)


@dataclass(frozen=True)
class GriesmerResult:
    satisfied: bool
    meets_with_equality: bool
    bound_sum: int


def griesmer_check(n: int, k: int, d: int) -> GriesmerResult:
    """Evaluate n >= sum_{i<k} ceil(d / 2^i) exactly."""
    if not 1 <= k <= n or d < 1:
        raise ValueError("need 1 <= k <= n and d >= 1")
    total = sum((d + (1 << i) - 1) >> i for i in range(k))
    return GriesmerResult(n >= total, n == total, total)


@dataclass(frozen=True)
class OptimalityCertificate:
    """Verdict on distance-optimality against the sphere packing bound.

    optimal means the distance is pinned exactly and the packing
    inequality either rejects d+1 outright or is met with equality
    (perfect code).  The raw inequality values are kept so the
    certificate is checkable without recomputation.
    """

    n: int
    k: int
    d_lower: int
    d_lower_source: str
    d_upper: int
    d_upper_source: str
    sphere_packing_ceiling: int
    optimal: bool
    perfect: bool
    reason: str
    attain_ball: int
    exclude_ball: int
    available_space: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d_lower": self.d_lower,
            "d_lower_source": self.d_lower_source,
            "d_upper": self.d_upper,
            "d_upper_source": self.d_upper_source,
            "sphere_packing_ceiling": self.sphere_packing_ceiling,
            "optimal": self.optimal,
            "perfect": self.perfect,
            "reason": self.reason,
            "bound_arithmetic": {
                "attain_ball": str(self.attain_ball),
                "exclude_ball": str(self.exclude_ball),
                "available_space": str(self.available_space),
            },
        }


def certify(code, dist) -> OptimalityCertificate:
    """Certificate for a code (anything with .n/.dimension) and a distance
    result (anything with .lower/.upper and their sources)."""
    n, k = code.n, code.dimension
    if dist.lower > dist.upper:
        raise ValueError(f"inconsistent distance bracket [{dist.lower}, {dist.upper}]")
    ceiling = sphere_packing_max_d(n, k)
    exact = dist.lower == dist.upper
    d = dist.lower
    attain = hamming_ball(n, (d - 1) // 2)
    exclude = hamming_ball(n, d // 2)  # radius for rejecting d+1
    available = 1 << (n - k)
    perfect = exact and attain == available
    if not exact:
        optimal = False
        reason = f"distance only bracketed in [{dist.lower}, {dist.upper}]"
    elif perfect:
        optimal = True
        reason = "meets the sphere packing bound with equality"
    elif exclude > available:
        optimal = True
        reason = f"sphere packing rejects [{n},{k},{d + 1}]"
    else:
        optimal = False
        reason = f"sphere packing admits distance up to {ceiling}"
    return OptimalityCertificate(
        n=n,
        k=k,
        d_lower=dist.lower,
        d_lower_source=dist.lower_source,
        d_upper=dist.upper,
        d_upper_source=dist.upper_source,
        sphere_packing_ceiling=ceiling,
        optimal=optimal,
        perfect=perfect,
        reason=reason,
        attain_ball=attain,
        exclude_ball=exclude,
        available_space=available,
    )


# --- thresholds for the length-(2^s-1)/lambda family with designed distance 2l ---


def threshold_s2(ell: int, lam: int) -> int:
    """Smallest s with (2*ell - 1) * lambda <= 2^ceil(s/2)."""
    if ell < 2 or lam < 1:
        raise ValueError("need ell >= 2 and lambda >= 1")
    target = (2 * ell - 1) * lam
    s = 1
    while 1 << ((s + 1) // 2) < target:
        s += 1
    return s


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_scale(a: list[int], c: int) -> list[int]:
    return [c * x for x in a]


def _falling_factorial(i: int) -> list[int]:
    """Coefficients of n (n-1) ... (n-i+1) as a polynomial in n."""
    coeffs = [1]
    for j in range(i):
        # multiply by (n - j)
        nxt = [0] * (len(coeffs) + 1)
        for t, c in enumerate(coeffs):
            nxt[t + 1] += c
            nxt[t] -= c * j
        coeffs = nxt
    return coeffs


@dataclass(frozen=True)
class ExpansionResult:
    """ell! * (sum_{i<=ell} C(n,i) - 2 (lambda n + 1)^(ell-1)) as a monic
    integer polynomial in n, with the coefficient bound that feeds s1."""

    ell: int
    lam: int
    coefficients: tuple[int, ...]  # index = power of n
    a_max: int
    s1: int

    def evaluate(self, n: int) -> int:
        return sum(c * n**i for i, c in enumerate(self.coefficients))


def expansion_and_s1(ell: int, lam: int) -> ExpansionResult:
    """Expand the packing-surplus polynomial and locate s1.

    s1 is the smallest s with 1 + ell * lambda * a < 2^ceil(s/2), where a
    bounds the magnitude of the non-leading coefficients; past it the
    monic leading term dominates and the surplus is positive.
    """
    if ell < 2 or lam < 1:
        raise ValueError("need ell >= 2 and lambda >= 1")
    fl = factorial(ell)
    poly: list[int] = [0]
    for i in range(ell + 1):
        poly = _poly_add(poly, _poly_scale(_falling_factorial(i), fl // factorial(i)))
    for t in range(ell):
        # subtract 2 * ell! * C(ell-1, t) * lambda^t * n^t
        term = [0] * (t + 1)
        term[t] = -2 * fl * comb(ell - 1, t) * lam**t
        poly = _poly_add(poly, term)
    if len(poly) != ell + 1 or poly[ell] != 1:
        raise AssertionError("expansion is not monic of the expected degree")
    a_max = max(abs(c) for c in poly[:ell])
    target = 1 + ell * lam * a_max
    s1 = 1
    while 1 << ((s1 + 1) // 2) <= target:
        s1 += 1
    return ExpansionResult(ell, lam, tuple(poly), a_max, s1)


@dataclass(frozen=True)
class ThresholdCheck:
    s: int
    n: int
    cosets_ok: bool
    packing_ok: bool

    @property
    def ok(self) -> bool:
        return self.cosets_ok and self.packing_ok


@dataclass(frozen=True)
class ThresholdReport:
    """Theorem threshold max(s1, s2) next to the empirically smallest s
    whose whole tail (up to the verification horizon) checks out."""

    ell: int
    lam: int
    s2: int
    coefficients: tuple[int, ...]
    a_max: int
    s1: int
    s_theorem: int
    s_empirical: int
    horizon: int
    checks: tuple[ThresholdCheck, ...]

    def to_json_dict(self) -> dict:
        return {
            "ell": self.ell,
            "lambda": self.lam,
            "s2": self.s2,
            "coefficients": [str(c) for c in self.coefficients],
            "a_max": str(self.a_max),
            "s1": self.s1,
            "s_theorem": self.s_theorem,
            "s_empirical": self.s_empirical,
            "horizon": self.horizon,
        }


def _threshold_check(ell: int, lam: int, s: int) -> ThresholdCheck | None:
    if ((1 << s) - 1) % lam:
        return None  # lambda does not divide 2^s - 1: no code at this s
    n = ((1 << s) - 1) // lam
    k = n - 1 - (ell - 1) * s
    cosets_ok = k >= 1
    if cosets_ok:
        for i in range(1, 2 * ell - 2, 2):
            if i >= n:
                cosets_ok = False
                break
            c = coset_of(n, i)
            if c.leader != i or c.size != s:
                cosets_ok = False
                break
    packing_ok = hamming_ball(n, ell) > 1 << ((ell - 1) * s + 1)
    return ThresholdCheck(s, n, cosets_ok, packing_ok)


def empirical_threshold(ell: int, lam: int, horizon: int) -> ThresholdReport:
    """Smallest s such that every applicable s' in [s, horizon] passes both
    the coset-leader conditions and the packing exclusion of 2*ell + 1.

    Monotonicity over the horizon is observed, not assumed: the report
    keeps every per-s check.
    """
    s2 = threshold_s2(ell, lam)
    if horizon < s2:
        raise ValueError(f"horizon {horizon} below s2 = {s2}")
    exp = expansion_and_s1(ell, lam)
    checks = []
    for s in range(1, horizon + 1):
        c = _threshold_check(ell, lam, s)
        if c is not None:
            checks.append(c)
    failing = [c.s for c in checks if not c.ok]
    if failing:
        later = [c.s for c in checks if c.s > failing[-1]]
        if not later:
            raise ValueError(f"no passing tail within horizon {horizon}")
        s_emp = later[0]
    else:
        s_emp = checks[0].s
    return ThresholdReport(
        ell=ell,
        lam=lam,
        s2=s2,
        coefficients=exp.coefficients,
        a_max=exp.a_max,
        s1=exp.s1,
        s_theorem=max(exp.s1, s2),
        s_empirical=s_emp,
        horizon=horizon,
        checks=tuple(checks),
    )


def table_one(ell_max: int = 10, lam: int = 1, horizon: int = 30) -> list[ThresholdReport]:
    """Threshold reports for ell = 2..ell_max at a fixed lambda."""
    return [empirical_threshold(ell, lam, horizon) for ell in range(2, ell_max + 1)]
