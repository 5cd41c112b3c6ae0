"""2-cyclotomic cosets modulo odd n.

The coset of s is its orbit {s, 2s, 4s, ...} under doubling mod n; the
distinct cosets partition {0, ..., n-1}.  Coset leaders and sizes drive
generator-polynomial degrees and hence code dimensions, so everything
here is exact integer bookkeeping.
"""

from __future__ import annotations

import os
import pickle
from dataclasses import dataclass

CACHE_ENV = "OPTBCH_CACHE_DIR"


def ord_mod(n: int) -> int:
    """Multiplicative order of 2 modulo odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    if n == 1:
        return 1
    m, t = 1, 2
    while t != 1:
        t = t * 2 % n
        m += 1
    return m


@dataclass(frozen=True)
class Coset:
    """One doubling orbit: leader is the smallest member."""

    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def coset_of(n: int, s: int) -> Coset:
    """The coset containing s, without tabulating all of Z_n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    s %= n
    members = [s]
    t = s * 2 % n
    while t != s:
        members.append(t)
        t = t * 2 % n
    return Coset(min(members), tuple(members))


@dataclass(frozen=True)
class CosetTable:
    """All cosets mod n, ordered by ascending leader.

    leader_index maps each residue to the leader of its owning coset.
    """

    n: int
    cosets: tuple[Coset, ...]
    leader_index: tuple[int, ...]

    def coset(self, s: int) -> Coset:
        leader = self.leader_index[s % self.n]
        for c in self.cosets:
            if c.leader == leader:
                return c
        raise KeyError(s)  # pragma: no cover

    @property
    def leaders(self) -> list[int]:
        return [c.leader for c in self.cosets]


def all_cosets(n: int) -> CosetTable:
    """Enumerate every coset mod n by a single marking pass.

    Memory is linear in n; with OPTBCH_CACHE_DIR set, tables are
    memoized on disk keyed by n.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    cache = _cache_path(n)
    if cache and os.path.exists(cache):
        with open(cache, "rb") as fh:
            return pickle.load(fh)
    seen = bytearray(n)
    cosets = []
    leader_index = [0] * n
    for s in range(n):
        if seen[s]:
            continue
        members = [s]
        seen[s] = 1
        t = s * 2 % n
        while t != s:
            members.append(t)
            seen[t] = 1
            t = t * 2 % n
        cosets.append(Coset(s, tuple(members)))
        for t in members:
            leader_index[t] = s
    table = CosetTable(n, tuple(cosets), tuple(leader_index))
    if cache:
        with open(cache, "wb") as fh:
            pickle.dump(table, fh)
    return table


def _cache_path(n: int) -> str | None:
    d = os.environ.get(CACHE_ENV)
    if not d:
        return None
    os.makedirs(d, exist_ok=True)
    return os.path.join(d, f"cosets_{n}.pkl")


@dataclass(frozen=True)
class LeaderRangeEntry:
    s: int
    is_leader: bool
    size: int

    def ok(self, expected_size: int) -> bool:
        return self.is_leader and self.size == expected_size


@dataclass(frozen=True)
class LeaderRangeReport:
    """Per-residue check that odd s up to a bound lead cosets of a fixed size."""

    n: int
    bound: int
    expected_size: int
    entries: tuple[LeaderRangeEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.ok(self.expected_size) for e in self.entries)


def check_leader_range(n: int, bound: int, expected_size: int) -> LeaderRangeReport:
    """For every odd s <= bound: is s a coset leader with |C_s| = expected_size?"""
    if not 1 <= bound <= n - 1:
        raise ValueError("bound must lie in [1, n-1]")
    entries = []
    for s in range(1, bound + 1, 2):
        c = coset_of(n, s)
        entries.append(LeaderRangeEntry(s, c.leader == s, c.size))
    return LeaderRangeReport(n, bound, expected_size, tuple(entries))
