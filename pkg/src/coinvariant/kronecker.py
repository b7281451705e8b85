"""Kronecker coefficients of the symmetric group by exact class sums.

g(lam, mu, nu) = (1/n!) sum over classes rho of
class_size(rho) * chi_lam(rho) * chi_mu(rho) * chi_nu(rho).

The sum is accumulated as an integer and divided by n! once, with an
exactness assertion: a failure means a character table bug, never data.
Full tables store one entry per sorted index triple; lookups symmetrize.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import factorial

from .characters import CharacterTable, character_table
from .combinatorics import Partition, conjugate, dimension, partition_index
from .errors import LimitExceeded, NonIntegral

DEFAULT_MAX_N = 12


def kronecker_coefficient(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    table: CharacterTable | None = None,
) -> int:
    """Multiplicity of V(nu) in V(lam) (x) V(mu)."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("all three partitions must have the same size")
    if table is None:
        table = character_table(n)
    row_l, row_m, row_n = table.row(lam), table.row(mu), table.row(nu)
    total = sum(
        size * a * b * c
        for size, a, b, c in zip(table.class_sizes, row_l, row_m, row_n)
    )
    g, rem = divmod(total, factorial(n))
    if rem:
        raise NonIntegral(f"class sum for g({lam},{mu},{nu}) is not divisible by n!")
    return g


@dataclass
class KroneckerTable:
    """All g(lam, mu, nu) for one n, stored under sorted index triples."""

    n: int
    partitions: tuple[Partition, ...]
    entries: dict[tuple[int, int, int], int]
    _pair_cache: dict[tuple[int, int], tuple[int, ...]] = field(
        default_factory=dict, repr=False
    )

    def index(self, lam: Partition) -> int:
        return partition_index(self.n)[lam]

    def coefficient(self, lam: Partition, mu: Partition, nu: Partition) -> int:
        key = tuple(sorted((self.index(lam), self.index(mu), self.index(nu))))
        return self.entries.get(key, 0)

    def pair_vector(self, a: int, b: int) -> tuple[int, ...]:
        """g values over all nu (canonical order) for row indices a, b."""
        key = (a, b) if a <= b else (b, a)
        cached = self._pair_cache.get(key)
        if cached is None:
            get = self.entries.get
            cached = tuple(
                get(tuple(sorted((*key, c))), 0) for c in range(len(self.partitions))
            )
            self._pair_cache[key] = cached
        return cached


def build_kronecker_table(n: int, max_n: int = DEFAULT_MAX_N) -> KroneckerTable:
    """Bulk class sums over sorted triples; zero entries are not stored."""
    if not 1 <= n <= max_n:
        raise LimitExceeded(f"Kronecker table size {n} outside [1, {max_n}]")
    table = character_table(n)
    parts = table.partitions
    count = len(parts)
    nfact = factorial(n)
    weighted = [
        [size * v for size, v in zip(table.class_sizes, table.values[a])]
        for a in range(count)
    ]
    entries: dict[tuple[int, int, int], int] = {}
    for a in range(count):
        row_a = weighted[a]
        for b in range(a, count):
            row_b = table.values[b]
            pair = [x * y for x, y in zip(row_a, row_b)]
            for c in range(b, count):
                row_c = table.values[c]
                total = 0
                for x, y in zip(pair, row_c):
                    if x:
                        total += x * y
                g, rem = divmod(total, nfact)
                if rem:
                    raise NonIntegral(f"triple ({a},{b},{c}) sum not divisible by n!")
                if g:
                    entries[(a, b, c)] = g
    kron = KroneckerTable(n=n, partitions=parts, entries=entries)
    if not verify_kronecker_identities(kron):
        raise AssertionError(f"Kronecker identities fail for n={n}")
    return kron


def verify_kronecker_identities(table: KroneckerTable) -> bool:
    """The four structural identities, exhaustively over the table:

    * symmetry under permuting (lam, mu, nu) -- structural in storage,
      rechecked through symmetrized lookups;
    * g(lam, mu, (n)) == delta(lam, mu);
    * g(conjugate lam, conjugate mu, nu) == g(lam, mu, nu);
    * sum_nu dim(nu) g(lam, mu, nu) == dim(lam) dim(mu).
    """
    parts = table.partitions
    count = len(parts)
    idx = partition_index(table.n)
    conj = [idx[conjugate(lam)] for lam in parts]
    dims = [dimension(lam) for lam in parts]
    row_n = idx[(table.n,)] if table.n > 0 else 0
    get = table.entries.get
    for a in range(count):
        for b in range(a, count):
            expected = 1 if a == b else 0
            if get(tuple(sorted((a, b, row_n))), 0) != expected:
                return False
            total = 0
            for c in range(count):
                g = get(tuple(sorted((a, b, c))), 0)
                if g < 0:
                    return False
                if g != get(tuple(sorted((conj[a], conj[b], c))), 0):
                    return False
                total += dims[c] * g
            if total != dims[a] * dims[b]:
                return False
    return True


_REGISTRY: dict[int, KroneckerTable] = {}


def kronecker_table(n: int) -> KroneckerTable:
    """Process-wide memoized table; a disk cache may seed it via install."""
    table = _REGISTRY.get(n)
    if table is None:
        table = _REGISTRY[n] = build_kronecker_table(n)
    return table


def install(table: KroneckerTable) -> KroneckerTable:
    """Adopt an externally loaded table as the process-wide copy."""
    return _REGISTRY.setdefault(table.n, table)


@dataclass
class OnDemandKronecker:
    """Class-sum backend with the same lookup surface as KroneckerTable.

    Computes pair vectors lazily instead of building the full g table;
    the cheap choice when a scan only touches a few degree supports, e.g.
    the low-degree harness at n = 12.
    """

    table: CharacterTable
    _pair_cache: dict[tuple[int, int], tuple[int, ...]] = field(
        default_factory=dict, repr=False
    )

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return self.table.partitions

    def index(self, lam: Partition) -> int:
        return partition_index(self.n)[lam]

    def coefficient(self, lam: Partition, mu: Partition, nu: Partition) -> int:
        return kronecker_coefficient(lam, mu, nu, self.table)

    def pair_vector(self, a: int, b: int) -> tuple[int, ...]:
        key = (a, b) if a <= b else (b, a)
        cached = self._pair_cache.get(key)
        if cached is None:
            values = self.table.values
            nfact = factorial(self.n)
            pair = [
                size * x * y
                for size, x, y in zip(self.table.class_sizes, values[a], values[b])
            ]
            out = []
            for row in values:
                total = sum(p * v for p, v in zip(pair, row) if p)
                g, rem = divmod(total, nfact)
                if rem:
                    raise NonIntegral(f"pair ({a},{b}) sum not divisible by n!")
                out.append(g)
            cached = tuple(out)
            self._pair_cache[key] = cached
        return cached


@cache
def ondemand_kronecker(n: int) -> OnDemandKronecker:
    return OnDemandKronecker(character_table(n))
