"""The graded S_n-representation on the coinvariant ring.

Degree convention: everything is stored in the single grading i, where the
degree-i piece is what geometry would call cohomological degree 2i.  The
top degree is c = n(n-1)/2.

The multiplicity of the irreducible V(lam) in the degree-i piece equals the
number of standard tableaux of shape lam with major index i (the fake
degree).  Three independent routes compute the same polynomial:

* ``fake_degree_syt``        -- direct major-index enumeration,
* ``fake_degree_hook``       -- q-hook formula (production route),
* ``fake_degree_projection`` -- character projection of the graded character.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial

from .characters import CharacterTable, character_table
from .combinatorics import (
    Partition,
    class_sign,
    conjugate,
    dimension,
    enumerate_syt,
    major_index,
    partition_index,
    partitions_of,
)
from .polynomials import IntPoly, is_unimodal, one_minus_q_power, q_hook_fake_degree


def top_degree(n: int) -> int:
    return n * (n - 1) // 2


@cache
def poincare_polynomial(n: int) -> IntPoly:
    """prod_{k=0}^{n-1} (1 + q + ... + q^k); the graded dimensions."""
    poly = IntPoly((1,))
    for k in range(n):
        poly = poly * IntPoly((1,) * (k + 1))
    return poly


@cache
def _numerator(n: int) -> IntPoly:
    poly = IntPoly((1,))
    for i in range(1, n + 1):
        poly = poly * one_minus_q_power(i)
    return poly


def graded_character_poly(n: int, rho: Partition) -> IntPoly:
    """Graded character at a class of cycle type rho:
    prod_{i<=n} (1 - q^i) / prod_j (1 - q^{rho_j}).  Exact by construction."""
    if sum(rho) != n:
        raise ValueError(f"{rho} is not a partition of {n}")
    poly = _numerator(n)
    for part in rho:
        poly = poly.divide_exact(one_minus_q_power(part))
    return poly


def fake_degree_syt(lam: Partition) -> IntPoly:
    """Major-index generating polynomial over standard tableaux of shape lam."""
    c = top_degree(sum(lam))
    coeffs = [0] * (c + 1)
    for tableau in enumerate_syt(lam):
        coeffs[major_index(tableau)] += 1
    return IntPoly(coeffs)


def fake_degree_hook(lam: Partition) -> IntPoly:
    """q-hook route; agrees with fake_degree_syt everywhere."""
    return q_hook_fake_degree(lam)


def fake_degree_projection(lam: Partition, n: int, table: CharacterTable | None = None) -> IntPoly:
    """Project the graded character onto V(lam): coefficient-wise
    (1/n!) sum_rho class_size(rho) chi_lam(rho) chi(rho, q)."""
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    if table is None:
        table = character_table(n)
    total = IntPoly()
    row = table.row(lam)
    for j, rho in enumerate(table.partitions):
        value = row[j] * table.class_sizes[j]
        if value:
            total = total + graded_character_poly(n, rho).scale(value)
    return total.scalar_divide_exact(factorial(n))


@dataclass(frozen=True)
class GradedMultiplicityTable:
    """b[lam][i] = multiplicity of V(lam) in the degree-i graded piece."""

    n: int
    partitions: tuple[Partition, ...]
    b: tuple[tuple[int, ...], ...]
    supports: tuple[tuple[tuple[int, int], ...], ...]  # per degree: (row, mult)

    @property
    def top_degree(self) -> int:
        return top_degree(self.n)

    def index(self, lam: Partition) -> int:
        return partition_index(self.n)[lam]

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.b[self.index(lam)]

    def multiplicity(self, lam: Partition, i: int) -> int:
        """b[lam][i]; degrees outside [0, c] hold the zero representation."""
        if not 0 <= i <= self.top_degree:
            return 0
        return self.b[self.index(lam)][i]

    def support(self, i: int) -> tuple[tuple[int, int], ...]:
        """Nonzero (partition row, multiplicity) pairs in degree i."""
        if not 0 <= i < len(self.supports):
            return ()
        return self.supports[i]


def _supports(rows: tuple[tuple[int, ...], ...], degrees: int) -> tuple:
    return tuple(
        tuple((r, row[i]) for r, row in enumerate(rows) if row[i])
        for i in range(degrees)
    )


def build_graded_table(n: int) -> GradedMultiplicityTable:
    """Hook-formula route, validated against the structural identities."""
    if n < 1:
        raise ValueError("n must be positive")
    c = top_degree(n)
    parts = partitions_of(n)
    rows = tuple(fake_degree_hook(lam).padded(c + 1) for lam in parts)
    table = GradedMultiplicityTable(
        n=n, partitions=parts, b=rows, supports=_supports(rows, c + 1)
    )
    _validate(table)
    return table


def _validate(table: GradedMultiplicityTable) -> None:
    n, c = table.n, table.top_degree
    idx = partition_index(n)
    dims = [dimension(lam) for lam in table.partitions]
    for r, lam in enumerate(table.partitions):
        if sum(table.b[r]) != dims[r]:
            raise AssertionError(f"row sum != dim V({lam})")
        conj_row = table.b[idx[conjugate(lam)]]
        if any(table.b[r][c - i] != conj_row[i] for i in range(c + 1)):
            raise AssertionError(f"duality fails on row {lam}")
    betti = poincare_polynomial(n).padded(c + 1)
    for i in range(c + 1):
        if sum(d * row[i] for d, row in zip(dims, table.b)) != betti[i]:
            raise AssertionError(f"column {i} does not match Poincare coefficient")


_REGISTRY: dict[int, GradedMultiplicityTable] = {}


def graded_table(n: int) -> GradedMultiplicityTable:
    """Process-wide memoized table; a disk cache may seed it via install."""
    table = _REGISTRY.get(n)
    if table is None:
        table = _REGISTRY[n] = build_graded_table(n)
    return table


def install(table: GradedMultiplicityTable) -> GradedMultiplicityTable:
    """Adopt an externally loaded table as the process-wide copy."""
    return _REGISTRY.setdefault(table.n, table)


def check_duality(n: int) -> bool:
    """Both faces of the complementary-degree duality.

    Polynomial face: mirror(chi(rho, q), c) == sign(rho) * chi(rho, q) for
    every class rho.  Multiplicity face: b[lam][c-i] == b[conjugate(lam)][i].
    """
    c = top_degree(n)
    for rho in partitions_of(n):
        poly = graded_character_poly(n, rho)
        if poly.mirror(c) != poly.scale(class_sign(rho)):
            return False
    table = graded_table(n)
    idx = partition_index(n)
    for r, lam in enumerate(table.partitions):
        conj_row = table.b[idx[conjugate(lam)]]
        if any(table.b[r][c - i] != conj_row[i] for i in range(c + 1)):
            return False
    return True


# ---------------------------------------------------------------------------
# Representation-stability checks


@dataclass(frozen=True)
class StabilizationReport:
    """Padded degree-i multiplicities across n; stable means all constant.

    For a core partition mu, the padded shape at n is (n - |mu|, *mu).
    ``sequences`` maps each core to the multiplicity sequence over
    n = n_min .. n_max.
    """

    degree: int
    n_min: int
    n_max: int
    sequences: tuple[tuple[Partition, tuple[int, ...]], ...]
    anomalies: tuple[Partition, ...]

    @property
    def stable(self) -> bool:
        return not self.anomalies


def pad_core(core: Partition, n: int) -> Partition:
    """(n - |core|, *core); rejects paddings that are not partitions."""
    first = n - sum(core)
    if core and first < core[0]:
        raise ValueError(f"cannot pad {core} to n={n}")
    if first < 0:
        raise ValueError(f"cannot pad {core} to n={n}")
    return (first, *core) if first > 0 else core


def stabilization_check(i: int, n_max: int) -> StabilizationReport:
    """Scan b[pad(core, n)][i] for n in [2i, n_max] for every core of size <= i.

    Any shape with |shape| - shape_1 > i has no tableau of major index i, so
    the cores of size <= i cover every possibly-nonzero row; this is verified
    during the scan and any stray nonzero row is reported as an anomaly.
    """
    if i < 1:
        raise ValueError("degree must be >= 1")
    n_min = 2 * i
    if n_max < n_min:
        raise ValueError(f"n_max must be at least {n_min}")
    cores = [mu for size in range(i + 1) for mu in partitions_of(size)]
    sequences = []
    anomalies = []
    for core in cores:
        seq = tuple(
            graded_table(n).multiplicity(pad_core(core, n), i)
            for n in range(n_min, n_max + 1)
        )
        sequences.append((core, seq))
        if len(set(seq)) > 1:
            anomalies.append(core)
    core_set = set(cores)
    for n in range(n_min, n_max + 1):
        for r, mult in graded_table(n).support(i):
            lam = graded_table(n).partitions[r]
            if lam[1:] not in core_set:
                anomalies.append(lam[1:])
    return StabilizationReport(
        degree=i,
        n_min=n_min,
        n_max=n_max,
        sequences=tuple(sequences),
        anomalies=tuple(dict.fromkeys(anomalies)),
    )


def find_nonunimodal_fake_degrees(n: int) -> list[Partition]:
    """All shapes whose fake-degree coefficient sequence is not unimodal."""
    return [
        lam
        for lam in partitions_of(n)
        if not is_unimodal(fake_degree_hook(lam).coeffs)
    ]
