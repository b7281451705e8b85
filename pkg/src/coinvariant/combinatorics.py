"""Partitions, Young tableaux, and word statistics.

Everything operates on plain immutable tuples: a partition is a weakly
decreasing tuple of positive integers, a tableau a tuple of row tuples.
All operations are pure and every enumeration order is deterministic, so
streams may be consumed from concurrent tasks without coordination.

Canonical partition order is descending lexicographic starting from ``(n,)``.
That order is the global indexing contract for every table and report in
this package.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial
from typing import Iterator

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def is_partition(parts: tuple[int, ...]) -> bool:
    """True if ``parts`` is weakly decreasing with strictly positive entries."""
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: tuple[int, ...]) -> Partition:
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse the canonical text form ``"4,1,1,1"``; empty string is ()."""
    if text == "":
        return ()
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition text: {text!r}") from None
    return check_partition(parts)


def format_partition(parts: Partition) -> str:
    """Canonical text form: comma-separated parts, no whitespace."""
    return ",".join(str(p) for p in parts)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order from (n,)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return tuple(gen(n, n))


@cache
def partition_index(n: int) -> dict[Partition, int]:
    """Position of each partition of ``n`` in the canonical order."""
    return {lam: k for k, lam in enumerate(partitions_of(n))}


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Hook length of every cell, in row-major order (arm + leg + 1)."""
    conj = conjugate(lam)
    return tuple(
        lam[r] - c + conj[c] - r - 1
        for r in range(len(lam))
        for c in range(lam[r])
    )


def hook_product(lam: Partition) -> int:
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return prod


def dimension(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` (hook length formula)."""
    n = sum(lam)
    dim, rem = divmod(factorial(n), hook_product(lam))
    assert rem == 0
    return dim


def centralizer_size(rho: Partition) -> int:
    """z_rho = prod(i^m_i * m_i!) over part multiplicities m_i."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * factorial(mult)
    return z


def class_size(rho: Partition) -> int:
    n = sum(rho)
    size, rem = divmod(factorial(n), centralizer_size(rho))
    assert rem == 0
    return size


def class_sign(rho: Partition) -> int:
    """Sign of any permutation of cycle type ``rho``: (-1)^(n - length)."""
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def n_stat(lam: Partition) -> int:
    """The statistic Sum_i (i-1)*lam_i over 1-based rows."""
    return sum(i * part for i, part in enumerate(lam))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: partial sums of ``lam`` weakly exceed those of ``mu``.

    Both must partition the same number for the order to be meaningful.
    """
    total_l = 0
    total_m = 0
    for k in range(max(len(lam), len(mu))):
        total_l += lam[k] if k < len(lam) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l < total_m:
            return False
    return True


# ---------------------------------------------------------------------------
# Standard Young tableaux


def enumerate_syt(shape: Partition) -> Iterator[Tableau]:
    """All standard tableaux of ``shape``, sorted by row-reading word.

    Entries are 1..n, rows and columns strictly increasing.  The count
    equals n!/hook_product(shape).
    """
    n = sum(shape)
    rows = len(shape)
    filled = [0] * rows
    tab: list[list[int]] = [[] for _ in range(rows)]
    found: list[Tableau] = []

    def place(entry: int) -> None:
        if entry > n:
            found.append(tuple(tuple(row) for row in tab))
            return
        for r in range(rows):
            c = filled[r]
            if c < shape[r] and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                tab[r].append(entry)
                place(entry + 1)
                filled[r] -= 1
                tab[r].pop()

    place(1)
    yield from sorted(found)


def major_index(tableau: Tableau) -> int:
    """Sum of entries j such that j+1 sits in a strictly lower row than j."""
    row_of: dict[int, int] = {}
    for r, row in enumerate(tableau):
        for entry in row:
            row_of[entry] = r
    n = len(row_of)
    return sum(j for j in range(1, n) if row_of[j + 1] > row_of[j])


# ---------------------------------------------------------------------------
# Semistandard Young tableaux

# An SSYT of shape lam and content mu is a chain of nested shapes where the
# cells added at step k (a horizontal strip) receive the letter k.


def enumerate_ssyt(shape: Partition, content: Partition) -> Iterator[Tableau]:
    """All semistandard tableaux of ``shape`` and ``content``, sorted by
    row-reading word.  Rows weakly increase, columns strictly increase and
    letter k occurs content[k-1] times; the count is the Kostka number."""
    if sum(shape) != sum(content):
        raise ValueError("shape and content must have equal size")
    rows = len(shape)
    found: list[Tableau] = []
    tab: list[list[int]] = [[] for _ in range(rows)]

    def add_strip(inner: tuple[int, ...], letter: int) -> None:
        if letter > len(content):
            if list(inner) == list(shape):
                found.append(tuple(tuple(row) for row in tab))
            return
        size = content[letter - 1]

        def choose(r: int, left: int, new: list[int]) -> None:
            if r == rows:
                if left == 0:
                    for rr in range(rows):
                        tab[rr].extend([letter] * (new[rr] - inner[rr]))
                    add_strip(tuple(new), letter + 1)
                    for rr in range(rows):
                        del tab[rr][inner[rr]:]
                return
            low = inner[r]
            high = min(shape[r], inner[r] + left)
            if r > 0:
                high = min(high, inner[r - 1])  # horizontal strip condition
            for val in range(low, high + 1):
                new.append(val)
                choose(r + 1, left - (val - low), new)
                new.pop()

        choose(0, size, [])

    add_strip((0,) * rows, 1)
    yield from sorted(found)


def kostka_number(shape: Partition, content: Partition) -> int:
    return sum(1 for _ in enumerate_ssyt(shape, content))


def reading_word(tableau: Tableau) -> tuple[int, ...]:
    """Rows read left-to-right, bottom row first."""
    word: list[int] = []
    for row in reversed(tableau):
        word.extend(row)
    return tuple(word)


def charge(word: tuple[int, ...]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are extracted by scanning right-to-left cyclically,
    always picking the smallest letter still needed; within a subword
    index(1) = 0 and index(r+1) = index(r) + 1 exactly when r+1 sits
    strictly to the right of r in the original word.  Charge is the total
    of all indices over all extracted subwords.
    """
    counts = Counter(word)
    letters = sorted(counts)
    if letters and (letters[0] < 1 or letters != list(range(1, len(letters) + 1))):
        raise ValueError(f"word letters must be 1..m with no gaps: {word!r}")
    for r in range(1, len(letters)):
        if counts[r] < counts[r + 1]:
            raise ValueError(f"content of {word!r} is not a partition")

    positions = list(range(len(word)))
    total = 0
    while positions:
        top = max(word[p] for p in positions)
        cursor = len(positions) - 1
        marked: list[int] = []  # slot in `positions` of letter r, r = 1..top
        for target in range(1, top + 1):
            scan = cursor
            while word[positions[scan]] != target:
                scan = scan - 1 if scan > 0 else len(positions) - 1
            marked.append(scan)
            cursor = scan - 1 if scan > 0 else len(positions) - 1
        index = 0
        prev_pos = positions[marked[0]]
        for slot in marked[1:]:
            pos = positions[slot]
            if pos > prev_pos:
                index += 1
            total += index
            prev_pos = pos
        for slot in sorted(marked, reverse=True):
            del positions[slot]
    return total
