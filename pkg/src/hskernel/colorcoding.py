"""Deterministic coloring families with the k-perfectness guarantee.

A family is k-perfect when every k distinct elements can simultaneously be
given any prescribed colors by some member.  Construction is the classic
two-stage derandomization: multiplicative hashing into k*k buckets composed
with every bucket-to-color assignment.  Elements and colors are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

_MAX_FAMILY = 20_000_000  # materialization guard; desk-scale parameter space


def least_prime_above(n: int) -> int:
    p = max(2, n + 1)
    while True:
        if all(p % q for q in range(2, int(p**0.5) + 1)):
            return p
        p += 1


@dataclass(frozen=True, eq=False)
class ColoringFamily:
    """An ordered family of total functions ``{0..n-1} -> {0..c-1}``.

    Stored as one function table per row.  ``k`` records the support size the
    family was built for.
    """

    n: int
    k: int
    c: int
    tables: np.ndarray  # shape (len, n), dtype uint8

    def __len__(self) -> int:
        return self.tables.shape[0]

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.tables[i])

    def __iter__(self):
        for row in self.tables:
            yield tuple(int(x) for x in row)


def _all_functions(n: int, c: int) -> np.ndarray:
    count = c**n
    idx = np.arange(count, dtype=np.int64)
    cols = [(idx // (c ** (n - 1 - j))) % c for j in range(n)]
    return np.stack(cols, axis=1).astype(np.uint8)


def coloring_family(n: int, k: int, c: int) -> ColoringFamily:
    """Build a deterministic k-perfect family of colorings.

    Stage 1 hashes element x (as x+1) through ``((a*x) mod p) mod k*k`` for
    the least prime p > n and every multiplier a; for any k-set some a is
    collision-free into the k*k buckets.  Stage 2 appends all ``c**(k*k)``
    bucket-to-color assignments.  When enumerating all ``c**n`` functions is
    no bigger, that trivially correct family is emitted instead.
    """
    if n < 1 or k < 1 or c < 1:
        raise ValueError("n, k, c must be positive")
    if k > n:
        raise ValueError("support size k cannot exceed n")
    buckets = k * k
    p = least_prime_above(n)
    construction_size = (p - 1) * c**buckets
    if c**n <= construction_size:
        if c**n > _MAX_FAMILY:
            raise ValueError("family too large to materialize")
        return ColoringFamily(n, k, c, _all_functions(n, c))
    if construction_size > _MAX_FAMILY:
        raise ValueError("family too large to materialize")
    assignments = _all_functions(buckets, c)  # (c**buckets, buckets), lexicographic
    blocks = []
    for a in range(1, p):
        bucket_row = np.array([((a * (x + 1)) % p) % buckets for x in range(n)])
        blocks.append(assignments[:, bucket_row])
    return ColoringFamily(n, k, c, np.vstack(blocks))


def is_k_perfect(family: ColoringFamily):
    """Exhaustively verify k-perfectness.

    Returns ``True`` or the least violating ``(elements, colors)`` pair,
    ordered by the element tuple then the color tuple.  Violations are closed
    under permuting the pair, so the least one always has sorted elements.
    """
    n, k, c = family.n, family.k, family.c
    tables = family.tables.astype(np.int64)
    targets = c**k
    for xs in itertools.combinations(range(n), k):
        codes = np.zeros(tables.shape[0], dtype=np.int64)
        for x in xs:
            codes = codes * c + tables[:, x]
        realized = np.zeros(targets, dtype=bool)
        realized[codes] = True
        if not realized.all():
            missing = int(np.flatnonzero(~realized)[0])
            colors = []
            for _ in range(k):
                colors.append(missing % c)
                missing //= c
            return xs, tuple(reversed(colors))
    return True


# -- bucket hashing shared with the color-coded core detectors --------------


def bucket_family(n: int, support: int) -> tuple[int, int, range]:
    """Multiplicative bucket hashes covering supports of bounded size.

    Returns ``(p, buckets, multipliers)`` such that for any up-to-``support``
    distinct vertices some multiplier maps them to pairwise distinct buckets:
    with ``buckets = 2*support**2`` and ``p > support**2 + 1`` the per-pair
    collision count keeps a collision-free multiplier available.
    """
    if support < 1:
        raise ValueError("support must be positive")
    buckets = 2 * support * support
    p = least_prime_above(max(n, support * support + 1))
    return p, buckets, range(1, p)


def bucket_image(vertices, a: int, p: int, buckets: int) -> int:
    """Bitmask of the buckets hit by ``vertices`` under multiplier ``a``."""
    mask = 0
    for v in vertices:
        mask |= 1 << (((a * (v + 1)) % p) % buckets)
    return mask
