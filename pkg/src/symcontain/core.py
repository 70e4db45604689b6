"""Exact integer primitives shared by every engine.

All arithmetic in this package is exact: Python integers for counts and
degrees, ``fractions.Fraction`` for rational bounds.  Floating point is
never used.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Tuple


class InvalidInputError(ValueError):
    """An operation received arguments outside its contract."""


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise InvalidInputError(f"binomial requires n, k >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return comb(n, k)


def as_exponent_vector(entries: Sequence[int], n: int | None = None) -> Tuple[int, ...]:
    """Validate and freeze a vector of nonnegative integer exponents.

    If ``n`` is given, the length must match.
    """
    v = tuple(int(e) for e in entries)
    if n is not None and len(v) != n:
        raise InvalidInputError(f"expected length {n}, got {len(v)}")
    if any(e < 0 for e in v):
        raise InvalidInputError(f"exponents must be nonnegative: {v}")
    return v


@dataclass(frozen=True)
class HSubsetStat:
    """Minimal sum of h entries of a vector, with a realizing index set.

    ``witness`` is the lexicographically smallest index set among all
    h-subsets achieving the minimum, so downstream certificates are
    byte-for-byte reproducible.
    """

    h: int
    value: int
    witness: Tuple[int, ...]


def h_smallest_sum(v: Sequence[int], h: int) -> HSubsetStat:
    """Sum of the h smallest entries of ``v`` plus a witness index set."""
    vec = as_exponent_vector(v)
    if h < 1 or h > len(vec):
        raise InvalidInputError(f"h must be in [1, {len(vec)}], got {h}")
    # Sorting by (value, index) yields the lexicographically smallest
    # witness among all minimal h-subsets.
    order = sorted(range(len(vec)), key=lambda i: (vec[i], i))
    witness = tuple(sorted(order[:h]))
    return HSubsetStat(h=h, value=sum(vec[i] for i in witness), witness=witness)


def integer_nth_root(s: int, n: int) -> int:
    """Largest k with k**n <= s, in pure integer arithmetic."""
    if s < 1 or n < 1:
        raise InvalidInputError(f"require s >= 1 and n >= 1, got ({s}, {n})")
    if n == 1 or s == 1:
        return s if n == 1 else 1
    hi = 1
    while hi ** n <= s:
        hi *= 2
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid ** n <= s:
            lo = mid
        else:
            hi = mid
    return lo
