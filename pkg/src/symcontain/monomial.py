"""Exact monomial-ideal arithmetic, used as a brute-force oracle.

Monomial ideals are stored by their unique minimal generating set
(componentwise-incomparable exponent vectors in canonical sorted order).
The star engine's membership and alpha computations are cross-checked
against symbolic powers of coordinate star configurations computed here
by plain intersections of powers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .core import InvalidInputError, as_exponent_vector, binomial
from .star import star_alpha, star_config, star_member

CROSSCHECK_BUDGET = 10 ** 6


class BudgetExceededError(ValueError):
    """The requested exhaustive enumeration is beyond the allowed budget."""


def _divides(g: Tuple[int, ...], v: Tuple[int, ...]) -> bool:
    return all(gi <= vi for gi, vi in zip(g, v))


def _minimalize(vectors: Sequence[Tuple[int, ...]]) -> Tuple[Tuple[int, ...], ...]:
    """Unique minimal generating set: drop anything divisible by another."""
    unique = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: List[Tuple[int, ...]] = []
    for v in unique:
        if not any(_divides(g, v) for g in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    n_vars: int
    gens: Tuple[Tuple[int, ...], ...]


def monomial_ideal(n_vars: int, gens: Sequence[Sequence[int]]) -> MonomialIdeal:
    """Build a monomial ideal from any generating set (minimalized)."""
    if n_vars < 1:
        raise InvalidInputError(f"need at least one variable, got {n_vars}")
    vectors = [as_exponent_vector(g, n_vars) for g in gens]
    return MonomialIdeal(n_vars=n_vars, gens=_minimalize(vectors))


def _check_same_vars(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n_vars != b.n_vars:
        raise InvalidInputError(
            f"variable count mismatch: {a.n_vars} vs {b.n_vars}"
        )


def mi_intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection: componentwise maxima of generator pairs, minimalized."""
    _check_same_vars(a, b)
    maxima = {
        tuple(max(x, y) for x, y in zip(ga, gb))
        for ga in a.gens
        for gb in b.gens
    }
    return MonomialIdeal(n_vars=a.n_vars, gens=_minimalize(list(maxima)))


def mi_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Product: generator sumset, minimalized."""
    _check_same_vars(a, b)
    sums = {
        tuple(x + y for x, y in zip(ga, gb)) for ga in a.gens for gb in b.gens
    }
    return MonomialIdeal(n_vars=a.n_vars, gens=_minimalize(list(sums)))


def mi_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-fold power; the zeroth power is the unit ideal."""
    if k < 0:
        raise InvalidInputError(f"power must be nonnegative, got {k}")
    result = monomial_ideal(a.n_vars, [(0,) * a.n_vars])
    for _ in range(k):
        result = mi_product(result, a)
    return result


def mi_member(a: MonomialIdeal, v: Sequence[int]) -> bool:
    """Membership: some generator divides v componentwise."""
    vec = as_exponent_vector(v, a.n_vars)
    return any(_divides(g, vec) for g in a.gens)


def mi_alpha(a: MonomialIdeal) -> int:
    """Least total degree among the minimal generators."""
    if not a.gens:
        raise InvalidInputError("alpha of the zero ideal is undefined")
    return min(sum(g) for g in a.gens)


def coordinate_star_symbolic(n: int, h: int, k: int) -> MonomialIdeal:
    """k-th symbolic power of the coordinate star configuration.

    Computed as the intersection, over all h-subsets E of the variables,
    of the k-th ordinary power of the ideal generated by the variables
    in E.
    """
    if not (1 <= h <= n):
        raise InvalidInputError(f"need 1 <= h <= n, got h={h}, n={n}")
    if k < 1:
        raise InvalidInputError(f"power must be >= 1, got {k}")
    result = None
    for subset in itertools.combinations(range(n), h):
        variables = monomial_ideal(
            n, [tuple(1 if j == i else 0 for j in range(n)) for i in subset]
        )
        power = mi_power(variables, k)
        result = power if result is None else mi_intersect(result, power)
    assert result is not None
    return result


def _vectors_up_to_degree(n: int, deg_bound: int) -> Iterator[Tuple[int, ...]]:
    """All exponent vectors of length n with total degree <= deg_bound."""

    def rec(slots: int, remaining: int, prefix: List[int]):
        if slots == 0:
            yield tuple(prefix)
            return
        for e in range(remaining + 1):
            prefix.append(e)
            yield from rec(slots - 1, remaining - e, prefix)
            prefix.pop()

    yield from rec(n, deg_bound, [])


def _membership_table(a: MonomialIdeal, deg_bound: int) -> Dict[Tuple[int, ...], bool]:
    """Membership of every vector of degree <= deg_bound, by upward closure.

    A vector is in the ideal iff it is a generator or some coordinate can
    be decremented to a member, so a single pass in increasing total degree
    suffices.
    """
    genset = set(a.gens)
    table: Dict[Tuple[int, ...], bool] = {}
    for v in sorted(_vectors_up_to_degree(a.n_vars, deg_bound), key=sum):
        member = v in genset
        if not member:
            for i in range(a.n_vars):
                if v[i] > 0:
                    lower = v[:i] + (v[i] - 1,) + v[i + 1:]
                    if table[lower]:
                        member = True
                        break
        table[v] = member
    return table


@dataclass(frozen=True)
class CrosscheckReport:
    n: int
    h: int
    k: int
    deg_bound: int
    checked: int
    mismatches: Tuple[Tuple[int, ...], ...]
    alpha_oracle: int
    alpha_engine: int

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.alpha_oracle == self.alpha_engine


def crosscheck_star(n: int, h: int, k: int, deg_bound: int) -> CrosscheckReport:
    """Compare the star engine against the monomial oracle exhaustively.

    Every exponent vector of total degree <= deg_bound is tested for
    membership in the k-th symbolic power both ways; alpha is compared as
    well.  Refuses when the enumeration would exceed the budget.
    """
    if binomial(n + deg_bound, n) > CROSSCHECK_BUDGET:
        raise BudgetExceededError(
            f"C({n + deg_bound}, {n}) vectors exceed budget {CROSSCHECK_BUDGET}"
        )
    ideal = coordinate_star_symbolic(n, h, k)
    cfg = star_config(n=n, h=h)
    table = _membership_table(ideal, deg_bound)
    mismatches = []
    for v, oracle_member in table.items():
        if oracle_member != star_member(cfg, v, k):
            mismatches.append(v)
    return CrosscheckReport(
        n=n,
        h=h,
        k=k,
        deg_bound=deg_bound,
        checked=len(table),
        mismatches=tuple(sorted(mismatches)),
        alpha_oracle=mi_alpha(ideal),
        alpha_engine=star_alpha(cfg, k),
    )
