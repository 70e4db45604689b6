"""Symbolic-power engine for codimension-h star configurations.

A star configuration is described purely combinatorially: ``n`` forms, a
codimension ``h``, and the degrees of the forms.  A monomial in the forms is
an exponent vector of length ``n``, and it lies in the k-th symbolic power
exactly when every h-subset of its exponents sums to at least k, i.e. when
the minimal h-subset sum reaches k.  All invariants (alpha, the Waldschmidt
constant) and the containment certificates are computed from that
characterization in exact arithmetic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .core import InvalidInputError, as_exponent_vector, h_smallest_sum
from .lp import simplex_max


class NotAMemberError(ValueError):
    """The input monomial is not in the required symbolic power."""


class AlgorithmInvariantError(RuntimeError):
    """An internal invariant of the certification algorithm failed.

    This is unreachable for inputs satisfying the documented
    preconditions; raising it signals a defect, not bad input.
    """


@dataclass(frozen=True)
class StarConfig:
    """Combinatorial data of a codimension-h star configuration.

    ``degrees[j]`` is the degree of the j-th form; ``ambient_dim`` is the
    dimension of the ambient projective space (metadata only, but must be
    at least h).
    """

    n: int
    h: int
    degrees: Tuple[int, ...]
    ambient_dim: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"need at least one form, got n={self.n}")
        if not (1 <= self.h <= min(self.n, self.ambient_dim)):
            raise InvalidInputError(
                f"need 1 <= h <= min(n, ambient_dim), got h={self.h}, "
                f"n={self.n}, ambient_dim={self.ambient_dim}"
            )
        if len(self.degrees) != self.n:
            raise InvalidInputError(
                f"expected {self.n} form degrees, got {len(self.degrees)}"
            )
        if any(d < 1 for d in self.degrees):
            raise InvalidInputError(f"form degrees must be >= 1: {self.degrees}")

    @property
    def uniform(self) -> bool:
        return all(d == self.degrees[0] for d in self.degrees)


def star_config(
    n: int,
    h: int,
    degrees: Optional[Sequence[int]] = None,
    ambient_dim: Optional[int] = None,
) -> StarConfig:
    """Build a :class:`StarConfig`, defaulting to linear forms in P^h."""
    degs = tuple(degrees) if degrees is not None else (1,) * n
    dim = ambient_dim if ambient_dim is not None else max(h, 1)
    return StarConfig(n=n, h=h, degrees=degs, ambient_dim=dim)


def star_member(cfg: StarConfig, a: Sequence[int], k: int) -> bool:
    """Is the F-monomial with exponents ``a`` in the k-th symbolic power?"""
    v = as_exponent_vector(a, cfg.n)
    if k < 0:
        raise InvalidInputError(f"power must be nonnegative, got {k}")
    if k == 0:
        return True
    return h_smallest_sum(v, cfg.h).value >= k


def _partition_profiles(k: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Nonincreasing tuples of at most ``parts`` positive integers summing to k."""

    def rec(remaining: int, max_part: int, slots: int, prefix: List[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        if slots == 0:
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, slots - 1, prefix)
            prefix.pop()

    yield from rec(k, k, parts, [])


def _alpha_profile_search(cfg: StarConfig, k: int) -> int:
    """Exact minimum of sum(a_j * deg_j) over members of the k-th symbolic power.

    Feasibility depends only on the sorted exponent profile: the h smallest
    exponents must sum to at least k, and at an optimum they sum to exactly
    k while the remaining n-h exponents equal the h-th smallest one.  By the
    rearrangement inequality the cheapest assignment pairs large exponents
    with small degrees, so it suffices to scan partitions of k into at most
    h parts.
    """
    degs_asc = sorted(cfg.degrees)
    best: Optional[int] = None
    for profile in _partition_profiles(k, cfg.h):
        top = profile[0]  # largest exponent among the h smallest positions
        values = sorted(profile, reverse=True) + [top] * (cfg.n - cfg.h)
        values.sort(reverse=True)
        cost = sum(v * d for v, d in zip(values, degs_asc))
        if best is None or cost < best:
            best = cost
    assert best is not None
    return best


def star_alpha(cfg: StarConfig, k: int) -> int:
    """Least degree of an F-monomial in the k-th symbolic power."""
    if k < 1:
        raise InvalidInputError(f"power must be >= 1, got {k}")
    if cfg.uniform:
        d = cfg.degrees[0]
        return d * (k + (cfg.n - cfg.h) * (-(-k // cfg.h)))
    return _alpha_profile_search(cfg, k)


def star_waldschmidt(cfg: StarConfig) -> Fraction:
    """Exact Waldschmidt constant of the star configuration.

    Computed as the optimum of the rational relaxation: minimize
    sum(deg_j * a_j) subject to sum(a_j for j in E) >= 1 over every
    h-subset E.  We solve the LP dual (a standard-form maximization whose
    all-slack basis is feasible) with the exact simplex; by strong duality
    its value equals the primal optimum.
    """
    subsets = list(itertools.combinations(range(cfg.n), cfg.h))
    c = [Fraction(1)] * len(subsets)
    a_rows = [
        [Fraction(1) if j in subsets[e] else Fraction(0) for e in range(len(subsets))]
        for j in range(cfg.n)
    ]
    b = [Fraction(d) for d in cfg.degrees]
    value, _ = simplex_max(c, a_rows, b)
    return value


@dataclass(frozen=True)
class StarCertificate:
    """Witness that the input monomial lies in m^required * (I^(m))^r.

    ``base`` is the vector d' of the reduction: the input equals
    r * base + leftover componentwise, the minimal h-subset sum of ``base``
    is exactly m (achieved on ``tight_subset``), and the weighted degree of
    ``leftover`` is at least ``required_degree = (r-1)(h-1)+c-1``.
    """

    config: StarConfig
    input: Tuple[int, ...]
    m: int
    r: int
    c: int
    base: Tuple[int, ...]
    tight_subset: Tuple[int, ...]
    leftover: Tuple[int, ...]
    leftover_degree: int
    required_degree: int

    def to_dict(self) -> dict:
        """JSON-ready dictionary (field names are part of the CLI contract)."""
        return {
            "kind": "star-containment",
            "n": self.config.n,
            "h": self.config.h,
            "m": self.m,
            "r": self.r,
            "c": self.c,
            "degrees": list(self.config.degrees),
            "input_exponents": list(self.input),
            "base_vector": list(self.base),
            "tight_subset": list(self.tight_subset),
            "leftover": list(self.leftover),
            "leftover_degree": self.leftover_degree,
            "required_degree": self.required_degree,
            "verified": star_verify_certificate(self),
        }


def star_certificate_from_dict(doc: dict) -> StarCertificate:
    """Rebuild a certificate from its JSON form (inverse of ``to_dict``)."""
    cfg = star_config(
        n=int(doc["n"]),
        h=int(doc["h"]),
        degrees=[int(d) for d in doc["degrees"]],
        ambient_dim=None,
    )
    return StarCertificate(
        config=cfg,
        input=tuple(int(x) for x in doc["input_exponents"]),
        m=int(doc["m"]),
        r=int(doc["r"]),
        c=int(doc["c"]),
        base=tuple(int(x) for x in doc["base_vector"]),
        tight_subset=tuple(int(x) for x in doc["tight_subset"]),
        leftover=tuple(int(x) for x in doc["leftover"]),
        leftover_degree=int(doc["leftover_degree"]),
        required_degree=int(doc["required_degree"]),
    )


def star_containment_threshold(h: int, m: int, r: int, c: int) -> int:
    """Symbolic power r(m+h-1)-h+c whose members the certificate covers."""
    return r * (m + h - 1) - h + c


def star_certify_containment(
    cfg: StarConfig, a: Sequence[int], m: int, r: int, c: int
) -> StarCertificate:
    """Certify membership of the monomial ``a`` in m^((r-1)(h-1)+c-1) (I^(m))^r.

    Precondition: ``a`` lies in the symbolic power r(m+h-1)-h+c.  The
    construction takes d = floor(a / r), then decrements entries of d
    (largest first, smallest index on ties) while the minimal h-subset sum
    stays at least m, stopping when some h-subset sum equals m exactly.
    """
    if m < 1 or r < 1 or c < 1:
        raise InvalidInputError(f"need m, r, c >= 1, got ({m}, {r}, {c})")
    v = as_exponent_vector(a, cfg.n)
    threshold = star_containment_threshold(cfg.h, m, r, c)
    if not star_member(cfg, v, threshold):
        raise NotAMemberError(
            f"exponents {v} are not in the symbolic power {threshold}"
        )

    d = [e // r for e in v]
    stat = h_smallest_sum(d, cfg.h)
    if stat.value < m:
        raise AlgorithmInvariantError(
            f"floor(a/r) has minimal h-subset sum {stat.value} < m={m}"
        )
    while stat.value > m:
        j = max(range(cfg.n), key=lambda i: (d[i], -i))
        d[j] -= 1
        stat = h_smallest_sum(d, cfg.h)

    base = tuple(d)
    leftover = tuple(v[j] - r * base[j] for j in range(cfg.n))
    leftover_degree = sum(g * deg for g, deg in zip(leftover, cfg.degrees))
    required = (r - 1) * (cfg.h - 1) + c - 1
    cert = StarCertificate(
        config=cfg,
        input=v,
        m=m,
        r=r,
        c=c,
        base=base,
        tight_subset=stat.witness,
        leftover=leftover,
        leftover_degree=leftover_degree,
        required_degree=required,
    )
    if not star_verify_certificate(cert):
        raise AlgorithmInvariantError("constructed certificate failed verification")
    return cert


def star_verify_certificate(cert: StarCertificate) -> bool:
    """Re-check every certificate invariant from scratch."""
    try:
        cfg = cert.config
        n, h = cfg.n, cfg.h
        if cert.m < 1 or cert.r < 1 or cert.c < 1:
            return False
        if len(cert.input) != n or len(cert.base) != n or len(cert.leftover) != n:
            return False
        if any(x < 0 for x in cert.input + cert.base + cert.leftover):
            return False
        if any(
            cert.input[j] != cert.r * cert.base[j] + cert.leftover[j]
            for j in range(n)
        ):
            return False
        if h_smallest_sum(cert.base, h).value < cert.m:
            return False
        tight = cert.tight_subset
        if len(tight) != h or len(set(tight)) != h:
            return False
        if any(j < 0 or j >= n for j in tight):
            return False
        if sum(cert.base[j] for j in tight) != cert.m:
            return False
        degree = sum(g * d for g, d in zip(cert.leftover, cfg.degrees))
        if degree != cert.leftover_degree:
            return False
        if cert.required_degree != (cert.r - 1) * (h - 1) + cert.c - 1:
            return False
        return cert.leftover_degree >= cert.required_degree
    except (InvalidInputError, TypeError, ValueError):
        return False
