"""Numeric certifier for the Demailly bound for general points.

For a general set of s points in projective N-space the bound reduces to a
finite chain of exact integer inequalities: a binomial comparison that
controls the Waldschmidt lower bound (lemma24), a regularity bound from
counting monomials (trung_valla), and a linear inequality in r whose
minimal solution makes the containment effective.  This module evaluates
that chain exactly and assembles it into a certificate.  The geometric
conclusion (that the containment on a Zariski-open locus follows) is an
interpretation of the certified inequalities, not something computed here.

Also included: the registry of known values for the Fermat-type ideals
(x(y^n - z^n), y(z^n - x^n), z(x^n - y^n)) and the derived inequality
checks around them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .core import InvalidInputError, binomial, integer_nth_root


class HypothesisError(ValueError):
    """The point count s is below the applicable hypothesis bound."""


class NoThresholdError(RuntimeError):
    """The linear inequality in r has nonpositive slope; no threshold exists."""


def lemma24_check(n_dim: int, m: int, k: int) -> bool:
    """Exact truth of C((k-1)(m+N-1)+N-1, N) >= (k+1)^N * C(m+N-1, N)."""
    if n_dim < 1 or m < 1 or k < 1:
        raise InvalidInputError(f"need N, m, k >= 1, got ({n_dim}, {m}, {k})")
    lhs = binomial((k - 1) * (m + n_dim - 1) + n_dim - 1, n_dim)
    rhs = (k + 1) ** n_dim * binomial(m + n_dim - 1, n_dim)
    return lhs >= rhs


def guaranteed_k(n_dim: int, m: int) -> int:
    """Smallest k from which the binomial inequality is guaranteed to hold.

    N = 3 needs k >= 2m+2; N >= 4 improves to 2m+1, or 2m when m >= 3;
    N >= 5 with m >= 2 also allows 2m.
    """
    if n_dim >= 5 and m >= 2:
        return 2 * m
    if n_dim >= 4:
        return 2 * m if m >= 3 else 2 * m + 1
    return 2 * m + 2


@dataclass(frozen=True)
class SweepRow:
    n_dim: int
    m: int
    k_max_tested: int
    observed_min_k: int
    guaranteed_k: int
    holds_from_guaranteed: bool


@dataclass(frozen=True)
class SweepReport:
    rows: Tuple[SweepRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.holds_from_guaranteed for row in self.rows)


def lemma24_sweep(
    n_range: Iterable[int], m_range: Iterable[int], k_extra_max: int
) -> SweepReport:
    """Scan the binomial inequality over a grid of (N, m).

    For each pair, reports the minimal observed k from which the inequality
    holds for every tested k up to 2m+2+k_extra_max, and whether it holds
    from the guaranteed threshold on.  Only the guaranteed direction is a
    promise; the observed frontier is informative.
    """
    rows = []
    for n_dim in n_range:
        for m in m_range:
            k_max = 2 * m + 2 + k_extra_max
            results = {k: lemma24_check(n_dim, m, k) for k in range(1, k_max + 1)}
            observed = k_max + 1
            for k in range(k_max, 0, -1):
                if results[k]:
                    observed = k
                else:
                    break
            g = guaranteed_k(n_dim, m)
            holds = all(results[k] for k in range(g, k_max + 1))
            rows.append(
                SweepRow(
                    n_dim=n_dim,
                    m=m,
                    k_max_tested=k_max,
                    observed_min_k=observed,
                    guaranteed_k=g,
                    holds_from_guaranteed=holds,
                )
            )
    return SweepReport(rows=tuple(rows))


def trung_valla_w(n_dim: int, m: int, s: int) -> int:
    """Least w with (s-1) * C(m+N-1, N) < C(N+w, N).

    Then m + w bounds the regularity of the m-th symbolic power of the
    ideal of s general points.
    """
    if s < 2:
        raise InvalidInputError(f"need s >= 2, got {s}")
    if n_dim < 1 or m < 1:
        raise InvalidInputError(f"need N, m >= 1, got ({n_dim}, {m})")
    target = (s - 1) * binomial(m + n_dim - 1, n_dim)
    w = 0
    while binomial(n_dim + w, n_dim) <= target:
        w += 1
    return w


@dataclass(frozen=True)
class TraceEntry:
    name: str
    lhs: int
    rhs: int
    holds: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
        }


def containment_inequality(n_dim: int, m: int, k: int, reg_bound: int, r: int) -> Tuple[int, int]:
    """(lhs, rhs) of k(r(m+N-1) - N + 1) >= r(reg_bound + N - 1) at a given r."""
    lhs = k * (r * (m + n_dim - 1) - n_dim + 1)
    rhs = r * (reg_bound + n_dim - 1)
    return lhs, rhs


@dataclass(frozen=True)
class ThresholdResult:
    r_threshold: int
    k: int
    reg_bound: int
    trace: Tuple[TraceEntry, ...]
    hypothesis_met: bool


def containment_threshold(n_dim: int, m: int, s: int) -> ThresholdResult:
    """Minimal r from which the containment inequality holds for all r' >= r.

    With k the integer N-th root of s and R = m + trung_valla_w(N, m, s),
    the inequality k(r(m+N-1)-N+1) >= r(R+N-1) is linear in r; it holds
    eventually iff the slope k(m+N-1) - (R+N-1) is positive, and then the
    threshold is ceil(k(N-1) / slope), clamped to at least 1.

    If s is below the (2m+2)^N hypothesis the result is still computed but
    flagged: it then carries no general-points guarantee.
    """
    if n_dim < 1 or m < 1:
        raise InvalidInputError(f"need N, m >= 1, got ({n_dim}, {m})")
    if s < 2:
        raise InvalidInputError(f"need s >= 2, got {s}")
    k = integer_nth_root(s, n_dim)
    reg_bound = m + trung_valla_w(n_dim, m, s)
    slope = k * (m + n_dim - 1) - (reg_bound + n_dim - 1)
    if slope <= 0:
        raise NoThresholdError(
            f"slope condition fails: k(m+N-1) = {k * (m + n_dim - 1)} <= "
            f"reg_bound+N-1 = {reg_bound + n_dim - 1}"
        )
    r = max(1, -(-(k * (n_dim - 1)) // slope))
    lhs, rhs = containment_inequality(n_dim, m, k, reg_bound, r)
    trace = (
        TraceEntry("saturation_vs_alpha", lhs, r * reg_bound, lhs >= r * reg_bound),
        TraceEntry("regularity_gap", lhs, rhs, lhs >= rhs),
    )
    return ThresholdResult(
        r_threshold=r,
        k=k,
        reg_bound=reg_bound,
        trace=trace,
        hypothesis_met=s >= (2 * m + 2) ** n_dim,
    )


def hypothesis_base(n_dim: int, m: int) -> int:
    """Strongest applicable hypothesis base: s must be at least base**N."""
    if n_dim >= 5 and m >= 2:
        return 2 * m
    if n_dim >= 4:
        return 2 * m if m >= 3 else 2 * m + 1
    return 2 * m + 2


@dataclass(frozen=True)
class GeneralPointsCertificate:
    """Exact inequality chain certifying the Demailly bound for s general points.

    ``demailly_rhs`` is the certified bound (k*m + N - 1) / (m + N - 1)
    that the Waldschmidt constant then dominates; the step from the
    inequalities to the geometric statement is interpretation, recorded in
    the package documentation rather than computed.
    """

    n_dim: int
    m: int
    s: int
    k: int
    w: int
    reg_bound: int
    r_threshold: int
    lemma24_ok: bool
    demailly_rhs: Fraction
    inequality_trace: Tuple[TraceEntry, ...]
    granted: bool

    def to_dict(self) -> dict:
        return {
            "kind": "general-points",
            "N": self.n_dim,
            "m": self.m,
            "s": str(self.s),
            "k": self.k,
            "w": self.w,
            "reg_bound": self.reg_bound,
            "r_threshold": self.r_threshold,
            "lemma24_ok": self.lemma24_ok,
            "trace": [t.to_dict() for t in self.inequality_trace],
            "granted": self.granted,
        }


def certify_demailly_general_points(n_dim: int, m: int, s: int) -> GeneralPointsCertificate:
    """Run the full inequality pipeline for s general points in P^N."""
    if n_dim < 3:
        raise InvalidInputError(f"pipeline needs N >= 3, got {n_dim}")
    if m < 1:
        raise InvalidInputError(f"need m >= 1, got {m}")
    base = hypothesis_base(n_dim, m)
    if s < base ** n_dim:
        raise HypothesisError(f"s below ({base})^N = {base ** n_dim}")
    k = integer_nth_root(s, n_dim)
    w = trung_valla_w(n_dim, m, s)
    lemma24_ok = lemma24_check(n_dim, m, k)
    result = containment_threshold(n_dim, m, s)
    lemma24_lhs = binomial((k - 1) * (m + n_dim - 1) + n_dim - 1, n_dim)
    lemma24_rhs = (k + 1) ** n_dim * binomial(m + n_dim - 1, n_dim)
    trace = result.trace + (
        TraceEntry("binomial_growth", lemma24_lhs, lemma24_rhs, lemma24_ok),
    )
    granted = lemma24_ok and all(t.holds for t in trace)
    return GeneralPointsCertificate(
        n_dim=n_dim,
        m=m,
        s=s,
        k=k,
        w=w,
        reg_bound=m + w,
        r_threshold=result.r_threshold,
        lemma24_ok=lemma24_ok,
        demailly_rhs=Fraction(k * m + n_dim - 1, m + n_dim - 1),
        inequality_trace=trace,
        granted=granted,
    )


def demailly_from_containment(n_dim: int, m: int, alpha_m_lower: int) -> Fraction:
    """Bound (alpha_lower + N - 1) / (m + N - 1) the containment implies."""
    if n_dim < 1 or m < 1 or alpha_m_lower < 0:
        raise InvalidInputError("need N, m >= 1 and a nonnegative alpha bound")
    return Fraction(alpha_m_lower + n_dim - 1, m + n_dim - 1)


@dataclass(frozen=True)
class FermatRecord:
    """Known invariants of the Fermat-type ideal for a given n >= 3.

    Big height 2; Waldschmidt constant n; alpha of the 3k-th symbolic
    power is 3nk; omega of the kn-th symbolic power is k(n+1).
    """

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidInputError(f"need n >= 3, got {self.n}")

    @property
    def big_height(self) -> int:
        return 2

    @property
    def waldschmidt(self) -> int:
        return self.n

    def alpha_triple_power(self, k: int) -> int:
        """alpha of the symbolic power 3k."""
        return 3 * self.n * k

    def omega_multiple_power(self, k: int) -> int:
        """omega of the symbolic power k*n."""
        return k * (self.n + 1)


@dataclass(frozen=True)
class FermatRow:
    k: int
    display_lhs: int
    display_rhs: int
    display_fails: bool  # the naive degree bound must fail: lhs < rhs
    demailly_triple_ok: bool
    demailly_shifted_ok: bool


@dataclass(frozen=True)
class FermatReport:
    record: FermatRecord
    rows: Tuple[FermatRow, ...]

    @property
    def passed(self) -> bool:
        return all(
            row.display_fails and row.demailly_triple_ok and row.demailly_shifted_ok
            for row in self.rows
        )


def fermat_checks(n: int, k_max: int) -> FermatReport:
    """Exact checks around the Fermat-type registry values.

    For each k up to k_max: (i) the naive degree inequality
    3(kn+1)n >= 3 + 3kn(n+1) must fail; (ii) the Demailly bound holds at
    powers 3k: n >= (3nk+1)/(3k+1); (iii) the shifted variant at powers
    3k+2: n >= ((3k+3)n - 1 + 1)/(3k+3).
    """
    record = FermatRecord(n=n)
    if k_max < 1:
        raise InvalidInputError(f"need k_max >= 1, got {k_max}")
    rows = []
    for k in range(1, k_max + 1):
        lhs = 3 * (k * n + 1) * n
        rhs = 3 + 3 * k * n * (n + 1)
        triple_ok = Fraction(n) >= Fraction(3 * n * k + 1, 3 * k + 1)
        alpha_bound = (3 * k + 3) * n - 1
        shifted_ok = Fraction(n) >= Fraction(alpha_bound + 1, 3 * k + 3)
        rows.append(
            FermatRow(
                k=k,
                display_lhs=lhs,
                display_rhs=rhs,
                display_fails=lhs < rhs,
                demailly_triple_ok=triple_ok,
                demailly_shifted_ok=shifted_ok,
            )
        )
    return FermatReport(record=record, rows=tuple(rows))
