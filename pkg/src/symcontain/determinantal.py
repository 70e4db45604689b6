"""Symbolic-power engine for determinantal and pfaffian ideals.

Generic, symmetric, and pfaffian determinantal ideals all admit the same
combinatorial description of their symbolic powers: a product of minors
(or pfaffians) of sizes s_1, ..., s_u lies in the k-th symbolic power of
the ideal of t-minors exactly when

    sum_i max(0, s_i - t + 1) >= k.

Everything here is bookkeeping on the multiset of sizes: the gamma
function above, alpha and omega of symbolic powers, and containment
certificates that decompose a product into r groups witnessing membership
in m^budget * (I^(m))^r.  Minors are never materialized as polynomials.

The combinatorial description is stated over an arbitrary field; possible
positive-characteristic subtleties of that description are assumed away
here, as the calculus is modeled exactly as stated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .core import InvalidInputError, binomial
from .star import AlgorithmInvariantError, NotAMemberError

GENERIC = "generic"
SYMMETRIC = "symmetric"
PFAFFIAN = "pfaffian"
FLAVORS = (GENERIC, SYMMETRIC, PFAFFIAN)

MODE_THEOREM34 = "theorem34"
MODE_REMARK35 = "remark35"
MODES = (MODE_THEOREM34, MODE_REMARK35)


class FeasibilityError(ValueError):
    """The flavor-specific feasibility inequality fails for these parameters."""


@dataclass(frozen=True)
class MatrixShape:
    """A matrix flavor together with the minor size t.

    generic:   p x q matrix of indeterminates (normalized so p >= q),
               t-minors, height (p-t+1)(q-t+1), max size q.
    symmetric: p x p symmetric matrix, t-minors, height C(p-t+2, 2),
               max size p.
    pfaffian:  p x p skew-symmetric matrix, 2t-pfaffians; sizes count the
               half-order s of a 2s-pfaffian, so the max size is floor(p/2)
               and a size-s pfaffian has polynomial degree s.  Height is
               C(p-2t+2, 2).
    """

    flavor: str
    t: int
    p: int
    q: Optional[int] = None

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise InvalidInputError(f"unknown flavor {self.flavor!r}")
        if self.t < 1 or self.p < 1:
            raise InvalidInputError(f"need t, p >= 1, got t={self.t}, p={self.p}")
        if self.flavor == GENERIC:
            if self.q is None or self.q < 1:
                raise InvalidInputError("generic shape needs q >= 1")
            if self.p < self.q:
                raise InvalidInputError("generic shape must be normalized to p >= q")
            if self.t > self.q:
                raise InvalidInputError(f"need t <= min(p, q) = {self.q}")
        else:
            if self.q is not None:
                raise InvalidInputError(f"{self.flavor} shape takes no q")
            if self.flavor == SYMMETRIC and self.t > self.p:
                raise InvalidInputError(f"need t <= p = {self.p}")
            if self.flavor == PFAFFIAN and 2 * self.t > self.p:
                raise InvalidInputError(f"need 2t <= p = {self.p}")

    @property
    def height(self) -> int:
        if self.flavor == GENERIC:
            assert self.q is not None
            return (self.p - self.t + 1) * (self.q - self.t + 1)
        if self.flavor == SYMMETRIC:
            return binomial(self.p - self.t + 2, 2)
        return binomial(self.p - 2 * self.t + 2, 2)

    @property
    def max_size(self) -> int:
        if self.flavor == GENERIC:
            assert self.q is not None
            return self.q
        if self.flavor == SYMMETRIC:
            return self.p
        return self.p // 2

    def contribution(self, s: int) -> int:
        """How much a size-s factor adds toward a symbolic power."""
        return max(0, s - self.t + 1)

    def degree(self, s: int) -> int:
        """Polynomial degree of a size-s factor (equals s for all flavors)."""
        return s

    def to_dict(self) -> dict:
        doc = {"flavor": self.flavor, "p": self.p, "t": self.t}
        if self.q is not None:
            doc["q"] = self.q
        return doc


def generic_shape(p: int, q: int, t: int) -> MatrixShape:
    """Generic p x q shape; transposes to enforce p >= q."""
    if p < q:
        p, q = q, p
    return MatrixShape(flavor=GENERIC, t=t, p=p, q=q)


def symmetric_shape(p: int, t: int) -> MatrixShape:
    return MatrixShape(flavor=SYMMETRIC, t=t, p=p)


def pfaffian_shape(p: int, t: int) -> MatrixShape:
    return MatrixShape(flavor=PFAFFIAN, t=t, p=p)


def shape_from_dict(doc: dict) -> MatrixShape:
    flavor = doc["flavor"]
    if flavor == GENERIC:
        return generic_shape(int(doc["p"]), int(doc["q"]), int(doc["t"]))
    if flavor == SYMMETRIC:
        return symmetric_shape(int(doc["p"]), int(doc["t"]))
    if flavor == PFAFFIAN:
        return pfaffian_shape(int(doc["p"]), int(doc["t"]))
    raise InvalidInputError(f"unknown flavor {flavor!r}")


@dataclass(frozen=True)
class SizeMultiset:
    """Multiset of factor sizes, sorted descending.

    Sizes below t never affect membership, so they are dropped at
    construction; a retained size must not exceed the shape's max size.
    """

    sizes: Tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)


def size_multiset(shape: MatrixShape, sizes: Sequence[int]) -> SizeMultiset:
    kept = []
    for s in sizes:
        s = int(s)
        if s < 1 or s > shape.max_size:
            raise InvalidInputError(
                f"size {s} out of range [1, {shape.max_size}] for {shape.flavor}"
            )
        if s >= shape.t:
            kept.append(s)
    return SizeMultiset(sizes=tuple(sorted(kept, reverse=True)))


def gamma(shape: MatrixShape, sizes: SizeMultiset | Sequence[int]) -> int:
    """Total symbolic-power contribution of a product of factors."""
    ms = sizes if isinstance(sizes, SizeMultiset) else size_multiset(shape, sizes)
    return sum(shape.contribution(s) for s in ms.sizes)


def det_member(shape: MatrixShape, sizes: SizeMultiset | Sequence[int], k: int) -> bool:
    """Is the product of factors of the given sizes in the k-th symbolic power?"""
    if k < 0:
        raise InvalidInputError(f"power must be nonnegative, got {k}")
    return gamma(shape, sizes) >= k


def det_alpha(shape: MatrixShape, k: int) -> int:
    """Least degree in the k-th symbolic power.

    The cheapest way to accumulate contribution is with factors of maximal
    size M, each costing M in degree and contributing M - t + 1; the
    remainder is topped off with one smaller factor, giving the closed form
    k + (t-1) * ceil(k / (M-t+1)).
    """
    if k < 1:
        raise InvalidInputError(f"power must be >= 1, got {k}")
    span = shape.max_size - shape.t + 1
    return k + (shape.t - 1) * (-(-k // span))


def _size_tuples(shape: MatrixShape, max_len: int) -> Iterator[Tuple[int, ...]]:
    """Nonincreasing tuples of sizes in [t, max_size], at most max_len long."""

    def rec(max_part: int, slots: int, prefix: List[int]):
        yield tuple(prefix)
        if slots == 0:
            return
        for s in range(max_part, shape.t - 1, -1):
            prefix.append(s)
            yield from rec(s, slots - 1, prefix)
            prefix.pop()

    yield from rec(shape.max_size, max_len, [])


def det_omega(shape: MatrixShape, m: int) -> int:
    """Maximal generating degree of the m-th symbolic power.

    Enumerates irredundant size multisets: gamma >= m, removing any factor
    drops gamma below m, and shrinking any factor of size > t by one does
    too.  Any irredundant multiset has at most m factors (each contributes
    at least one), so the enumeration is bounded.
    """
    if m < 1:
        raise InvalidInputError(f"power must be >= 1, got {m}")
    best = 0
    for sizes in _size_tuples(shape, m):
        if not sizes:
            continue
        g = sum(shape.contribution(s) for s in sizes)
        if g < m:
            continue
        if any(g - shape.contribution(s) >= m for s in sizes):
            continue
        if any(s > shape.t for s in sizes) and g - 1 >= m:
            continue
        best = max(best, sum(sizes))
    return best


@dataclass(frozen=True)
class GroupRecord:
    """One factor of the (I^(m))^r part of a decomposition.

    ``members`` are indices into the certified multiset.  ``shrink``, when
    present, is a pair (index, amount): that member is rewritten as a
    combination of smaller factors, reducing its contribution by ``amount``
    and adding ``amount`` to the maximal-ideal budget.
    """

    members: Tuple[int, ...]
    shrink: Optional[Tuple[int, int]] = None

    def to_dict(self) -> dict:
        doc: dict = {"members": list(self.members)}
        if self.shrink is not None:
            doc["shrink"] = {"index": self.shrink[0], "amount": self.shrink[1]}
        return doc


@dataclass(frozen=True)
class DetCertificate:
    """Witness that the product lies in m^required_budget * (I^(m))^r."""

    shape: MatrixShape
    sizes: Tuple[int, ...]
    m: int
    r: int
    c: Optional[int]
    mode: str
    groups: Tuple[GroupRecord, ...]
    leftover_indices: Tuple[int, ...]
    madic_budget: int
    required_budget: int

    def to_dict(self) -> dict:
        doc = {
            "kind": "det-containment",
            "shape": self.shape.to_dict(),
            "mode": self.mode,
            "sizes": list(self.sizes),
            "m": self.m,
            "r": self.r,
        }
        if self.c is not None:
            doc["c"] = self.c
        doc.update(
            {
                "groups": [g.to_dict() for g in self.groups],
                "leftover": list(self.leftover_indices),
                "madic_budget": self.madic_budget,
                "required_budget": self.required_budget,
                "verified": det_verify_certificate(self),
            }
        )
        return doc


def det_certificate_from_dict(doc: dict) -> DetCertificate:
    """Rebuild a certificate from its JSON form (inverse of ``to_dict``)."""
    groups = []
    for g in doc["groups"]:
        shrink = None
        if g.get("shrink") is not None:
            shrink = (int(g["shrink"]["index"]), int(g["shrink"]["amount"]))
        groups.append(GroupRecord(members=tuple(int(i) for i in g["members"]), shrink=shrink))
    return DetCertificate(
        shape=shape_from_dict(doc["shape"]),
        sizes=tuple(int(s) for s in doc["sizes"]),
        m=int(doc["m"]),
        r=int(doc["r"]),
        c=int(doc["c"]) if "c" in doc and doc["c"] is not None else None,
        mode=doc["mode"],
        groups=tuple(groups),
        leftover_indices=tuple(int(i) for i in doc["leftover"]),
        madic_budget=int(doc["madic_budget"]),
        required_budget=int(doc["required_budget"]),
    )


def det_containment_threshold(shape: MatrixShape, m: int, r: int, c: Optional[int], mode: str) -> int:
    h = shape.height
    if mode == MODE_THEOREM34:
        return r * (h + m - 1)
    assert c is not None
    return r * (m + h - 1) - h + c


def det_required_budget(shape: MatrixShape, r: int, c: Optional[int], mode: str) -> int:
    h = shape.height
    if mode == MODE_THEOREM34:
        return r * (h - 1)
    assert c is not None
    return (r - 1) * (h - 1) + c - 1


def _assert_feasible(shape: MatrixShape, r: int, c: int) -> None:
    """Feasibility inequalities guaranteeing the greedy selection fits.

    Only relevant in remark35 mode with r >= 2; the theorem34 thresholds
    always leave enough contribution for the greedy.
    """
    if shape.flavor == GENERIC:
        assert shape.q is not None
        big_p = shape.p - shape.t + 1
        big_q = shape.q - shape.t + 1
        if big_p * big_q * (r - 1) - r * big_q + c < 0:
            raise FeasibilityError(
                f"generic feasibility PQ(r-1) - rQ + c >= 0 fails: "
                f"P={big_p}, Q={big_q}, r={r}, c={c}"
            )
    elif shape.flavor == SYMMETRIC:
        big_p = shape.p - shape.t + 1
        h = shape.height
        if r * (h - big_p) - h + c < 0:
            raise FeasibilityError(
                f"symmetric feasibility r(h-P) - h + c >= 0 fails: "
                f"P={big_p}, h={h}, r={r}, c={c}"
            )
    else:
        big_p = shape.p - 2 * shape.t
        if r * big_p * (big_p + 2) + 2 * c < (big_p + 1) * (big_p + 2):
            raise FeasibilityError(
                f"pfaffian feasibility rP(P+2) + 2c >= (P+1)(P+2) fails: "
                f"P={big_p}, r={r}, c={c}"
            )


def _greedy_groups(
    shape: MatrixShape, sizes: Tuple[int, ...], m: int, r: int
) -> Tuple[List[GroupRecord], List[int]]:
    """Form r groups each reaching contribution exactly m, largest factor first.

    If a group overshoots, its last factor is shrunk by the overshoot; the
    greedy order guarantees the shrunk size stays at least t.
    """
    available = list(range(len(sizes)))  # sizes are sorted descending
    groups: List[GroupRecord] = []
    for _ in range(r):
        acc = 0
        members: List[int] = []
        shrink: Optional[Tuple[int, int]] = None
        while acc < m:
            if not available:
                raise FeasibilityError(
                    "ran out of factors while forming a group (infeasible input)"
                )
            idx = available.pop(0)
            members.append(idx)
            acc += shape.contribution(sizes[idx])
            if acc > m:
                k = acc - m
                if sizes[idx] - k < shape.t:
                    raise AlgorithmInvariantError(
                        f"greedy shrink would drop size {sizes[idx]} below t by {k}"
                    )
                shrink = (idx, k)
                acc = m
        groups.append(GroupRecord(members=tuple(members), shrink=shrink))
    return groups, available


def _symmetric_special_groups(
    shape: MatrixShape, sizes: Tuple[int, ...], m: int
) -> Tuple[List[GroupRecord], List[int]]:
    """Dedicated construction for symmetric shapes with p = t + 1 and r = 2.

    Every factor is a t-minor (contribution 1) or a (t+1)-minor
    (contribution 2).  With a of the latter and b of the former satisfying
    2a + b >= 2m + c, each group picks a_i full (t+1)-minors and b_i
    t-minors with 2*a_i + b_i = m; when the t-minors run out, up to two
    (t+1)-minors are converted into shrunk t-minors (shrink amount 1).
    """
    t = shape.t
    big = [i for i, s in enumerate(sizes) if s == t + 1]
    small = [i for i, s in enumerate(sizes) if s == t]
    groups: List[GroupRecord] = []
    for _ in range(2):
        need = m
        members: List[int] = []
        shrink: Optional[Tuple[int, int]] = None
        take_big = min(len(big), need // 2)
        for _ in range(take_big):
            members.append(big.pop(0))
        need -= 2 * take_big
        while need >= 1 and small:
            members.append(small.pop(0))
            need -= 1
        if need >= 1:
            # t-minors exhausted: convert a (t+1)-minor into a shrunk t-minor.
            if not big or need > 1:
                raise FeasibilityError(
                    "symmetric special case ran out of factors (infeasible input)"
                )
            idx = big.pop(0)
            members.append(idx)
            shrink = (idx, 1)
            need = 0
        groups.append(GroupRecord(members=tuple(members), shrink=shrink))
    leftover = sorted(big + small)
    return groups, leftover


def det_certify_containment(
    shape: MatrixShape,
    sizes: SizeMultiset | Sequence[int],
    m: int,
    r: int,
    c: Optional[int] = None,
    mode: str = MODE_THEOREM34,
) -> DetCertificate:
    """Decompose a product of factors into r groups plus a budget leftover.

    theorem34 mode certifies members of the symbolic power r(h+m-1) into
    m^(r(h-1)) (I^(m))^r; remark35 mode certifies members of the power
    r(m+h-1)-h+c into m^((r-1)(h-1)+c-1) (I^(m))^r.
    """
    if mode not in MODES:
        raise InvalidInputError(f"unknown mode {mode!r}")
    if m < 1 or r < 1:
        raise InvalidInputError(f"need m, r >= 1, got ({m}, {r})")
    if mode == MODE_REMARK35:
        if c is None or c < 1:
            raise InvalidInputError("remark35 mode needs c >= 1")
    else:
        c = None
    ms = sizes if isinstance(sizes, SizeMultiset) else size_multiset(shape, sizes)
    threshold = det_containment_threshold(shape, m, r, c, mode)
    if gamma(shape, ms) < threshold:
        raise NotAMemberError(
            f"gamma = {gamma(shape, ms)} < required symbolic power {threshold}"
        )

    special = (
        mode == MODE_REMARK35
        and shape.flavor == SYMMETRIC
        and r == 2
        and shape.p == shape.t + 1
    )
    if mode == MODE_REMARK35 and r >= 2 and not special:
        _assert_feasible(shape, r, c)  # type: ignore[arg-type]

    if special:
        groups, leftover = _symmetric_special_groups(shape, ms.sizes, m)
    else:
        groups, leftover = _greedy_groups(shape, ms.sizes, m, r)

    budget = sum(g.shrink[1] for g in groups if g.shrink is not None)
    budget += sum(shape.degree(ms.sizes[i]) for i in leftover)
    required = det_required_budget(shape, r, c, mode)
    cert = DetCertificate(
        shape=shape,
        sizes=ms.sizes,
        m=m,
        r=r,
        c=c,
        mode=mode,
        groups=tuple(groups),
        leftover_indices=tuple(leftover),
        madic_budget=budget,
        required_budget=required,
    )
    if not det_verify_certificate(cert):
        raise AlgorithmInvariantError("constructed certificate failed verification")
    return cert


def det_verify_certificate(cert: DetCertificate) -> bool:
    """Re-check every certificate invariant from scratch."""
    try:
        shape = cert.shape
        if cert.mode not in MODES:
            return False
        if cert.m < 1 or cert.r < 1 or len(cert.groups) != cert.r:
            return False
        if cert.mode == MODE_REMARK35 and (cert.c is None or cert.c < 1):
            return False
        n = len(cert.sizes)
        if any(s < shape.t or s > shape.max_size for s in cert.sizes):
            return False
        seen: List[int] = []
        for g in cert.groups:
            seen.extend(g.members)
        seen.extend(cert.leftover_indices)
        if sorted(seen) != list(range(n)):
            return False
        budget = 0
        for g in cert.groups:
            contrib = sum(shape.contribution(cert.sizes[i]) for i in g.members)
            if g.shrink is not None:
                idx, k = g.shrink
                if idx not in g.members:
                    return False
                if k < 1 or k > shape.max_size - shape.t:
                    return False
                if cert.sizes[idx] - k < shape.t:
                    return False
                contrib -= k
                budget += k
            if contrib < cert.m:
                return False
        budget += sum(shape.degree(cert.sizes[i]) for i in cert.leftover_indices)
        if budget != cert.madic_budget:
            return False
        if cert.required_budget != det_required_budget(shape, cert.r, cert.c, cert.mode):
            return False
        return cert.madic_budget >= cert.required_budget
    except (InvalidInputError, TypeError, ValueError):
        return False


@dataclass(frozen=True)
class DemaillyRow:
    n: int
    lhs: Fraction
    rhs: Fraction
    ok: bool


@dataclass(frozen=True)
class DemaillyReport:
    shape: MatrixShape
    m: int
    rows: Tuple[DemaillyRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)


def det_demailly_check(shape: MatrixShape, m: int, n_max: int) -> DemaillyReport:
    """Exact check of alpha(I^(n))/n >= (alpha(I^(m)) + h - 1)/(m + h - 1)."""
    if m < 1 or n_max < 1:
        raise InvalidInputError(f"need m, n_max >= 1, got ({m}, {n_max})")
    h = shape.height
    rhs = Fraction(det_alpha(shape, m) + h - 1, m + h - 1)
    rows = []
    for n in range(1, n_max + 1):
        lhs = Fraction(det_alpha(shape, n), n)
        rows.append(DemaillyRow(n=n, lhs=lhs, rhs=rhs, ok=lhs >= rhs))
    return DemaillyReport(shape=shape, m=m, rows=tuple(rows))
