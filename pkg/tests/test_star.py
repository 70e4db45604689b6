import dataclasses
import itertools
import random
from fractions import Fraction

import pytest

from symcontain.core import InvalidInputError, h_smallest_sum
from symcontain.star import (
    NotAMemberError,
    star_alpha,
    star_certify_containment,
    star_config,
    star_containment_threshold,
    star_member,
    star_verify_certificate,
    star_waldschmidt,
)


def alpha_bruteforce(cfg, k):
    """Independent oracle: exhaustive search over exponent vectors <= k."""
    best = None
    for a in itertools.product(range(k + 1), repeat=cfg.n):
        if h_smallest_sum(a, cfg.h).value >= k:
            cost = sum(x * d for x, d in zip(a, cfg.degrees))
            if best is None or cost < best:
                best = cost
    return best


def solve_square(rows, rhs):
    """Exact Gaussian elimination; returns None for singular systems."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [x / inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def waldschmidt_by_vertex_enumeration(cfg):
    """Independent oracle: enumerate vertices of the membership polyhedron."""
    subsets = list(itertools.combinations(range(cfg.n), cfg.h))
    rows = [
        ([Fraction(1) if j in sub else Fraction(0) for j in range(cfg.n)], Fraction(1))
        for sub in subsets
    ]
    rows += [
        ([Fraction(1) if j == i else Fraction(0) for j in range(cfg.n)], Fraction(0))
        for i in range(cfg.n)
    ]
    best = None
    for chosen in itertools.combinations(range(len(rows)), cfg.n):
        point = solve_square([rows[i][0] for i in chosen], [rows[i][1] for i in chosen])
        if point is None:
            continue
        if any(x < 0 for x in point):
            continue
        if any(sum(point[j] for j in sub) < 1 for sub in subsets):
            continue
        cost = sum(d * x for d, x in zip(cfg.degrees, point))
        if best is None or cost < best:
            best = cost
    return best


def test_member_examples():
    assert star_member(star_config(4, 2), (1, 1, 1, 1), 2) is True
    assert star_member(star_config(3, 2), (0, 5, 5), 6) is False
    assert star_member(star_config(3, 3), (1, 1, 1), 3) is True
    assert star_member(star_config(3, 2), (0, 0, 0), 0) is True


def test_member_invalid_length():
    with pytest.raises(InvalidInputError):
        star_member(star_config(3, 2), (1, 1), 1)


def test_member_monotone_in_k():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 6)
        h = rng.randint(1, n)
        cfg = star_config(n, h)
        a = tuple(rng.randint(0, 5) for _ in range(n))
        k = rng.randint(1, 12)
        if star_member(cfg, a, k):
            assert all(star_member(cfg, a, kk) for kk in range(k + 1))


def test_member_superadditive():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(2, 6)
        h = rng.randint(1, n)
        cfg = star_config(n, h)
        u = tuple(rng.randint(0, 4) for _ in range(n))
        v = tuple(rng.randint(0, 4) for _ in range(n))
        j = h_smallest_sum(u, h).value
        k = h_smallest_sum(v, h).value
        if j >= 1 and k >= 1:
            assert star_member(cfg, tuple(x + y for x, y in zip(u, v)), j + k)


def test_alpha_examples():
    assert star_alpha(star_config(5, 2), 3) == 9
    assert star_alpha(star_config(3, 2), 1) == 2
    assert star_alpha(star_config(3, 3), 5) == 5


def test_alpha_closed_form_vs_bruteforce_uniform():
    for n in range(2, 6):
        for h in range(1, n + 1):
            cfg = star_config(n, h)
            for k in range(1, 5):
                assert star_alpha(cfg, k) == alpha_bruteforce(cfg, k)


def test_alpha_weighted_vs_bruteforce():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(2, 5)
        h = rng.randint(1, n)
        degrees = [rng.randint(1, 4) for _ in range(n)]
        cfg = star_config(n, h, degrees=degrees)
        for k in range(1, 4):
            assert star_alpha(cfg, k) == alpha_bruteforce(cfg, k)


def test_alpha_subadditive():
    for n, h in [(4, 2), (5, 3), (6, 4), (3, 3)]:
        cfg = star_config(n, h)
        for j in range(1, 11):
            for k in range(1, 11):
                assert star_alpha(cfg, j + k) <= star_alpha(cfg, j) + star_alpha(cfg, k)


def test_waldschmidt_examples():
    assert star_waldschmidt(star_config(4, 2)) == Fraction(2)
    assert star_waldschmidt(star_config(3, 3)) == Fraction(1)
    assert star_waldschmidt(star_config(5, 2)) == Fraction(5, 2)


def test_waldschmidt_uniform_closed_form():
    for n in range(2, 8):
        for h in range(1, n + 1):
            assert star_waldschmidt(star_config(n, h)) == Fraction(n, h)


def test_waldschmidt_matches_vertex_enumeration():
    rng = random.Random(31)
    cfgs = [star_config(4, 2), star_config(5, 3), star_config(3, 2)]
    for _ in range(5):
        n = rng.randint(2, 5)
        h = rng.randint(1, n)
        cfgs.append(star_config(n, h, degrees=[rng.randint(1, 3) for _ in range(n)]))
    for cfg in cfgs:
        assert star_waldschmidt(cfg) == waldschmidt_by_vertex_enumeration(cfg)


def test_waldschmidt_lower_bounds_alpha_quotients():
    for cfg in [star_config(4, 2), star_config(5, 3), star_config(6, 4),
                star_config(3, 2, degrees=[1, 2, 3])]:
        wald = star_waldschmidt(cfg)
        for k in range(1, 21):
            assert wald <= Fraction(star_alpha(cfg, k), k)


def test_certify_trivial_case():
    cfg = star_config(3, 2)
    cert = star_certify_containment(cfg, (1, 1, 0), m=1, r=1, c=1)
    assert star_verify_certificate(cert)
    assert cert.required_degree == 0
    assert sum(cert.base[j] for j in cert.tight_subset) == 1


def test_certify_documented_reduction():
    cfg = star_config(4, 2)
    cert = star_certify_containment(cfg, (3, 3, 3, 3), m=1, r=2, c=2)
    assert star_verify_certificate(cert)
    assert cert.required_degree == 2
    assert cert.leftover_degree >= 2
    assert sum(cert.base) <= 5
    assert sum(cert.base[j] for j in cert.tight_subset) == 1
    assert all(cert.input[j] == 2 * cert.base[j] + cert.leftover[j] for j in range(4))


def test_certify_not_a_member():
    cfg = star_config(3, 3)
    # threshold 2(2+3-1)-3+3 = 8 > total sum 6
    with pytest.raises(NotAMemberError):
        star_certify_containment(cfg, (2, 2, 2), m=2, r=2, c=3)


def test_certify_deterministic():
    cfg = star_config(5, 3)
    a = (4, 1, 3, 2, 5)
    c1 = star_certify_containment(cfg, a, m=2, r=2, c=1)
    c2 = star_certify_containment(cfg, a, m=2, r=2, c=1)
    assert c1 == c2


def test_verify_rejects_tampering():
    cfg = star_config(4, 2)
    cert = star_certify_containment(cfg, (3, 3, 3, 3), m=1, r=2, c=2)
    assert star_verify_certificate(cert)
    bad = dataclasses.replace(cert, leftover_degree=cert.required_degree - 1)
    assert not star_verify_certificate(bad)
    # tight subset summing to m+1
    worse = dataclasses.replace(
        cert, base=tuple(b + 1 for b in cert.base)
    )
    assert not star_verify_certificate(worse)
    # broken decomposition
    broken = dataclasses.replace(cert, input=tuple(x + 1 for x in cert.input))
    assert not star_verify_certificate(broken)


def test_els_containment_small_grid():
    # members of the power t(h+k) certify with m=k+1, r=t, c=h
    rng = random.Random(17)
    for n in range(2, 7):
        for h in range(1, min(n, 4) + 1):
            cfg = star_config(n, h)
            for t in range(1, 5):
                for k in range(0, 5):
                    threshold = t * (h + k)
                    assert threshold == star_containment_threshold(h, k + 1, t, h)
                    for _ in range(3):
                        a = [rng.randint(0, threshold + 2) for _ in range(n)]
                        while h_smallest_sum(a, h).value < threshold:
                            a[min(range(n), key=lambda i: a[i])] += 1
                        cert = star_certify_containment(cfg, a, m=k + 1, r=t, c=h)
                        assert star_verify_certificate(cert)


def test_demailly_like_bound_uniform():
    for n in range(2, 8):
        for h in range(1, min(n, 4) + 1):
            cfg = star_config(n, h)
            for m in range(1, 13):
                rhs = Fraction(star_alpha(cfg, m) + h - 1, m + h - 1)
                for np in range(1, 13):
                    assert Fraction(star_alpha(cfg, np), np) >= rhs
