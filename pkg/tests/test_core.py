import itertools
import random

import pytest

from symcontain.core import (
    InvalidInputError,
    binomial,
    h_smallest_sum,
    integer_nth_root,
)


def test_binomial_examples():
    assert binomial(3, 3) == 1
    assert binomial(8, 3) == 56
    assert binomial(11, 3) == 165
    assert binomial(4, 7) == 0


def test_binomial_big_values_exact():
    # no overflow anywhere near C(10^4, 10^2)
    value = binomial(10 ** 4, 10 ** 2)
    assert value > 10 ** 200
    assert value * binomial(10 ** 4 - 10 ** 2, 1) % 1 == 0


def test_binomial_rejects_negative():
    with pytest.raises(InvalidInputError):
        binomial(-1, 2)
    with pytest.raises(InvalidInputError):
        binomial(3, -2)


def test_binomial_pascal_rule():
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


def brute_h_smallest(v, h):
    return min(
        (sum(v[i] for i in sub), sub)
        for sub in itertools.combinations(range(len(v)), h)
    )


def test_h_smallest_sum_examples():
    assert h_smallest_sum((1, 1, 1, 1), 2).value == 2
    stat = h_smallest_sum((0, 5, 5), 2)
    assert stat.value == 5
    assert stat.witness == (0, 1)
    assert h_smallest_sum((3, 2, 0, 1), 3).value == 3


def test_h_smallest_sum_matches_bruteforce():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 7)
        v = tuple(rng.randint(0, 6) for _ in range(n))
        h = rng.randint(1, n)
        stat = h_smallest_sum(v, h)
        value, witness = brute_h_smallest(v, h)
        assert stat.value == value
        assert stat.witness == witness  # lexicographically smallest tie
        assert sum(v[i] for i in stat.witness) == stat.value


def test_h_smallest_sum_superadditive():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 6)
        h = rng.randint(1, n)
        u = tuple(rng.randint(0, 5) for _ in range(n))
        v = tuple(rng.randint(0, 5) for _ in range(n))
        total = tuple(x + y for x, y in zip(u, v))
        assert (
            h_smallest_sum(total, h).value
            >= h_smallest_sum(u, h).value + h_smallest_sum(v, h).value
        )


def test_h_smallest_sum_invalid():
    with pytest.raises(InvalidInputError):
        h_smallest_sum((1, 2), 3)
    with pytest.raises(InvalidInputError):
        h_smallest_sum((1, -1), 1)


def test_integer_nth_root_examples():
    assert integer_nth_root(64, 3) == 4
    assert integer_nth_root(63, 3) == 3
    assert integer_nth_root(1, 5) == 1


def test_integer_nth_root_brackets():
    rng = random.Random(3)
    cases = [(s, n) for s in range(1, 200) for n in (1, 2, 3, 5)]
    cases += [(rng.randint(1, 10 ** 30), rng.randint(1, 10)) for _ in range(200)]
    for s, n in cases:
        k = integer_nth_root(s, n)
        assert k ** n <= s < (k + 1) ** n
