import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdgraph import (
    ComponentPair,
    brute_force_c,
    c_of_n,
    order_range_for_count,
    pair_satisfies_inequality,
    parse_order,
    raw_pair_count,
    valid_pairs,
)


def partitions_into_two(n):
    return sum(1 for a in range(1, n) for b in range(a, n) if a + b == n)


def test_raw_pair_count():
    assert raw_pair_count(2) == 1
    assert raw_pair_count(7) == 3
    assert raw_pair_count(100) == 50
    assert raw_pair_count(10**30) == 5 * 10**29
    for n in range(2, 200):
        assert raw_pair_count(n) == partitions_into_two(n)


@pytest.mark.parametrize("n, c", [(10, 3), (1_000_000, 19), (10**30, 99)])
def test_c_of_n_table_values(n, c):
    assert c_of_n(n) == c


def test_brute_force_examples():
    assert brute_force_c(4) == 1
    assert brute_force_c(10) == 3
    assert brute_force_c(2) == 1


def test_brute_force_bound():
    with pytest.raises(ValueError, match="limit"):
        brute_force_c(10**6 + 1)
    assert brute_force_c(10**6 + 1, limit=10**7) == c_of_n(10**6 + 1)


def test_oracle_small_range():
    for n in range(2, 5000):
        assert c_of_n(n) == brute_force_c(n), n


def test_monotone_unit_steps():
    prev = c_of_n(2)
    for n in range(3, 20000):
        cur = c_of_n(n)
        assert cur - prev in (0, 1)
        prev = cur


@pytest.mark.parametrize("alpha", range(2, 61))
def test_boundary_exactness(alpha):
    start = 2**alpha + alpha - 1
    assert c_of_n(start) == alpha
    assert c_of_n(start - 1) == alpha - 1


def test_valid_pairs_examples():
    assert valid_pairs(10) == [ComponentPair(1, 9), ComponentPair(2, 8), ComponentPair(3, 7)]
    assert valid_pairs(4) == [ComponentPair(1, 3)]
    assert valid_pairs(2) == [ComponentPair(1, 1)]


@given(st.integers(2, 10**40))
def test_valid_pairs_valid_and_maximal(n):
    pairs = valid_pairs(n)
    c = c_of_n(n)
    assert len(pairs) == c == min(c, raw_pair_count(n))
    for p in pairs:
        assert p.a + p.b == n and p.a <= p.b
        assert p.b >= 2**p.a - 1
    if c + 1 <= n // 2:
        assert not pair_satisfies_inequality(c + 1, n - c - 1)


@pytest.mark.parametrize("alpha, lo, hi", [(1, 2, 4), (3, 10, 18), (10, 1033, 2057)])
def test_order_range_examples(alpha, lo, hi):
    r = order_range_for_count(alpha)
    assert (r.min_n, r.max_n) == (lo, hi)
    assert r.size == 2**alpha + 1


def test_order_ranges_tile():
    assert order_range_for_count(1).min_n == 2
    for alpha in range(1, 61):
        r = order_range_for_count(alpha)
        assert r.max_n + 1 == order_range_for_count(alpha + 1).min_n
        assert r.size == 2**alpha + 1


@pytest.mark.parametrize("alpha", range(1, 12))
def test_range_membership(alpha):
    r = order_range_for_count(alpha)
    assert all(c_of_n(n) == alpha for n in r)
    assert r.min_n in r and r.max_n + 1 not in r


@pytest.mark.parametrize("bad", [0, 1, -5, "1", "0"])
def test_order_domain(bad):
    for f in (c_of_n, raw_pair_count, valid_pairs, brute_force_c):
        with pytest.raises(ValueError):
            f(bad)


def test_type_errors():
    with pytest.raises(TypeError):
        c_of_n(10.0)
    with pytest.raises(TypeError):
        order_range_for_count(2.0)
    with pytest.raises(ValueError):
        order_range_for_count(0)


def test_parse_order():
    assert parse_order("1_000_000") == 10**6
    assert parse_order("1,000,000,000,000,000,000,000,000,000,000") == 10**30
    assert c_of_n("1,000,000") == 19
    with pytest.raises(ValueError):
        parse_order("1e6")
    with pytest.raises(ValueError):
        parse_order("")
