"""Recovering the full convolution from the dominance oracle."""

import math
import random

from maxconv import (
    check_upper_bound,
    detect_single,
    detect_violations,
    is_superadditive,
    max_conv,
    max_conv_via_upperbound,
    maxconv_values,
    reduce_upperbound_to_superadditivity,
)

from helpers import rand_seq


def test_detect_single_none_when_dominated():
    a, b = [0, 1, 2], [1, 0, 2]
    c = maxconv_values(a, b, 2)
    assert detect_single(a, b, c) is None


def test_detect_single_finds_smallest_index():
    assert detect_single([0, 1], [0, 1], [0, 0]) == 1
    rng = random.Random(4001)
    for _ in range(200):
        n = rng.randint(1, 24)
        a = rand_seq(rng, n, 30)
        b = rand_seq(rng, n, 30)
        c = maxconv_values(a, b, n - 1)
        hits = sorted(rng.sample(range(n), rng.randint(0, min(3, n))))
        for k in hits:
            c[k] -= 1 + rng.randint(0, 4)
        want = hits[0] if hits else None
        assert detect_single(a, b, c) == want


def test_detect_single_oracle_call_budget():
    calls = 0

    def oracle(a, b, c):
        nonlocal calls
        calls += 1
        return check_upper_bound(a, b, c)

    n = 37
    rng = random.Random(4002)
    a = rand_seq(rng, n, 50)
    b = rand_seq(rng, n, 50)
    c = maxconv_values(a, b, n - 1)
    c[20] -= 3
    assert detect_single(a, b, c, oracle) == 20
    assert calls <= math.ceil(math.log2(n)) + 1


def test_detect_violations_slack_and_deficit():
    rng = random.Random(4003)
    a = rand_seq(rng, 12, 20)
    b = rand_seq(rng, 12, 20)
    conv = maxconv_values(a, b, 11)
    none = detect_violations(a, b, [v + 1 for v in conv])
    assert not any(none.violated)
    every = detect_violations(a, b, [v - 1 for v in conv])
    assert all(every.violated)


def test_detect_violations_recovers_planted_subset_seed4004():
    rng = random.Random(4004)
    for _ in range(100):
        n = rng.randint(1, 40)
        a = rand_seq(rng, n, 25)
        b = rand_seq(rng, n, 25)
        c = maxconv_values(a, b, n - 1)
        planted = sorted(rng.sample(range(n), rng.randint(0, n)))
        for k in planted:
            c[k] -= 1 + rng.randint(0, 6)
        keep = list(c)
        report = detect_violations(a, b, c)
        assert [k for k in range(n) if report.violated[k]] == planted
        assert c == keep  # caller's copy is never touched


def test_detect_violations_call_accounting():
    rng = random.Random(4005)
    for _ in range(30):
        n = rng.randint(4, 36)
        a = rand_seq(rng, n, 20)
        b = rand_seq(rng, n, 20)
        c = maxconv_values(a, b, n - 1)
        marks = rng.sample(range(n), rng.randint(0, n // 2))
        for k in marks:
            c[k] -= 1
        report = detect_violations(a, b, c)
        m = math.isqrt(n)
        if m * m < n:
            m += 1
        s = -(-n // m)
        blocks = -(-n // s)
        singles = blocks * blocks + len(marks)
        per_single = math.ceil(math.log2(2 * s)) + 1
        assert report.oracle_calls <= singles * per_single


def test_via_upperbound_trivial_and_small():
    assert max_conv_via_upperbound([0], [0]) == [0]
    assert max_conv_via_upperbound([0, 1], [0, 2]) == [0, 2]


def test_via_upperbound_matches_kernel_seed4006():
    rng = random.Random(4006)
    for _ in range(100):
        n = rng.randint(1, 48)
        a = rand_seq(rng, n, 200)
        b = rand_seq(rng, n, 200)
        assert max_conv_via_upperbound(a, b) == max_conv(a, b, limit=n - 1)


def test_via_upperbound_accepts_reduction_chain_oracle():
    def chained(a, b, c):
        out = reduce_upperbound_to_superadditivity(a, b, c)
        return out.interpret([is_superadditive(out.instances[0])])

    rng = random.Random(4007)
    for _ in range(10):
        n = rng.randint(1, 10)
        a = rand_seq(rng, n, 12)
        b = rand_seq(rng, n, 12)
        assert max_conv_via_upperbound(a, b, chained) == max_conv(a, b, limit=n - 1)
