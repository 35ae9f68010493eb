"""Full max-plus convolution recovered from a yes/no dominance oracle.

The oracle answers "does c dominate the convolution of a and b?".  A
prefix binary search locates the smallest violated output index; splitting
the index range into roughly sqrt(n) intervals and masking found indices
with a huge constant turns that into a scan reporting every violated
index; finally a per-coordinate binary search on candidate values
converges to the exact convolution.  With the quadratic oracle this is a
correctness construction, not a speedup, and the module is written for
auditability rather than pace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .core import Decision, Sequence, SequenceLike, as_values, check_upper_bound

UpperBoundOracle = Callable[[list, list, list], Decision]


@dataclass(frozen=True)
class ViolationReport:
    """violated[k] is True iff c[k] < max_{i+j=k} (a[i] + b[j]) at call time.

    ``oracle_calls`` counts decision-oracle invocations, for the accounting
    checks in the tests.
    """

    violated: tuple[bool, ...]
    oracle_calls: int


def detect_single(
    a: SequenceLike,
    b: SequenceLike,
    c: SequenceLike,
    upper_bound_oracle: UpperBoundOracle = check_upper_bound,
) -> int | None:
    """Smallest output index carrying a violation, or None if c dominates.

    Binary search over the prefix length p: the p-element prefixes of all
    three sequences contain a violation iff the smallest violated index is
    below p.  Uses at most ceil(log2 n) + 1 oracle calls.
    """
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = len(av)
    if len(bv) != n or len(cv) != n:
        raise ValueError("sequences must have equal lengths")

    def holds(p: int) -> bool:
        return bool(upper_bound_oracle(av[:p], bv[:p], cv[:p]))

    if holds(n):
        return None
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid + 1
        else:
            hi = mid
    return hi - 1


def detect_violations(
    a: SequenceLike,
    b: SequenceLike,
    c: SequenceLike,
    upper_bound_oracle: UpperBoundOracle = check_upper_bound,
) -> ViolationReport:
    """Report every violated output index, each exactly once.

    The index range is cut into ceil(sqrt(n)) intervals.  For every
    interval pair the subproblem is translated to local coordinates (the
    relevant c window spans two intervals) and detect_single is repeated;
    each hit is masked in a working copy of c with K, a constant exceeding
    all feasible sums, so it can never be reported again.  Out-of-range c
    entries read as K; a/b padding uses -K and therefore never violates.
    The caller's c is left untouched.
    """
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = len(av)
    if len(bv) != n or len(cv) != n:
        raise ValueError("sequences must have equal lengths")
    w = max(1, max(max(abs(v) for v in vals) for vals in (av, bv, cv)))
    mask = 2 * n * w + 1
    pad = -mask
    m = math.isqrt(n)
    if m * m < n:
        m += 1
    s = -(-n // m)
    blocks = -(-n // s)
    cw = list(cv)
    violated = [False] * n
    calls = 0

    def oracle(xa: list, xb: list, xc: list) -> Decision:
        nonlocal calls
        calls += 1
        return upper_bound_oracle(xa, xb, xc)

    for x in range(blocks):
        ax = av[x * s : (x + 1) * s]
        a_loc = ax + [pad] * (2 * s - len(ax))
        for y in range(blocks):
            by = bv[y * s : (y + 1) * s]
            b_loc = by + [pad] * (2 * s - len(by))
            base = (x + y) * s
            while True:
                c_loc = [
                    cw[base + t] if base + t < n else mask for t in range(2 * s)
                ]
                k = detect_single(a_loc, b_loc, c_loc, oracle)
                if k is None:
                    break
                g = base + k
                assert g < n and not violated[g]
                violated[g] = True
                cw[g] = mask
    return ViolationReport(tuple(violated), calls)


def max_conv_via_upperbound(
    a: SequenceLike,
    b: SequenceLike,
    upper_bound_oracle: UpperBoundOracle = check_upper_bound,
) -> Sequence:
    """Equal-length max-plus convolution using only the decision oracle.

    Keeps per-index bounds lo..hi on the answer; each round probes the
    midpoints, marks the violated coordinates, and halves every interval,
    finishing within ceil(log2(value range)) + 1 rounds.
    """
    av, bv = as_values(a), as_values(b)
    n = len(av)
    if len(bv) != n:
        raise ValueError("sequences must have equal lengths")
    lo = [min(av) + min(bv)] * n
    hi = [max(av) + max(bv)] * n
    while any(l < h for l, h in zip(lo, hi)):
        cand = [(l + h) // 2 for l, h in zip(lo, hi)]
        report = detect_violations(av, bv, cand, upper_bound_oracle)
        for k in range(n):
            if report.violated[k]:
                lo[k] = cand[k] + 1
            else:
                hi[k] = cand[k]
    return Sequence(lo)
