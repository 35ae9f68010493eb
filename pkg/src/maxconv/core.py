"""Integer sequences and exact (max,+)/(min,+) convolution kernels.

The product ``c[k] = max_{i+j=k} (a[i] + b[j])`` is the primitive every
other module builds on.  Kernels operate on raw integer lists, are
registered by name so alternatives can be swapped in, and must agree
exactly with the plain quadratic enumeration (the test suite enforces
this, it is never assumed).  This module also hosts the decision
predicates of the problem family: dominance checks against a candidate
output sequence and the self-dominance (superadditivity) test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np

WORD_MAX = 2**63 - 1

# Worst value growth any construction in this package produces is
# n * W * L^2 with L = 10 plus block offsets; 400 covers all of it.
_HEADROOM = 400

# Below this many candidate cells the plain Python loop beats numpy call
# overhead; both code paths run the identical enumeration.
_VECTOR_CUTOFF = 2048


class Sequence:
    """Immutable, non-empty sequence of bounded signed integers.

    Construction rejects inputs whose documented worst-case blowup
    (n * max|a[i]| * 400) would leave the 64-bit word, so downstream
    arithmetic stays exact without per-operation checks.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = []
        for v in values:
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise TypeError(f"sequence values must be integers, got {v!r}")
            vals.append(int(v))
        if not vals:
            raise ValueError("sequences must be non-empty")
        bound = max(1, max(abs(v) for v in vals))
        if len(vals) * bound * _HEADROOM > WORD_MAX:
            raise ValueError(
                "sequence rejected: n * max|value| * 400 exceeds the 64-bit word"
            )
        self.values: tuple[int, ...] = tuple(vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, idx):
        return self.values[idx]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if isinstance(other, Sequence):
            return self.values == other.values
        if isinstance(other, (list, tuple)):
            return list(self.values) == list(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Sequence({list(self.values)!r})"

    @property
    def max_abs(self) -> int:
        return max(abs(v) for v in self.values)

    def negate(self) -> "Sequence":
        return Sequence([-v for v in self.values])

    def tolist(self) -> list[int]:
        return list(self.values)


SequenceLike = Union[Sequence, Iterable[int]]


def as_values(seq: SequenceLike) -> list[int]:
    """Coerce to a validated list of ints (runs Sequence construction checks)."""
    if isinstance(seq, Sequence):
        return list(seq.values)
    return list(Sequence(seq).values)


@dataclass(frozen=True)
class MaxConvInstance:
    """A convolution request: two operands plus an optional output cutoff."""

    a: Sequence
    b: Sequence
    limit: int | None = None


# ---------------------------------------------------------------------------
# kernels


Kernel = Callable[[list, list, int], list]


def _guard_sums(a: list, b: list) -> None:
    # Hard error on overflow, never a silent wrap.
    if max(a) + max(b) > WORD_MAX or min(a) + min(b) < -(WORD_MAX + 1):
        raise OverflowError("convolution sums leave the 64-bit word")


def _maxconv_plain(a: list, b: list, limit: int) -> list:
    la, lb = len(a), len(b)
    out = []
    for k in range(limit + 1):
        i0 = k - lb + 1
        if i0 < 0:
            i0 = 0
        i1 = k if k < la else la - 1
        best = a[i0] + b[k - i0]
        for i in range(i0 + 1, i1 + 1):
            s = a[i] + b[k - i]
            if s > best:
                best = s
        out.append(best)
    return out


def maxconv_python_kernel(a: list, b: list, limit: int) -> list:
    """Plain quadratic enumeration in Python integers."""
    _guard_sums(a, b)
    return _maxconv_plain(a, b, limit)


def maxconv_numpy_kernel(a: list, b: list, limit: int) -> list:
    """The same quadratic enumeration, vectorised one row at a time."""
    _guard_sums(a, b)
    if len(a) > len(b):
        a, b = b, a
    if len(a) * (limit + 1) <= _VECTOR_CUTOFF:
        return _maxconv_plain(a, b, limit)
    av = np.asarray(a, dtype=np.int64)
    bv = np.asarray(b, dtype=np.int64)
    out = np.full(limit + 1, np.iinfo(np.int64).min, dtype=np.int64)
    for i in range(min(len(a), limit + 1)):
        top = min(limit, i + len(b) - 1)
        seg = out[i : top + 1]
        np.maximum(seg, bv[: top - i + 1] + av[i], out=seg)
    return out.tolist()


KERNELS: dict[str, Kernel] = {
    "naive": maxconv_numpy_kernel,
    "python": maxconv_python_kernel,
}

DEFAULT_KERNEL = "naive"


def resolve_kernel(kernel: str | Kernel | None = None) -> Kernel:
    if kernel is None:
        kernel = DEFAULT_KERNEL
    if callable(kernel):
        return kernel
    try:
        return KERNELS[kernel]
    except KeyError:
        raise ValueError(f"unknown kernel {kernel!r}; available: {sorted(KERNELS)}")


def maxconv_values(
    a: list, b: list, limit: int | None = None, kernel: str | Kernel | None = None
) -> list:
    """(max,+)-convolution of raw integer lists, truncated at index ``limit``."""
    if not a or not b:
        raise ValueError("convolution operands must be non-empty")
    full = len(a) + len(b) - 2
    hi = full if limit is None else min(limit, full)
    if hi < 0:
        raise ValueError("limit must be non-negative")
    if not isinstance(a, list):
        a = list(a)
    if not isinstance(b, list):
        b = list(b)
    return resolve_kernel(kernel)(a, b, hi)


def max_conv(
    a: SequenceLike,
    b: SequenceLike,
    limit: int | None = None,
    kernel: str | Kernel | None = None,
) -> Sequence:
    """Max-plus convolution; output index k runs over 0..min(limit, len(a)+len(b)-2)."""
    return Sequence(maxconv_values(as_values(a), as_values(b), limit, kernel))


def min_conv(
    a: SequenceLike,
    b: SequenceLike,
    limit: int | None = None,
    kernel: str | Kernel | None = None,
) -> Sequence:
    """Min-plus convolution, computed through the negation identity."""
    av = [-v for v in as_values(a)]
    bv = [-v for v in as_values(b)]
    return Sequence([-v for v in maxconv_values(av, bv, limit, kernel)])


# ---------------------------------------------------------------------------
# decision predicates


@dataclass(frozen=True)
class Decision:
    """Boolean verdict plus an optional witness of the violating position."""

    holds: bool
    witness: Union[tuple[int, int], int, None] = None

    def __bool__(self) -> bool:
        return self.holds


def _require_equal_lengths(*seqs: list) -> int:
    n = len(seqs[0])
    if any(len(s) != n for s in seqs):
        raise ValueError("sequences must have equal lengths")
    return n


def check_upper_bound(
    a: SequenceLike,
    b: SequenceLike,
    c: SequenceLike,
    kernel: str | Kernel | None = None,
) -> Decision:
    """Does c dominate the convolution, i.e. a[i]+b[j] <= c[i+j] for all i+j < n?

    On failure the witness is the lexicographically first violating (i, j).
    """
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = _require_equal_lengths(av, bv, cv)
    conv = maxconv_values(av, bv, n - 1, kernel)
    for k in range(n):
        if conv[k] > cv[k]:
            for i in range(max(0, k - n + 1), min(k, n - 1) + 1):
                if av[i] + bv[k - i] > cv[k]:
                    return Decision(False, (i, k - i))
    return Decision(True)


def check_lower_bound(
    a: SequenceLike,
    b: SequenceLike,
    c: SequenceLike,
    kernel: str | Kernel | None = None,
) -> Decision:
    """Is every c[k] reachable, i.e. some a[i]+b[j] >= c[k] with i+j = k?

    On failure the witness is the smallest k with no adequate decomposition.
    """
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = _require_equal_lengths(av, bv, cv)
    conv = maxconv_values(av, bv, n - 1, kernel)
    for k in range(n):
        if conv[k] < cv[k]:
            return Decision(False, k)
    return Decision(True)


def is_superadditive(a: SequenceLike) -> Decision:
    """Test a[i] + a[j] <= a[i+j] for every pair with i+j < n.

    Note the pair (0, 0) is included, so a[0] > 0 always fails.
    """
    av = as_values(a)
    n = len(av)
    if n >= 256:
        # Same scan order as below, with the k-search vectorised.
        conv = maxconv_values(av, av, n - 1)
        for k in range(n):
            if conv[k] > av[k]:
                for i in range(k // 2 + 1):
                    if av[i] + av[k - i] > av[k]:
                        return Decision(False, (i, k - i))
        return Decision(True)
    for k in range(n):
        ak = av[k]
        for i in range(k // 2 + 1):
            if av[i] + av[k - i] > ak:
                return Decision(False, (i, k - i))
    return Decision(True)


def normalize_nonneg_monotone(a: SequenceLike) -> tuple[Sequence, int] | None:
    """Rewrite a sequence with the same superadditivity verdict, zeroing the
    head and adding C*i with C = max|a[i]| + 1 (the smallest legal slope).

    The result is always non-negative with a zero head.  Whenever the
    verdict can be YES it is also strictly increasing: superadditivity of
    the rewrite forces a'[i] + a'[1] <= a'[i+1] with a'[1] >= 1.  Inputs
    that swing down faster than C produce a non-monotone rewrite, but such
    inputs are never superadditive, so every consumer that needs
    monotonicity gets it exactly when it matters.

    Returns None when a[0] > 0: that alone already refutes superadditivity,
    no rewrite can represent it.
    """
    av = as_values(a)
    if av[0] > 0:
        return None
    c = max(abs(v) for v in av) + 1
    out = [0] + [c * i + av[i] for i in range(1, len(av))]
    return Sequence(out), c
