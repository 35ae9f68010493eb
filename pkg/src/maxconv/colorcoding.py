"""Randomised 0/1-knapsack solver built from bounded max-plus joins.

Items are split into weight layers so that layer i can contribute at most
2^i items to any feasible packing.  Within a layer, a random partition
spreads any small solution across parts with constant probability, a few
repetitions boost that to 1 - delta, and part profiles (choose at most one
item) are folded together with truncated max-plus convolutions.  Error is
one-sided: every profile entry produced anywhere is achievable by a real
subset of items, so results never exceed the exact optimum.

Randomness is fully reproducible: a single integer seed feeds a splittable
numpy SeedSequence, one child per layer / trial / partition draw, and all
merges happen in a fixed order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .core import DEFAULT_KERNEL, KERNELS, Kernel, maxconv_values, resolve_kernel
from .oracles import ValueProfile, _check_int

SeedLike = Union[int, np.random.SeedSequence]


@dataclass(frozen=True)
class RandConfig:
    """Failure budget, seed, and kernel choice for the randomised solver."""

    delta: float
    seed: int
    kernel: str = DEFAULT_KERNEL

    def __post_init__(self):
        _validate_delta(self.delta)
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ValueError("seed must be an integer (reproducibility contract)")
        if self.kernel not in KERNELS:
            raise ValueError(f"unknown kernel {self.kernel!r}")


def _validate_delta(delta) -> None:
    if not isinstance(delta, (int, float)) or isinstance(delta, bool):
        raise ValueError("delta must be a number")
    if not 0 < delta <= 0.25:
        raise ValueError("delta must lie in (0, 1/4]")


def _seedseq(rng: SeedLike) -> np.random.SeedSequence:
    if isinstance(rng, np.random.SeedSequence):
        return rng
    if isinstance(rng, (int, np.integer)) and not isinstance(rng, bool):
        return np.random.SeedSequence(int(rng))
    raise TypeError("rng must be an int seed or a numpy SeedSequence")


def _clean_items(items: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    out = []
    for item in items:
        w, v = item
        _check_int(w, "item weight")
        _check_int(v, "item value")
        out.append((int(w), int(v)))
    return out


def _part_best(part: list[tuple[int, int]], limit: int) -> list[int]:
    best = [0] * (limit + 1)
    for w, v in part:
        if w <= limit and v > best[w]:
            best[w] = v
    run = 0
    for i in range(limit + 1):
        if best[i] > run:
            run = best[i]
        else:
            best[i] = run
    return best


def _join(p: list[int], q: list[int], limit: int, kernel: Kernel) -> list[int]:
    assert limit <= len(p) + len(q) - 2
    return maxconv_values(p, q, limit, kernel)


def part_profile(part: Iterable[tuple[int, int]], limit: int) -> ValueProfile:
    """Profile of choosing at most one item from the part."""
    _check_int(limit, "limit")
    return ValueProfile(tuple(_part_best(_clean_items(part), limit)))


def color_coding(
    items: Iterable[tuple[int, int]],
    t: int,
    k: int,
    delta: float,
    rng: SeedLike,
    kernel: str | Kernel | None = None,
) -> ValueProfile:
    """Profile covering every solution of at most k items, with probability
    at least 1 - delta per entry.

    Each trial partitions the items into k^2 parts uniformly at random and
    joins the at-most-one-item part profiles; a solution of <= k items
    lands in pairwise distinct parts with probability >= 1/4, so repeating
    ceil(log_{4/3}(1/delta)) trials and taking the pointwise maximum gives
    the bound.  Output entries are always achievable (one-sided error).
    """
    zs = _clean_items(items)
    _check_int(t, "capacity")
    _check_int(k, "solution size bound", minimum=1)
    if not isinstance(delta, (int, float)) or not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    kern = resolve_kernel(kernel)
    trials = max(1, math.ceil(math.log(1 / delta) / math.log(4 / 3)))
    parts_total = k * k
    root = _seedseq(rng)
    best = [0] * (t + 1)
    for trial_seq in root.spawn(trials):
        gen = np.random.Generator(np.random.PCG64(trial_seq))
        buckets: dict[int, list[tuple[int, int]]] = {}
        if zs:
            for item, part in zip(zs, gen.integers(0, parts_total, size=len(zs))):
                buckets.setdefault(int(part), []).append(item)
        cur: list[int] | None = None
        for part_idx in sorted(buckets):
            prof = _part_best(buckets[part_idx], t)
            cur = prof if cur is None else _join(cur, prof, t, kern)
        if cur is None:
            cur = [0] * (t + 1)
        best = [max(x, y) for x, y in zip(best, cur)]
    return ValueProfile(tuple(best))


def color_coding_layer(
    items: Iterable[tuple[int, int]],
    t: int,
    l: int,
    delta: float,
    rng: SeedLike,
    kernel: str | Kernel | None = None,
) -> ValueProfile:
    """Layer solver: items weigh at most 2t/l each and at most l of them fit
    in any packing (enforced; violating items are a caller bug).

    Small layers fall back to plain color coding.  Otherwise the layer is
    split into m parts (l / log2(l/delta), rounded up to a power of two),
    each part solved for gamma = ceil(6 log2(l/delta)) items at capacity
    2*gamma*t/l, and the parts merged pairwise with the convolution
    truncated at 2^h * 2*gamma*t/l per level (rounded up, capped at t).
    """
    zs = _clean_items(items)
    _check_int(t, "capacity")
    _check_int(l, "layer budget", minimum=1)
    _validate_delta(delta)
    for w, _ in zs:
        if w * l > 2 * t:
            raise ValueError(f"item weight {w} exceeds the layer bound 2t/l")
    # The analysis needs "at most l items of Z in any packing": true when
    # every weight exceeds t/(l+1), or trivially when |Z| <= l.
    if len(zs) > l and any(w * (l + 1) <= t for w, _ in zs):
        raise ValueError("light items would let more than l items fit the layer")
    kern = resolve_kernel(kernel)
    root = _seedseq(rng)
    log_ld = math.log2(l / delta)
    if l < log_ld:
        return color_coding(zs, t, l, delta, root, kern)
    m = 1 << max(0, math.ceil(math.log2(l / log_ld)))
    gamma = max(1, math.ceil(6 * log_ld))
    cap = min(t, math.ceil(2 * gamma * t / l))
    seqs = root.spawn(m + 1)
    gen = np.random.Generator(np.random.PCG64(seqs[0]))
    parts: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    if zs:
        for item, part in zip(zs, gen.integers(0, m, size=len(zs))):
            parts[int(part)].append(item)
    profs = [
        list(color_coding(parts[j], cap, gamma, delta / l, seqs[j + 1], kern).best)
        for j in range(m)
    ]
    level = 1
    while len(profs) > 1:
        cap = min(t, math.ceil((2**level) * 2 * gamma * t / l))
        profs = [
            _join(profs[2 * j], profs[2 * j + 1], cap, kern)
            for j in range(len(profs) // 2)
        ]
        level += 1
    out = profs[0]
    assert len(out) == t + 1
    return ValueProfile(tuple(out))


def knapsack_rand(
    items: Iterable[tuple[int, int]],
    t: int,
    delta: float,
    rng: SeedLike,
    kernel: str | Kernel | None = None,
) -> ValueProfile:
    """Randomised 0/1-knapsack profile over capacities 0..t.

    Items are routed to layers (t/2^i, t/2^(i-1)], the last layer taking
    everything at or below t/2^(layers-1); each layer runs the layer solver
    with budget 2^i and failure share delta/layers, and layer profiles are
    joined at capacity t.  Never exceeds the exact optimum; each entry
    matches it with probability at least 1 - delta.
    """
    _check_int(t, "capacity")
    _validate_delta(delta)
    zs = [(w, v) for w, v in _clean_items(items) if w <= t]
    kern = resolve_kernel(kernel)
    if t == 0:
        return ValueProfile((0,))
    if not zs:
        return ValueProfile(tuple([0] * (t + 1)))
    layers = max(1, math.ceil(math.log2(len(zs))))
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(layers + 1)]
    for w, v in zs:
        layer = layers
        for i in range(1, layers):
            if w * (1 << i) > t:
                layer = i
                break
        buckets[layer].append((w, v))
    root = _seedseq(rng)
    seqs = root.spawn(layers)
    acc = [0] * (t + 1)
    for i in range(1, layers + 1):
        if not buckets[i]:
            continue
        prof = color_coding_layer(
            buckets[i], t, 1 << i, delta / layers, seqs[i - 1], kern
        )
        acc = _join(acc, list(prof.best), t, kern)
    return ValueProfile(tuple(acc))
