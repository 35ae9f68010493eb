"""Independent reference solvers for every problem in the family.

These are deliberately plain dynamic programs and brute-force scans: they
do not share code with the convolution kernels or the reductions, so they
can serve as ground truth when the fancier routes are cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Decision, SequenceLike, as_values

KNAPSACK_MODES = ("zero_one", "unbounded")


def _check_int(v, what: str, minimum: int = 0) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"{what} must be an integer, got {v!r}")
    if v < minimum:
        raise ValueError(f"{what} must be >= {minimum}, got {v}")
    return v


@dataclass(frozen=True)
class KnapsackInstance:
    """Item list with non-negative weights/values, a capacity, and a mode.

    Items heavier than the capacity can never be packed and are dropped at
    construction, so ``items`` always satisfies weight <= capacity.
    """

    items: tuple[tuple[int, int], ...]
    capacity: int
    mode: str = "zero_one"

    def __post_init__(self):
        if self.mode not in KNAPSACK_MODES:
            raise ValueError(f"mode must be one of {KNAPSACK_MODES}, got {self.mode!r}")
        _check_int(self.capacity, "capacity")
        kept = []
        for item in self.items:
            w, v = item
            _check_int(w, "item weight")
            _check_int(v, "item value")
            if w <= self.capacity:
                kept.append((int(w), int(v)))
        object.__setattr__(self, "items", tuple(kept))

    @property
    def n(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class ValueProfile:
    """best[w] = maximum total value achievable with total weight <= w.

    The <=-capacity reading makes profiles monotone, which is what lets
    them compose under truncated max-plus convolution without sentinels.
    """

    best: tuple[int, ...]

    def __post_init__(self):
        if not self.best:
            raise ValueError("profiles must cover at least capacity 0")
        prev = None
        for v in self.best:
            _check_int(v, "profile entry")
            if prev is not None and v < prev:
                raise ValueError("profile entries must be non-decreasing")
            prev = v

    @property
    def capacity(self) -> int:
        return len(self.best) - 1

    def __len__(self) -> int:
        return len(self.best)

    def __getitem__(self, idx):
        return self.best[idx]

    def __iter__(self):
        return iter(self.best)


def knapsack01_dp(inst: KnapsackInstance) -> ValueProfile:
    """Exact optimum for every capacity <= t; classic O(n*t) table."""
    if inst.mode != "zero_one":
        raise ValueError("knapsack01_dp expects mode='zero_one'")
    t = inst.capacity
    best = [0] * (t + 1)
    for w, v in inst.items:
        if w == 0:
            # Free value: taking it never hurts.
            if v:
                for cap in range(t + 1):
                    best[cap] += v
            continue
        for cap in range(t, w - 1, -1):
            cand = best[cap - w] + v
            if cand > best[cap]:
                best[cap] = cand
    return ValueProfile(tuple(best))


def unbounded_knapsack_dp(inst: KnapsackInstance) -> ValueProfile:
    """Exact optimum per capacity with unlimited copies.

    Only the most valuable item per distinct weight can matter, so the
    instance is deduplicated first, leaving at most t items for the DP.
    """
    if inst.mode != "unbounded":
        raise ValueError("unbounded_knapsack_dp expects mode='unbounded'")
    t = inst.capacity
    best_for_weight: dict[int, int] = {}
    for w, v in inst.items:
        if w == 0:
            if v > 0:
                raise ValueError(
                    "zero-weight item with positive value: objective is unbounded"
                )
            continue
        if v > best_for_weight.get(w, -1):
            best_for_weight[w] = v
    items = sorted(best_for_weight.items())
    best = [0] * (t + 1)
    for cap in range(1, t + 1):
        b = best[cap - 1]
        for w, v in items:
            if w > cap:
                break
            cand = best[cap - w] + v
            if cand > b:
                b = cand
        best[cap] = b
    return ValueProfile(tuple(best))


def mcsp_brute(a: SequenceLike) -> list[int]:
    """Maximum consecutive-window sum for every window length 1..n."""
    av = as_values(a)
    n = len(av)
    prefix = [0]
    for v in av:
        prefix.append(prefix[-1] + v)
    return [
        max(prefix[j + k] - prefix[j] for j in range(n - k + 1))
        for k in range(1, n + 1)
    ]


# ---------------------------------------------------------------------------
# trees


@dataclass(frozen=True)
class WeightedTree:
    """Rooted tree given as a parent array (-1 marks the root) plus weights."""

    parent: tuple[int, ...]
    weight: tuple[int, ...]

    def __post_init__(self):
        n = len(self.parent)
        if n == 0 or len(self.weight) != n:
            raise ValueError("parent and weight arrays must be non-empty and equal length")
        roots = [i for i, p in enumerate(self.parent) if p == -1]
        if len(roots) != 1:
            raise ValueError("exactly one node must have parent -1")
        for i, p in enumerate(self.parent):
            if p == -1:
                continue
            if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < n or p == i:
                raise ValueError(f"bad parent link {p!r} at node {i}")
        for w in self.weight:
            _check_int(w, "node weight")
        # Reachability from the root doubles as the acyclicity check.
        kids = self.children()
        seen = 0
        stack = [roots[0]]
        while stack:
            v = stack.pop()
            seen += 1
            stack.extend(kids[v])
        if seen != n:
            raise ValueError("parent array contains a cycle or a disconnected node")

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def root(self) -> int:
        return self.parent.index(-1)

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for i, p in enumerate(self.parent):
            if p != -1:
                kids[p].append(i)
        return kids


def _merge_exact(h: list[int], f: list[int]) -> list[int]:
    # Max-plus product of per-size vectors; entries are >= 0 and every cell
    # has at least one candidate, so 0-initialisation is safe.
    out = [0] * (len(h) + len(f) - 1)
    for i, hv in enumerate(h):
        for j, fv in enumerate(f):
            s = hv + fv
            if s > out[i + j]:
                out[i + j] = s
    return out


def tree_sparsity_dp(tree: WeightedTree, k: int) -> tuple[int, list[int]]:
    """Best total weight of a connected, root-containing subgraph of size k.

    Returns the value for the requested k together with the root vector for
    every size 0..n.  Children vectors are folded bottom-up.
    """
    n = tree.n
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}, got {k!r}")
    kids = tree.children()
    order = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(kids[v])
    vec: list[list[int] | None] = [None] * n
    for v in reversed(order):
        h = [0]
        for c in kids[v]:
            h = _merge_exact(h, vec[c])  # type: ignore[arg-type]
        vec[v] = [0] + [tree.weight[v] + hv for hv in h]
    root_vec = vec[tree.root]
    assert root_vec is not None and len(root_vec) == n + 1
    return root_vec[k], root_vec


# ---------------------------------------------------------------------------
# necklaces


@dataclass(frozen=True)
class NecklaceInstance:
    """Two equal-size bead lists on a circle, positions sorted non-decreasing.

    Coincident beads are allowed, including at 0 versus circle_length.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]
    circle_length: int

    def __post_init__(self):
        _check_int(self.circle_length, "circle length", minimum=1)
        if len(self.x) == 0 or len(self.x) != len(self.y):
            raise ValueError("bead lists must be non-empty and of equal size")
        for beads in (self.x, self.y):
            prev = None
            for p in beads:
                _check_int(p, "bead position")
                if p > self.circle_length:
                    raise ValueError("bead position outside the circle")
                if prev is not None and p < prev:
                    raise ValueError("bead positions must be sorted")
                prev = p

    @property
    def n_beads(self) -> int:
        return len(self.x)


def necklace_linf_brute(inst: NecklaceInstance) -> int:
    """Doubled best-alignment spread over all non-crossing matchings.

    For offset k the matching pairs x[i] with y[(k+i) mod N]; the forward
    distance adds the circle length exactly when the index wraps (k+i >= N),
    which keeps the displacements of one matching on a common unrolling.
    The alignment cost of the instance equals the returned value / 2; it is
    kept doubled so the result is always an integer.
    """
    x, y, L = inst.x, inst.y, inst.circle_length
    n = len(x)
    best = None
    for k in range(n):
        hi = lo = None
        for i in range(n):
            j = k + i
            d = (y[j - n] - x[i] + L) if j >= n else (y[j] - x[i])
            if hi is None or d > hi:
                hi = d
            if lo is None or d < lo:
                lo = d
        spread = hi - lo
        if best is None or spread < best:
            best = spread
    assert best is not None
    return best


def three_sum_conv_brute(
    a: SequenceLike, b: SequenceLike, c: SequenceLike
) -> Decision:
    """Does some pair satisfy a[i] + b[j] = c[i+j] exactly (with i+j < n)?"""
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = len(av)
    if len(bv) != n or len(cv) != n:
        raise ValueError("sequences must have equal lengths")
    for i in range(n):
        ai = av[i]
        for j in range(n - i):
            if ai + bv[j] == cv[i + j]:
                return Decision(True, (i, j))
    return Decision(False)
