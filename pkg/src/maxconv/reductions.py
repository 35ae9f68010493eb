"""Executable transformations between the convolution-family problems.

Each reduction builds target-problem instances plus an interpretation rule
mapping target answers back to the source answer.  The rules are total:
whatever the target oracle returns, ``interpret`` produces a source answer.
Soundness is established empirically in the test suite by running the
direct solver and the reduction route side by side.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable

from .core import (
    WORD_MAX,
    Kernel,
    MaxConvInstance,
    Sequence,
    SequenceLike,
    as_values,
    maxconv_values,
    normalize_nonneg_monotone,
)
from .oracles import KnapsackInstance, NecklaceInstance, WeightedTree


@dataclass(frozen=True)
class ReductionOutcome:
    """Target instances plus the contract for reading the answer back.

    ``interpret`` consumes the list of target answers (one per instance, in
    order) and returns the source answer.  ``descriptor`` is a JSON-ready
    summary of that rule; ``blowup`` records size and value growth.
    """

    target: str
    instances: tuple
    interpret: Callable[[list], object]
    descriptor: dict
    blowup: str


def _constant_outcome(target: str, value, reason: str) -> ReductionOutcome:
    return ReductionOutcome(
        target=target,
        instances=(),
        interpret=lambda answers: value,
        descriptor={"kind": "constant", "value": value, "reason": reason},
        blowup="degenerate: no target instance",
    )


# ---------------------------------------------------------------------------
# unbounded knapsack -> 0/1 knapsack


def reduce_unbounded_to_01(inst: KnapsackInstance) -> ReductionOutcome:
    """Binary-expand multiplicities: item (w, v) becomes (2^j w, 2^j v) for
    every j up to floor(log2 t).  Any multiplicity <= t decomposes over the
    doubled copies, and any 0/1 selection maps back to a multiset, so the
    optima agree at every capacity up to t.
    """
    if inst.mode != "unbounded":
        raise ValueError("source instance must be unbounded")
    t = inst.capacity
    if t < 1:
        raise ValueError("capacity must be at least 1")
    items = []
    for w, v in inst.items:
        for j in range(t.bit_length()):
            if (w << j) <= t:
                items.append((w << j, v << j))
    target = KnapsackInstance(tuple(items), t, "zero_one")

    def interpret(answers: list):
        (profile,) = answers
        return profile[t]

    return ReductionOutcome(
        target="knapsack01",
        instances=(target,),
        interpret=interpret,
        descriptor={"kind": "value-at-capacity", "capacity": t},
        blowup=f"items {inst.n} -> {len(items)} (<= n*(floor(log2 t)+1))",
    )


# ---------------------------------------------------------------------------
# superadditivity -> unbounded knapsack


def reduce_superadditivity_to_unbounded(a: SequenceLike) -> ReductionOutcome:
    """Pair weights i and 2n-1-i so that value D is always reachable; the
    optimum exceeds D exactly when some a'[i] + a'[j] > a'[i+j].

    The input is first rewritten non-negative strictly increasing; a
    positive leading element short-circuits to NO, a single element to YES.
    D must exceed the value of ANY multiset of light items (repetition is
    allowed, so a sum-based threshold is not enough: light items fill at
    most the full capacity 2n-1 at value <= max(a') each unit), hence
    D = (2n-1) * max(a') + 1.  An optimal packing then always contains
    exactly one heavy item, and superadditivity lets the light remainder
    be merged into the single matching partner.
    """
    av = as_values(a)
    norm = normalize_nonneg_monotone(av)
    if norm is None:
        return _constant_outcome(
            "uknapsack", False, "positive leading element refutes superadditivity"
        )
    ap = list(norm[0].values)
    n = len(ap)
    if n == 1:
        return _constant_outcome("uknapsack", True, "single non-positive element")
    d = (2 * n - 1) * max(ap) + 1
    items = [(i, ap[i]) for i in range(1, n)]
    items += [(2 * n - 1 - i, d - ap[i]) for i in range(n)]
    target = KnapsackInstance(tuple(items), 2 * n - 1, "unbounded")

    def interpret(answers: list) -> bool:
        (profile,) = answers
        return profile[2 * n - 1] == d

    return ReductionOutcome(
        target="uknapsack",
        instances=(target,),
        interpret=interpret,
        descriptor={
            "kind": "optimum-equals-threshold",
            "threshold": d,
            "capacity": 2 * n - 1,
        },
        blowup=f"{2 * n - 1} items, values <= D = {d}",
    )


# ---------------------------------------------------------------------------
# upper-bound check -> superadditivity


def reduce_upperbound_to_superadditivity(
    a: SequenceLike, b: SequenceLike, c: SequenceLike
) -> ReductionOutcome:
    """Pack the three sequences into one block sequence e of length 4n whose
    superadditivity is equivalent to a[i] + b[j] <= c[i+j] everywhere.

    The operands are first made non-negative and increasing (adding C + D*i
    with C = W+1, D = 2W+1 preserves each inequality); blocks are lifted by
    multiples of K = max value so only cross-block pairs (a-block, b-block)
    land on the c-block, where the offsets cancel.
    """
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = len(av)
    if len(bv) != n or len(cv) != n:
        raise ValueError("sequences must have equal lengths")
    w = max(max(abs(v) for v in vals) for vals in (av, bv, cv))
    shift_c = w + 1
    shift_d = 2 * w + 1
    ap = [shift_c + av[i] + shift_d * i for i in range(n)]
    bp = [shift_c + bv[i] + shift_d * i for i in range(n)]
    cp = [2 * shift_c + cv[i] + shift_d * i for i in range(n)]
    k = max(ap[-1], bp[-1], cp[-1])
    e = (
        [0] * n
        + [k + v for v in ap]
        + [4 * k + v for v in bp]
        + [5 * k + v for v in cp]
    )

    def interpret(answers: list) -> bool:
        (decision,) = answers
        return bool(decision)

    return ReductionOutcome(
        target="superadd",
        instances=(Sequence(e),),
        interpret=interpret,
        descriptor={"kind": "decision-identity"},
        blowup=f"length {4 * n}, values <= {6 * k} (O(nW))",
    )


# ---------------------------------------------------------------------------
# maximum consecutive sums -> max-plus convolution


def reduce_mcsp_to_maxconv(a: SequenceLike) -> ReductionOutcome:
    """Window sums of every length drop out of one convolution of prefix sums
    against negated reversed prefix sums; a -D filler (D twice any partial
    sum) keeps the padding from ever winning a maximum.
    """
    av = as_values(a)
    n = len(av)
    prefix = [0]
    for v in av:
        prefix.append(prefix[-1] + v)
    filler = -2 * (sum(abs(v) for v in av) + 1)
    b = [prefix[k + 1] for k in range(n)] + [filler] * n
    c = [-prefix[n - k] for k in range(n + 1)] + [filler] * (n - 1)
    inst = MaxConvInstance(Sequence(b), Sequence(c), limit=2 * n - 1)

    def interpret(answers: list) -> list[int]:
        (conv,) = answers
        return [conv[n + k - 1] for k in range(1, n + 1)]

    return ReductionOutcome(
        target="maxconv",
        instances=(inst,),
        interpret=interpret,
        descriptor={"kind": "slice", "start": n, "count": n},
        blowup=f"operand length {2 * n}, filler {filler}",
    )


# ---------------------------------------------------------------------------
# superadditivity -> maximum consecutive sums


def reduce_superadditivity_to_mcsp(a: SequenceLike) -> ReductionOutcome:
    """a[k] <= min window sum of length k over the difference sequence, for
    every k, is exactly superadditivity; window minima are read off the
    window maxima of the negated differences.

    A single-element input carries only the pair (0,0), i.e. the verdict is
    a[0] <= 0, decided without any target instance.
    """
    av = as_values(a)
    n = len(av)
    if n == 1:
        return _constant_outcome(
            "mcsp", av[0] <= 0, "single element: superadditive iff non-positive"
        )
    neg_diff = [-(av[i + 1] - av[i]) for i in range(n - 1)]
    inst = Sequence(neg_diff)

    def interpret(answers: list) -> bool:
        (sums,) = answers
        return all(av[k] <= -sums[k - 1] for k in range(1, n))

    return ReductionOutcome(
        target="mcsp",
        instances=(inst,),
        interpret=interpret,
        descriptor={"kind": "pointwise-window-bound"},
        blowup=f"one instance of length {n - 1}",
    )


# ---------------------------------------------------------------------------
# tree sparsity via max-plus convolution


def _subtree_sizes(tree: WeightedTree, kids: list[list[int]]) -> list[int]:
    sizes = [1] * tree.n
    order = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(kids[v])
    for v in reversed(order):
        for c in kids[v]:
            sizes[v] += sizes[c]
    return sizes


def tree_sparsity_via_maxconv(
    tree: WeightedTree, kernel: str | Kernel | None = None
) -> list[int]:
    """Root sparsity vector computed through heavy-path decomposition.

    The tree is covered by spines that always descend into the child with
    the larger subtree; a spine's vector is assembled by halving the spine
    interval and merging the halves with two convolutions.  Off-spine
    children are heads of deeper spines, solved first.
    """
    kids = tree.children()
    sizes = _subtree_sizes(tree, kids)

    # Spines in discovery order; heads hanging off a spine appear later,
    # so processing in reverse order resolves dependencies bottom-up.
    spines: list[list[int]] = []
    heads = deque([tree.root])
    while heads:
        head = heads.popleft()
        spine = [head]
        while kids[spine[-1]]:
            heavy = max(kids[spine[-1]], key=lambda c: (sizes[c], -c))
            heads.extend(c for c in kids[spine[-1]] if c != heavy)
            spine.append(heavy)
        spines.append(spine)

    def join(p: list[int], q: list[int]) -> list[int]:
        return maxconv_values(p, q, len(p) + len(q) - 2, kernel)

    vec: dict[int, list[int]] = {}
    for spine in reversed(spines):
        ell = len(spine)
        # Attachment vector per spine node: joint profile of all off-spine
        # children, or the vector (0) when there are none.
        u_at: list[list[int]] = []
        for idx, s in enumerate(spine):
            off = [c for c in kids[s] if idx + 1 >= ell or c != spine[idx + 1]]
            acc = [0]
            for c in off:
                acc = join(acc, vec[c])
            u_at.append(acc)
        weights = [tree.weight[s] for s in spine]

        def solve(a: int, b: int) -> tuple[list[int], list[int]]:
            # Returns (attachment profile over spine[a..b],
            #          best subtree rooted at spine[a] avoiding spine[b+1]).
            if a == b:
                u = u_at[a]
                y = [0] + [weights[a] + hv for hv in u]
                return u, y
            c = (a + b) // 2
            u_left, y_left = solve(a, c)
            u_right, y_right = solve(c + 1, b)
            u = join(u_left, u_right)
            spine_sum = sum(weights[a : c + 1])
            taken = c - a + 1
            through = join(u_left, y_right)
            total = (len(u_left) - 1) + (len(y_right) - 1) + taken
            y = []
            for size in range(total + 1):
                best = None
                if size < len(y_left):
                    best = y_left[size]
                r = size - taken
                if 0 <= r < len(through):
                    cand = spine_sum + through[r]
                    if best is None or cand > best:
                        best = cand
                assert best is not None
                y.append(best)
            return u, y

        _, head_vec = solve(0, ell - 1)
        vec[spine[0]] = head_vec

    out = vec[tree.root]
    assert len(out) == tree.n + 1
    return out


# ---------------------------------------------------------------------------
# lower-bound check -> circular alignment


_ALIGN_SCALE = 10  # bounds the length of any index combination used below


def reduce_lowerbound_to_necklace(
    a: SequenceLike, b: SequenceLike, c: SequenceLike
) -> ReductionOutcome:
    """Encode "every c[k] is reachable" as a circular alignment instance.

    The operands are shifted non-negative with a <= c pointwise, b gets an
    appended sentinel larger than any short combination, and a steep linear
    ramp D*i makes every positive-order combination non-negative.  On the
    resulting 2n-bead necklaces of circumference 2B, an offset k < n has
    alignment spread (B - B1) + (conv(a,b)[n-k-1] - c[n-k-1]), so the
    doubled objective drops below B - B1 exactly when the source answer
    is NO.
    """
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = len(av)
    if len(bv) != n or len(cv) != n:
        raise ValueError("sequences must have equal lengths")
    w = max(max(abs(v) for v in vals) for vals in (av, bv, cv))
    c1 = c2 = w + 1
    a1 = [v + c1 for v in av]
    b1 = [v + c1 + c2 for v in bv]
    cc1 = [v + 2 * c1 + c2 for v in cv]
    m1 = max(max(a1), max(b1), max(cc1))
    sentinel = m1 * _ALIGN_SCALE
    b2 = b1 + [sentinel]
    ramp = sentinel * _ALIGN_SCALE
    a3 = [a1[i] + ramp * i for i in range(n)]
    b3 = [b2[i] + ramp * i for i in range(n + 1)]
    c3 = [cc1[i] + ramp * i for i in range(n)]
    big = b3[n]
    big1 = b3[n - 1]
    big2 = b3[n] - b3[1]
    if 2 * big > WORD_MAX // 4:
        raise OverflowError("constructed alignment positions leave the word")
    x = a3 + [big + v for v in c3]
    y = (
        [big1 - b3[n - 1 - r] for r in range(n)]
        + [big + big2 - b3[n - 1 - r] for r in range(n - 1)]
        + [2 * big]
    )
    inst = NecklaceInstance(tuple(x), tuple(y), 2 * big)
    threshold = big - big1

    def interpret(answers: list) -> bool:
        (doubled,) = answers
        return doubled >= threshold

    return ReductionOutcome(
        target="necklace",
        instances=(inst,),
        interpret=interpret,
        descriptor={"kind": "doubled-objective-at-least", "threshold": threshold},
        blowup=f"2n = {2 * n} beads, circumference {2 * big} (O(nW) * scale^2)",
    )


# ---------------------------------------------------------------------------
# upper-bound check -> exact-sum convolution instances


def _pre(x: int, k: int, width: int) -> int:
    return x >> (width - k)


def reduce_upperbound_to_3sumconv(
    a: SequenceLike, b: SequenceLike, c: SequenceLike
) -> ReductionOutcome:
    """Turn each strict inequality a[i] + b[j] > c[i+j] into an alternative
    of exact-sum equations on binary prefixes.

    x + y > z holds iff either some prefix satisfies pre(x) + pre(y) =
    pre(z) + 1, or at some bit both x and y continue with 1 while z
    continues with 0 and the prefixes sum exactly.  The first family uses
    prefix lengths 1..width, the second gates entries with a +-D sentinel
    that no genuine sum can match.  Inputs are shifted non-negative first
    (add W to a and b, 2W to c), which preserves every strict inequality.
    """
    av, bv, cv = as_values(a), as_values(b), as_values(c)
    n = len(av)
    if len(bv) != n or len(cv) != n:
        raise ValueError("sequences must have equal lengths")
    w = max(max(abs(v) for v in vals) for vals in (av, bv, cv))
    a1 = [v + w for v in av]
    b1 = [v + w for v in bv]
    c1 = [v + 2 * w for v in cv]
    wp = max(max(a1), max(b1), max(c1))
    width = max(1, wp.bit_length())
    d = 2 * wp + 1
    instances = []
    for k in range(width):
        kp = k + 1
        eq_a = Sequence([_pre(x, kp, width) for x in a1])
        eq_b = Sequence([_pre(x, kp, width) for x in b1])
        eq_c = Sequence([_pre(x, kp, width) + 1 for x in c1])
        instances.append((eq_a, eq_b, eq_c))
        gate_a = Sequence(
            [
                _pre(x, k, width)
                if _pre(x, kp, width) == 2 * _pre(x, k, width) + 1
                else -d
                for x in a1
            ]
        )
        gate_b = Sequence(
            [
                _pre(x, k, width)
                if _pre(x, kp, width) == 2 * _pre(x, k, width) + 1
                else -d
                for x in b1
            ]
        )
        gate_c = Sequence(
            [
                _pre(x, k, width)
                if _pre(x, kp, width) == 2 * _pre(x, k, width)
                else d
                for x in c1
            ]
        )
        instances.append((gate_a, gate_b, gate_c))

    def interpret(answers: list) -> bool:
        return not any(bool(ans) for ans in answers)

    return ReductionOutcome(
        target="3sumconv",
        instances=tuple(instances),
        interpret=interpret,
        descriptor={"kind": "any-yes-refutes", "instances": 2 * width},
        blowup=f"2*(floor(log2 W')+1) = {2 * width} instances, sentinel {d}",
    )
