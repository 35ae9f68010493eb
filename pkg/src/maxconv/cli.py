"""Command-line harness: instance generation, solving, cross-checking,
and benchmarking for the convolution problem family.

Every answer is printed as a JSON run report.  Exit codes: 0 on success,
1 on input errors, 2 when --check (or crosscheck) finds a disagreement
with the reference method.
"""

from __future__ import annotations

import argparse
import json
import platform
import random
import statistics
import sys
import time

import numpy as np

from .colorcoding import RandConfig, knapsack_rand
from .core import (
    DEFAULT_KERNEL,
    KERNELS,
    check_lower_bound,
    check_upper_bound,
    is_superadditive,
    max_conv,
    maxconv_values,
)
from .decision import max_conv_via_upperbound
from .oracles import (
    knapsack01_dp,
    mcsp_brute,
    necklace_linf_brute,
    three_sum_conv_brute,
    tree_sparsity_dp,
    unbounded_knapsack_dp,
)
from .reductions import (
    reduce_lowerbound_to_necklace,
    reduce_mcsp_to_maxconv,
    reduce_superadditivity_to_mcsp,
    reduce_superadditivity_to_unbounded,
    reduce_unbounded_to_01,
    reduce_upperbound_to_3sumconv,
    reduce_upperbound_to_superadditivity,
    tree_sparsity_via_maxconv,
)
from .serialize import (
    PROBLEMS,
    InstanceFormatError,
    dump_instance,
    parse_instance,
    payload_objects,
)

# ---------------------------------------------------------------------------
# generators (seeded, reproducible; biased so both verdicts occur)


def _seq(rng: random.Random, n: int, w: int) -> list[int]:
    return [rng.randint(-w, w) for _ in range(n)]


def _gen_bound_triple(rng, n, w, upper: bool) -> dict:
    a = _seq(rng, n, w)
    b = _seq(rng, n, w)
    roll = rng.random()
    if roll < 0.5:
        c = _seq(rng, n, 2 * w)
    else:
        c = maxconv_values(a, b, n - 1)
        if roll < 0.75:
            # Keep the answer YES: pad up for the upper bound, down for the lower.
            slack = [rng.randint(0, 2) for _ in range(n)]
            c = [v + s if upper else v - s for v, s in zip(c, slack)]
        else:
            idx = rng.randrange(n)
            c[idx] += -1 - rng.randint(0, w) if upper else 1 + rng.randint(0, w)
    return {"a": a, "b": b, "c": c}


def _gen_superadd_seq(rng, n, w) -> list[int]:
    roll = rng.random()
    if roll < 0.5:
        return _seq(rng, n, w)
    step = max(1, w // max(1, n - 1))
    incs = sorted(rng.randint(0, step) for _ in range(n - 1))
    seq = [0]
    for inc in incs:
        seq.append(seq[-1] + inc)
    if roll >= 0.75 and n > 1:
        seq[rng.randrange(1, n)] += rng.randint(1, 3)
    return seq


def gen_payload(problem: str, rng: random.Random, opts: dict) -> dict:
    n = opts["n"]
    w = opts["values"]
    if problem == "maxconv":
        return {"a": _seq(rng, n, w), "b": _seq(rng, n, w)}
    if problem == "upperbound":
        return _gen_bound_triple(rng, n, w, upper=True)
    if problem == "lowerbound":
        return _gen_bound_triple(rng, n, w, upper=False)
    if problem == "3sumconv":
        a, b, c = _seq(rng, n, w), _seq(rng, n, w), _seq(rng, n, 2 * w)
        if rng.random() < 0.5:
            i = rng.randrange(n)
            j = rng.randrange(n - i)
            c[i + j] = a[i] + b[j]
        return {"a": a, "b": b, "c": c}
    if problem == "superadd":
        return {"a": _gen_superadd_seq(rng, n, w)}
    if problem == "mcsp":
        return {"a": _seq(rng, n, w)}
    if problem in ("knapsack01", "uknapsack"):
        t = opts["t"] if opts.get("t") else max(1, 2 * n)
        items = [[rng.randint(1, t), rng.randint(0, w)] for _ in range(n)]
        return {"items": items, "capacity": t}
    if problem == "treesparsity":
        parent = [-1] + [rng.randint(0, i - 1) for i in range(1, n)]
        weight = [rng.randint(0, w) for _ in range(n)]
        k = opts["k"] if opts.get("k") is not None else rng.randint(0, n)
        return {"parent": parent, "weight": weight, "k": k}
    if problem == "necklace":
        circle = opts["circle"] if opts.get("circle") else max(4, 8 * n)
        return {
            "x": sorted(rng.randint(0, circle) for _ in range(n)),
            "y": sorted(rng.randint(0, circle) for _ in range(n)),
            "circle_length": circle,
        }
    raise InstanceFormatError(f"unknown problem tag {problem!r}")


# ---------------------------------------------------------------------------
# solve methods


def _decision_answer(decision) -> dict:
    witness = decision.witness
    if isinstance(witness, tuple):
        witness = list(witness)
    return {"decision": bool(decision), "witness": witness}


def _profile_answer(profile) -> dict:
    best = list(profile)
    return {"profile": best, "value_at_capacity": best[-1]}


def _solve_upperbound_via_superadd(objs, opts):
    out = reduce_upperbound_to_superadditivity(*objs)
    verdict = out.interpret([is_superadditive(out.instances[0])])
    return {"decision": bool(verdict), "witness": None}


def _solve_upperbound_via_3sumconv(objs, opts):
    out = reduce_upperbound_to_3sumconv(*objs)
    answers = [three_sum_conv_brute(a, b, c) for a, b, c in out.instances]
    return {"decision": bool(out.interpret(answers)), "witness": None}


def _superadd_via_uknapsack(seq) -> bool:
    out = reduce_superadditivity_to_unbounded(seq)
    if not out.instances:
        return bool(out.interpret([]))
    return bool(out.interpret([unbounded_knapsack_dp(out.instances[0])]))


def _solve_upperbound_via_uknapsack(objs, opts):
    out = reduce_upperbound_to_superadditivity(*objs)
    verdict = out.interpret([_superadd_via_uknapsack(out.instances[0])])
    return {"decision": bool(verdict), "witness": None}


def _solve_lowerbound_via_necklace(objs, opts):
    out = reduce_lowerbound_to_necklace(*objs)
    verdict = out.interpret([necklace_linf_brute(out.instances[0])])
    return {"decision": bool(verdict), "witness": None}


def _solve_superadd_via_mcsp(objs, opts):
    out = reduce_superadditivity_to_mcsp(objs[0])
    if not out.instances:
        return {"decision": bool(out.interpret([])), "witness": None}
    verdict = out.interpret([mcsp_brute(out.instances[0])])
    return {"decision": bool(verdict), "witness": None}


def _solve_knapsack_rand(objs, opts):
    inst = objs[0]
    cfg = RandConfig(delta=opts["delta"], seed=opts["seed"], kernel=opts["kernel"])
    prof = knapsack_rand(inst.items, inst.capacity, cfg.delta, cfg.seed, cfg.kernel)
    return _profile_answer(prof)


def _solve_uknapsack_via_01(objs, opts):
    # The constructed 0/1 profile matches the source profile at every
    # capacity, so the whole profile is reported, not just the optimum.
    out = reduce_unbounded_to_01(objs[0])
    return _profile_answer(knapsack01_dp(out.instances[0]))


def _solve_mcsp_via_maxconv(objs, opts):
    out = reduce_mcsp_to_maxconv(objs[0])
    inst = out.instances[0]
    conv = max_conv(inst.a, inst.b, inst.limit, opts["kernel"])
    return {"sums": list(out.interpret([conv]))}


def _solve_treesparsity_dp(objs, opts):
    tree, k = objs
    value, vector = tree_sparsity_dp(tree, k)
    return {"k": k, "value": value, "vector": vector}


def _solve_treesparsity_via(objs, opts):
    tree, k = objs
    vector = tree_sparsity_via_maxconv(tree, opts["kernel"])
    return {"k": k, "value": vector[k], "vector": vector}


def _solve_maxconv_kernel(name):
    # The problem's canonical output has the operands' common length n;
    # the kernels themselves can produce the full 2n-1 product.
    def run(objs, opts):
        a, b = objs
        return {"sequence": max_conv(a, b, limit=len(a) - 1, kernel=name).tolist()}

    return run


METHODS = {
    "maxconv": {
        "naive": _solve_maxconv_kernel("naive"),
        "python": _solve_maxconv_kernel("python"),
        "via-upperbound": lambda o, p: {
            "sequence": max_conv_via_upperbound(o[0], o[1]).tolist()
        },
    },
    "upperbound": {
        "direct": lambda o, p: _decision_answer(check_upper_bound(*o)),
        "via-superadd": _solve_upperbound_via_superadd,
        "via-3sumconv": _solve_upperbound_via_3sumconv,
        "via-uknapsack": _solve_upperbound_via_uknapsack,
    },
    "lowerbound": {
        "direct": lambda o, p: _decision_answer(check_lower_bound(*o)),
        "via-necklace": _solve_lowerbound_via_necklace,
    },
    "superadd": {
        "direct": lambda o, p: _decision_answer(is_superadditive(o[0])),
        "via-uknapsack": lambda o, p: {
            "decision": _superadd_via_uknapsack(o[0]),
            "witness": None,
        },
        "via-mcsp": _solve_superadd_via_mcsp,
    },
    "knapsack01": {
        "dp": lambda o, p: _profile_answer(knapsack01_dp(o[0])),
        "rand": _solve_knapsack_rand,
    },
    "uknapsack": {
        "dp": lambda o, p: _profile_answer(unbounded_knapsack_dp(o[0])),
        "via-01": _solve_uknapsack_via_01,
    },
    "mcsp": {
        "brute": lambda o, p: {"sums": mcsp_brute(o[0])},
        "via-maxconv": _solve_mcsp_via_maxconv,
    },
    "treesparsity": {
        "dp": _solve_treesparsity_dp,
        "via-maxconv": _solve_treesparsity_via,
    },
    "necklace": {
        "brute": lambda o, p: {"doubled_objective": necklace_linf_brute(o[0])},
    },
    "3sumconv": {
        "brute": lambda o, p: _decision_answer(three_sum_conv_brute(*o)),
    },
}

REFERENCE = {
    "maxconv": "naive",
    "upperbound": "direct",
    "lowerbound": "direct",
    "superadd": "direct",
    "knapsack01": "dp",
    "uknapsack": "dp",
    "mcsp": "brute",
    "treesparsity": "dp",
    "necklace": "brute",
    "3sumconv": "brute",
}

RANDOMIZED = {("knapsack01", "rand")}


def _compare(problem: str, method: str, ans: dict, ref: dict) -> tuple[bool, bool]:
    """Return (agrees, hard_violation) for an answer vs the reference."""
    if (problem, method) in RANDOMIZED:
        sound = all(x <= y for x, y in zip(ans["profile"], ref["profile"]))
        agrees = ans["value_at_capacity"] == ref["value_at_capacity"]
        return agrees, not sound
    if "decision" in ans:
        same = ans["decision"] == ref["decision"]
        return same, not same
    for key in ("sequence", "profile", "sums", "vector", "doubled_objective"):
        if key in ans:
            same = ans[key] == ref[key]
            return same, not same
    raise AssertionError(f"no comparable field in answer for {problem}/{method}")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    opts = {
        "n": args.n,
        "values": args.values,
        "t": args.t,
        "k": args.k,
        "circle": args.circle,
    }
    payload = gen_payload(args.problem, rng, opts)
    meta = {"seed": args.seed, "generator": {k: v for k, v in opts.items() if v is not None}}
    text = dump_instance(args.problem, payload, meta)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _cmd_solve(args) -> int:
    doc = parse_instance(_read_input(args.input))
    problem = doc["problem"]
    methods = METHODS[problem]
    if args.method not in methods:
        raise InstanceFormatError(
            f"method {args.method!r} not registered for {problem}; have {sorted(methods)}"
        )
    objs = payload_objects(problem, doc["payload"])
    opts = {"delta": args.delta, "seed": args.seed, "kernel": args.kernel}
    start = time.perf_counter()
    answer = methods[args.method](objs, opts)
    elapsed = time.perf_counter() - start
    report = {
        "problem": problem,
        "method": args.method,
        "answer": answer,
        "wall_time_s": round(elapsed, 6),
        "oracle_agreement": None,
    }
    code = 0
    if args.check:
        ref_name = REFERENCE[problem]
        ref = methods[ref_name](objs, opts)
        agrees, hard = _compare(problem, args.method, answer, ref)
        report["oracle_agreement"] = agrees
        report["reference_method"] = ref_name
        if hard:
            code = 2
    indent = 2 if args.json else None
    print(json.dumps(report, indent=indent, sort_keys=True))
    return code


def _cmd_crosscheck(args) -> int:
    rng = random.Random(args.seed)
    methods = METHODS[args.problem]
    ref_name = REFERENCE[args.problem]
    stats = {
        name: {"disagreements": 0, "mismatches": 0, "soundness_violations": 0}
        for name in methods
    }
    hard_fail = False
    for trial in range(args.trials):
        n = rng.randint(1, args.n)
        opts = {
            "n": n,
            "values": args.values,
            "t": args.t,
            "k": None,
            "circle": None,
        }
        payload = gen_payload(args.problem, rng, opts)
        objs = payload_objects(args.problem, payload)
        run_opts = {
            "delta": args.delta,
            "seed": rng.randrange(2**32),
            "kernel": args.kernel,
        }
        ref = methods[ref_name](objs, run_opts)
        for name, fn in methods.items():
            if name == ref_name:
                continue
            ans = fn(objs, run_opts)
            agrees, hard = _compare(args.problem, name, ans, ref)
            if (args.problem, name) in RANDOMIZED:
                if not agrees:
                    stats[name]["mismatches"] += 1
                if hard:
                    stats[name]["soundness_violations"] += 1
                    hard_fail = True
            elif not agrees:
                stats[name]["disagreements"] += 1
                hard_fail = True
    summary = {
        "problem": args.problem,
        "trials": args.trials,
        "max_n": args.n,
        "reference": ref_name,
        "methods": {},
    }
    for name in methods:
        if name == ref_name:
            continue
        entry = dict(stats[name])
        if (args.problem, name) in RANDOMIZED:
            entry["empirical_failure_rate"] = (
                stats[name]["mismatches"] / args.trials if args.trials else 0.0
            )
        summary["methods"][name] = entry
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 2 if hard_fail else 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not sizes or sizes != sorted(sizes):
        raise InstanceFormatError("--sizes must be a comma-separated ascending list")
    methods = METHODS[args.problem]
    if args.method not in methods:
        raise InstanceFormatError(
            f"method {args.method!r} not registered for {args.problem}"
        )
    print(f"# platform: {platform.platform()}")
    print(f"# python: {platform.python_version()}  numpy: {np.__version__}")
    print(f"# repeats: 5 (median reported)")
    print("problem,method,size,median_seconds")
    rng = random.Random(args.seed)
    for size in sizes:
        opts = {"n": size, "values": args.values, "t": None, "k": None, "circle": None}
        payload = gen_payload(args.problem, rng, opts)
        objs = payload_objects(args.problem, payload)
        run_opts = {"delta": args.delta, "seed": args.seed, "kernel": args.kernel}
        times = []
        for _ in range(5):
            start = time.perf_counter()
            methods[args.method](objs, run_opts)
            times.append(time.perf_counter() - start)
        print(f"{args.problem},{args.method},{size},{statistics.median(times):.6f}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxconv",
        description="Solvers, reductions, and benchmarks for the max-plus convolution family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a seeded instance file")
    p_gen.add_argument("--problem", required=True, choices=PROBLEMS)
    p_gen.add_argument("--n", type=int, required=True, help="instance size")
    p_gen.add_argument("--values", type=int, default=100, help="value magnitude bound")
    p_gen.add_argument("--t", type=int, default=None, help="knapsack capacity")
    p_gen.add_argument("--k", type=int, default=None, help="tree sparsity size")
    p_gen.add_argument("--circle", type=int, default=None, help="necklace circumference")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default="-", help="output path ('-' for stdout)")

    p_solve = sub.add_parser("solve", help="run one method on an instance file")
    p_solve.add_argument("--input", required=True, help="instance path ('-' for stdin)")
    p_solve.add_argument("--method", required=True)
    p_solve.add_argument("--check", action="store_true", help="cross-check against the reference method")
    p_solve.add_argument("--delta", type=float, default=0.05)
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--kernel", default=DEFAULT_KERNEL, choices=sorted(KERNELS))
    p_solve.add_argument("--json", action="store_true", help="pretty-print the run report")

    p_cross = sub.add_parser("crosscheck", help="run every method on seeded random instances")
    p_cross.add_argument("--problem", required=True, choices=PROBLEMS)
    p_cross.add_argument("--trials", type=int, default=100)
    p_cross.add_argument("--n", type=int, default=16, help="maximum instance size")
    p_cross.add_argument("--values", type=int, default=32)
    p_cross.add_argument("--t", type=int, default=None)
    p_cross.add_argument("--delta", type=float, default=0.05)
    p_cross.add_argument("--seed", type=int, default=0)
    p_cross.add_argument("--kernel", default=DEFAULT_KERNEL, choices=sorted(KERNELS))

    p_bench = sub.add_parser("bench", help="median-of-5 timings over a size sweep (CSV)")
    p_bench.add_argument("--problem", required=True, choices=PROBLEMS)
    p_bench.add_argument("--method", required=True)
    p_bench.add_argument("--sizes", required=True, help="comma-separated ascending sizes")
    p_bench.add_argument("--values", type=int, default=100)
    p_bench.add_argument("--delta", type=float, default=0.05)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--kernel", default=DEFAULT_KERNEL, choices=sorted(KERNELS))

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "solve": _cmd_solve,
        "crosscheck": _cmd_crosscheck,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except (InstanceFormatError, ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
