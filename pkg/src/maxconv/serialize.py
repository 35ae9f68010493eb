"""JSON instance files shared by the CLI, the tests, and fixtures.

An instance file is one JSON object: a problem tag, a problem-specific
payload, and free-form metadata (generator parameters, seed).  Dumps are
canonical (sorted keys, two-space indent, trailing newline) so identical
instances serialise byte-identically.
"""

from __future__ import annotations

import json

from .core import Sequence
from .oracles import KnapsackInstance, NecklaceInstance, WeightedTree

PROBLEMS = (
    "maxconv",
    "upperbound",
    "lowerbound",
    "superadd",
    "knapsack01",
    "uknapsack",
    "mcsp",
    "treesparsity",
    "necklace",
    "3sumconv",
)


class InstanceFormatError(ValueError):
    """Raised for malformed instance files."""


def _int_list(payload: dict, key: str) -> list[int]:
    val = payload.get(key)
    if not isinstance(val, list) or not val:
        raise InstanceFormatError(f"payload field {key!r} must be a non-empty array")
    for v in val:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InstanceFormatError(f"payload field {key!r} must hold integers")
    return val


def _int_field(payload: dict, key: str, minimum: int = 0) -> int:
    val = payload.get(key)
    if isinstance(val, bool) or not isinstance(val, int) or val < minimum:
        raise InstanceFormatError(f"payload field {key!r} must be an integer >= {minimum}")
    return val


def validate_payload(problem: str, payload: dict) -> dict:
    """Check the payload against the problem schema; return it normalised."""
    if problem not in PROBLEMS:
        raise InstanceFormatError(f"unknown problem tag {problem!r}")
    if not isinstance(payload, dict):
        raise InstanceFormatError("payload must be an object")
    try:
        if problem == "maxconv":
            a = _int_list(payload, "a")
            b = _int_list(payload, "b")
            if len(a) != len(b):
                raise InstanceFormatError("a and b must have equal lengths")
            return {"a": a, "b": b}
        if problem in ("upperbound", "lowerbound", "3sumconv"):
            a = _int_list(payload, "a")
            b = _int_list(payload, "b")
            c = _int_list(payload, "c")
            if len(a) != len(b) or len(a) != len(c):
                raise InstanceFormatError("a, b, c must have equal lengths")
            return {"a": a, "b": b, "c": c}
        if problem in ("superadd", "mcsp"):
            return {"a": _int_list(payload, "a")}
        if problem in ("knapsack01", "uknapsack"):
            raw = payload.get("items")
            if not isinstance(raw, list):
                raise InstanceFormatError("items must be an array of [weight, value]")
            items = []
            for entry in raw:
                if (
                    not isinstance(entry, list)
                    or len(entry) != 2
                    or any(isinstance(v, bool) or not isinstance(v, int) or v < 0 for v in entry)
                ):
                    raise InstanceFormatError("items must be [weight, value] pairs of non-negative ints")
                items.append([entry[0], entry[1]])
            return {"items": items, "capacity": _int_field(payload, "capacity")}
        if problem == "treesparsity":
            parent = payload.get("parent")
            if not isinstance(parent, list) or not parent:
                raise InstanceFormatError("parent must be a non-empty array")
            for v in parent:
                if isinstance(v, bool) or not isinstance(v, int) or v < -1:
                    raise InstanceFormatError("parent entries must be ints >= -1")
            weight = _int_list(payload, "weight")
            k = _int_field(payload, "k")
            if k > len(parent):
                raise InstanceFormatError("k exceeds the node count")
            return {"parent": parent, "weight": weight, "k": k}
        if problem == "necklace":
            return {
                "x": _int_list(payload, "x"),
                "y": _int_list(payload, "y"),
                "circle_length": _int_field(payload, "circle_length", minimum=1),
            }
    except InstanceFormatError:
        raise
    except (TypeError, ValueError) as exc:
        raise InstanceFormatError(str(exc)) from exc
    raise AssertionError("unreachable")


def dump_instance(problem: str, payload: dict, meta: dict | None = None) -> str:
    doc = {
        "problem": problem,
        "payload": validate_payload(problem, payload),
        "meta": meta or {},
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_instance(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "problem" not in doc or "payload" not in doc:
        raise InstanceFormatError("instance files need 'problem' and 'payload' fields")
    problem = doc["problem"]
    payload = validate_payload(problem, doc["payload"])
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise InstanceFormatError("meta must be an object")
    return {"problem": problem, "payload": payload, "meta": meta}


def payload_objects(problem: str, payload: dict):
    """Turn a validated payload into the typed objects the solvers take."""
    if problem == "maxconv":
        return (Sequence(payload["a"]), Sequence(payload["b"]))
    if problem in ("upperbound", "lowerbound", "3sumconv"):
        return (Sequence(payload["a"]), Sequence(payload["b"]), Sequence(payload["c"]))
    if problem in ("superadd", "mcsp"):
        return (Sequence(payload["a"]),)
    if problem == "knapsack01":
        items = tuple((w, v) for w, v in payload["items"])
        return (KnapsackInstance(items, payload["capacity"], "zero_one"),)
    if problem == "uknapsack":
        items = tuple((w, v) for w, v in payload["items"])
        return (KnapsackInstance(items, payload["capacity"], "unbounded"),)
    if problem == "treesparsity":
        tree = WeightedTree(tuple(payload["parent"]), tuple(payload["weight"]))
        return (tree, payload["k"])
    if problem == "necklace":
        return (
            NecklaceInstance(
                tuple(payload["x"]), tuple(payload["y"]), payload["circle_length"]
            ),
        )
    raise InstanceFormatError(f"unknown problem tag {problem!r}")
