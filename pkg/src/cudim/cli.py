"""Batch front end: ingest an input, run selected tasks, emit one stable
machine-readable JSON report.

Inputs are either a catalog key (``--catalog "E(4)"``) or a JSON document
(``--input job.json``) whose ``kind`` field selects the schema:

  presentation  {"kind": "presentation", "size": N, "add": [[..]],
                 "leq": [[..]], "names": [..]?}            (index 0 = zero)
  space         {"kind": "space", "points": [..], "opens": [[..]],
                 "cap": 2, "variant": "full"?}    -> its lsc semigroup;
                 the validate task also reports the covering dimension
  chain         {"kind": "chain", "stages": [<catalog key> | presentation,
                 ..], "maps": [[..], ..]}         -> the chain limit

Tasks (repeatable ``--task``): validate, axioms, dim0, dim:N, classify,
profile, permanence.  Reports are byte-stable for fixed inputs and
parameters: keys are sorted and no timestamps are embedded.  Exit codes:
0 all tasks completed (and the optional expectation file matched),
1 expectation mismatch, 2 input or validation error, 3 a search-space
cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, spaces, structure
from .constructions import ChainSystem, chain_limit
from .core import FiniteCuPresentation, SearchSpaceTooLarge, ValidationError, axiom_report
from .corpus import random_presentations
from .dimension import (BoundedVerdict, Instance, Witness, dim_bounded,
                        dim_zero_exact)
from .symbolic import BudgetExceeded, from_finite, sample_check_axioms

SCHEMA_VERSION = 1


class InputError(Exception):
    pass


def _element_json(S, e):
    if isinstance(S, FiniteCuPresentation):
        return {"index": e, "name": S.names[e]}
    return {"repr": S.fmt(e)}


def _instance_json(S, inst: Instance):
    return {"x_prime": _element_json(S, inst.x_prime),
            "x": _element_json(S, inst.x),
            "ys": [_element_json(S, y) for y in inst.ys]}


def _witness_json(S, wit: Witness):
    return {"form": wit.form,
            "z": [[_element_json(S, e) for e in row] for row in wit.z]}


def _verdict_json(S, v: BoundedVerdict):
    out = {"status": v.status, "params": v.params}
    if v.reason is not None:
        out["reason"] = v.reason
    if v.witness is not None:
        if isinstance(v.witness, Instance):
            out["counterexample"] = _instance_json(S, v.witness)
        elif isinstance(v.witness, tuple):
            out["counterexample"] = [_element_json(S, e) for e in v.witness]
    return out


def _axiom_json(S, verdicts):
    out = []
    for name in ("O5", "O6", "weak-cancellation"):
        v = verdicts[name]
        rec = {"axiom": name, "holds": v.holds, "exact": v.exact,
               "params": v.params}
        if v.counterexample is not None:
            rec["counterexample"] = [_element_json(S, e) for e in v.counterexample]
        out.append(rec)
    return out


def _load_input(args):
    """Returns (subject, extra) where subject is a presentation or a
    symbolic semigroup; extra holds side facts for the validate task."""
    if args.catalog and args.input:
        raise InputError("give either --catalog or --input, not both")
    if args.catalog:
        return catalog.make(args.catalog), {}
    if not args.input:
        return None, {}
    with open(args.input) as fh:
        doc = json.load(fh)
    kind = doc.get("kind", "presentation")
    if kind == "presentation":
        S = catalog.validate_presentation(
            doc["size"], doc["add"], doc["leq"], doc.get("names"),
            name=doc.get("name", "input"))
        return S, {}
    if kind == "space":
        X = spaces.make_space(doc["points"], doc["opens"],
                              strict=bool(doc.get("strict", False)),
                              name=doc.get("name", "space"))
        cap = int(doc.get("cap", 2))
        variant = doc.get("variant", "full")
        S = spaces.lsc_semigroup(X, cap, variant,
                                 max_carrier=doc.get("max_carrier", 64))
        return S, {"covering_dim": spaces.covering_dim(X),
                   "points": len(X.points), "opens": len(X.opens)}
    if kind == "chain":
        stages = []
        for st in doc["stages"]:
            if isinstance(st, str):
                stage = catalog.make(st)
                if not isinstance(stage, FiniteCuPresentation):
                    raise InputError(f"chain stage {st!r} is not finite")
                stages.append(stage)
            else:
                stages.append(catalog.validate_presentation(
                    st["size"], st["add"], st["leq"], st.get("names")))
        maps = tuple(tuple(int(v) for v in m) for m in doc["maps"])
        return chain_limit(ChainSystem(tuple(stages), maps)), {}
    raise InputError(f"unknown input kind {kind!r}")


def _run_task(task, S, extra, args):
    finite = isinstance(S, FiniteCuPresentation)
    if task == "validate":
        rec = {"ok": True}
        if finite:
            rec["size"] = S.size
        rec.update(extra)
        return rec
    if task == "axioms":
        if finite:
            return {"entries": _axiom_json(S, axiom_report(S)),
                    "mode": "exhaustive"}
        return {"entries": _axiom_json(S, sample_check_axioms(S, args.depth)),
                "mode": "sampled", "depth": args.depth}
    if task == "dim0":
        if finite:
            got = dim_zero_exact(S)
            rec = {"holds": got.holds}
            if got.counterexample is not None:
                rec["counterexample"] = _instance_json(S, got.counterexample)
            return rec
        return _verdict_json(S, dim_bounded(S, 0, r_max=args.r_max,
                                            depth=args.depth))
    if task.startswith("dim:"):
        n = int(task.split(":", 1)[1])
        v = dim_bounded(S, n, r_max=args.r_max, depth=args.depth)
        return _verdict_json(S, v)
    if task == "classify":
        elems = (list(S.elements()) if finite
                 else list(dict.fromkeys(S.basis(args.depth))))
        rows = []
        for e in elems:
            c = structure.classify_element(S, e, depth=args.depth)
            rows.append({"element": _element_json(S, e),
                         "compact": c.compact, "soft": c.soft,
                         "thin_boundary": c.thin_boundary,
                         "complementable": c.complementable,
                         "params": c.params})
        return {"rows": rows}
    if task == "profile":
        p = structure.profile(S, depth=args.depth)
        return {"simple": p.simple, "elementary": p.elementary,
                "algebraic": p.algebraic, "soft": p.soft,
                "idempotent": p.idempotent, "dichotomy": p.dichotomy,
                "params": p.params}
    if task == "permanence":
        return _permanence(args)
    raise InputError(f"unknown task {task!r}")


def _permanence(args):
    from .constructions import direct_sum

    count = args.n_max if args.n_max else 40
    pres = random_presentations(args.seed, 2 * count)
    violations = []
    for i in range(count):
        A, B = pres[2 * i], pres[2 * i + 1]
        both = dim_zero_exact(A).holds and dim_zero_exact(B).holds
        got = dim_zero_exact(direct_sum(A, B)).holds
        if got != both:
            violations.append({"pair": i, "left": A.name, "right": B.name,
                               "sum": got, "components": both})
    return {"pairs": count, "seed": args.seed, "violations": violations}


def _match_expectations(report, expect):
    """Deep subset match: every leaf in expect must equal the report."""

    def submatch(exp, got):
        if isinstance(exp, dict):
            return isinstance(got, dict) and all(
                k in got and submatch(v, got[k]) for k, v in exp.items())
        if isinstance(exp, list):
            return (isinstance(got, list) and len(exp) == len(got)
                    and all(submatch(a, b) for a, b in zip(exp, got)))
        return exp == got
    mismatches = []
    tasks = {rec["task"]: rec["result"] for rec in report["tasks"]}
    for key, exp in expect.items():
        if key not in tasks or not submatch(exp, tasks[key]):
            mismatches.append(key)
    return mismatches


def build_parser():
    p = argparse.ArgumentParser(
        prog="cudim",
        description="verification toolkit for the covering dimension of "
                    "Cuntz semigroup presentations")
    p.add_argument("--input", help="JSON input document (presentation, space or chain)")
    p.add_argument("--catalog", help="catalog key, e.g. 'E(4)' or 'HomE(2,5)'")
    p.add_argument("--task", action="append", default=[],
                   help="validate | axioms | dim0 | dim:N | classify | profile | permanence")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--r-max", type=int, default=None, dest="r_max")
    p.add_argument("--n-max", type=int, default=None, dest="n_max")
    p.add_argument("--seed", type=int, default=20260810)
    p.add_argument("--expect", help="JSON file of expected task results (subset match)")
    p.add_argument("--report-out", dest="report_out", help="write the report here instead of stdout")
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    tasks = args.task or ["validate"]
    try:
        subject, extra = _load_input(args)
    except (InputError, ValidationError, ValueError, OSError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    if subject is None and any(t != "permanence" for t in tasks):
        print("input error: these tasks need --catalog or --input", file=sys.stderr)
        return 2
    report = {
        "schema_version": SCHEMA_VERSION,
        "input": {"catalog": args.catalog} if args.catalog else {"file": args.input},
        "parameters": {"depth": args.depth, "r_max": args.r_max,
                       "n_max": args.n_max, "seed": args.seed},
        "subject": getattr(subject, "name", None),
        "tasks": [],
    }
    for task in tasks:
        try:
            result = _run_task(task, subject, extra, args)
        except (SearchSpaceTooLarge, BudgetExceeded) as exc:
            print(f"search space cap: {exc}", file=sys.stderr)
            return 3
        except (InputError, ValidationError, ValueError) as exc:
            print(f"task error ({task}): {exc}", file=sys.stderr)
            return 2
        report["tasks"].append({"task": task, "result": result})
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.report_out:
        with open(args.report_out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.expect:
        try:
            with open(args.expect) as fh:
                expect = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"input error: bad expectation file: {exc}", file=sys.stderr)
            return 2
        bad = _match_expectations(report, expect)
        if bad:
            print(f"expectation mismatch: {', '.join(sorted(bad))}", file=sys.stderr)
            return 1
    return 0


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
