"""``matchkit`` command line.

Exit codes: 0 the graph has both properties (or the command succeeded),
1 it lacks one of them (or a certificate failed to validate), 2 input
error, 3 budget exhausted, 4 structural and oracle verdicts disagree.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import random
import sys
import time
from typing import Any, Callable

from .bicycle import ConformalBicycle, classify_oracle
from .errors import BudgetExhausted, GraphError, MatchkitError, NotMatchable, NotMatchingCovered
from .families import FAMILY_TAGS, FamilySpec, k4_splice_k33, k33, k4_multi, murty_graph, odd_wheel, p_brick
from .graph import DEFAULT_BUDGET, IsoWitness, MultiGraph, read_graph, read_graphs, write_graph
from .matching import is_matching_covered
from .polytope import build_skeleton
from .recognizer import decide_structural
from .retract import retract_of
from .thin import reduce_to_norine_thomas
from .tightcut import tight_cut_decomposition

EXIT_BOTH, EXIT_NOT_BOTH, EXIT_INPUT, EXIT_BUDGET, EXIT_DISAGREE = range(5)
MAX_CROSSVAL_ORDER = 12
MAX_INTERNAL_ORDER = 8

log = logging.getLogger("matchkit")


class InputError(Exception):
    pass


def _budget(args: argparse.Namespace) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("MATCHKIT_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"MATCHKIT_BUDGET={env!r} is not an integer") from None
    return DEFAULT_BUDGET


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load(path: str) -> tuple[MultiGraph, str]:
    text = _read_text(path)
    return read_graph(text), hashlib.sha256(text.encode()).hexdigest()


def _emit(report: dict[str, Any]) -> None:
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _require_mc(g: MultiGraph) -> None:
    if not is_matching_covered(g):
        raise NotMatchingCovered(f"{g!r} is not matching covered")


# ---------------------------------------------------------------- commands


def cmd_decide(args: argparse.Namespace) -> int:
    g, digest = _load(args.file)
    _require_mc(g)
    budget = _budget(args)
    report: dict[str, Any] = {
        "command": "decide",
        "mode": args.mode,
        "input_digest": digest,
        "budget": budget,
    }
    t0 = time.perf_counter()
    verdicts = []
    if args.mode in ("structural", "both"):
        d = decide_structural(g, no_witness=args.no_witness or args.mode == "both", budget=budget)
        report["structural"] = d.to_json()
        verdicts.append(d.both_properties)
    if args.mode in ("oracle", "both"):
        o = classify_oracle(g, budget)
        report["oracle"] = {
            "bvn": o.bvn,
            "pmc": o.pmc,
            "certificates": {p: b.to_json() for p, b in o.witnesses.items()},
        }
        verdicts.append(o.bvn and o.pmc)
    report["timing_s"] = round(time.perf_counter() - t0, 6)
    if len(set(verdicts)) > 1:
        report["disagreement"] = True
        report["graph"] = write_graph(g)
        _emit(report)
        log.error("structural and oracle verdicts disagree")
        return EXIT_DISAGREE
    report["both_properties"] = verdicts[0]
    _emit(report)
    return EXIT_BOTH if verdicts[0] else EXIT_NOT_BOTH


def cmd_generate(args: argparse.Namespace) -> int:
    params = {k: v for k, v in (("k", args.k), ("order", args.order), ("mult", args.mult), ("extra", args.extra)) if v is not None}
    spec = FamilySpec(args.tag, params)
    g = spec.build()
    header = " ".join([f"family {args.tag}"] + [f"{k}={v}" for k, v in sorted(params.items())])
    comments = [header, "labels " + spec.labelling()]
    text = write_graph(g, comments)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit({"command": "generate", "tag": args.tag, "params": params, "n": g.n, "m": g.m, "out": args.out})
    return EXIT_BOTH


def cmd_decompose(args: argparse.Namespace) -> int:
    g, digest = _load(args.file)
    rng = random.Random(args.seed) if args.seed is not None else None
    tree, b = tight_cut_decomposition(g, rng)
    _emit({"command": "decompose", "input_digest": digest, "b_invariant": b, "tree": tree.to_json()})
    return EXIT_BOTH


def cmd_reduce(args: argparse.Namespace) -> int:
    g, digest = _load(args.file)
    trace = reduce_to_norine_thomas(g)
    _emit({"command": "reduce", "input_digest": digest, "trace": trace.to_json()})
    return EXIT_BOTH


def cmd_skeleton(args: argparse.Namespace) -> int:
    g, digest = _load(args.file)
    sk = build_skeleton(g, _budget(args))
    diameter = sk.diameter if sk.diameter != float("inf") else None
    report = {
        "command": "skeleton",
        "input_digest": digest,
        "vertices": len(sk.nodes),
        "edges": sum(map(sum, sk.adjacency)) // 2,
        "diameter": diameter,
        "connected": diameter is not None,
    }
    if args.full:
        report["matchings"] = [sorted(m) for m in sk.nodes]
        report["adjacency"] = [[j for j, a in enumerate(row) if a] for row in sk.adjacency]
    _emit(report)
    return EXIT_BOTH


def _perturbation_bases() -> list[MultiGraph]:
    return [
        k4_multi(),
        k33(),
        odd_wheel(2),
        odd_wheel(3),
        k4_splice_k33(),
        murty_graph(),
        p_brick(2),
        FamilySpec("prism", {"order": 6}).build(),
        FamilySpec("moebius_ladder", {"order": 8}).build(),
    ]


def cmd_crossval(args: argparse.Namespace) -> int:
    from .corpus import matching_covered_graphs, multigraph_perturbations

    if args.max_order > MAX_CROSSVAL_ORDER:
        raise InputError(f"--max-order is capped at {MAX_CROSSVAL_ORDER}")
    budget = _budget(args)
    if args.input:
        pool = [g for g in read_graphs(_read_text(args.input)) if g.n <= args.max_order]
        groups = {"input": pool}
    else:
        if args.max_order > MAX_INTERNAL_ORDER:
            raise InputError(
                f"the built-in generator stops at order {MAX_INTERNAL_ORDER}; pipe larger graphs with --input"
            )
        groups = {f"order_{n}": matching_covered_graphs(n) for n in range(4, args.max_order + 1, 2)}
    if args.perturbations:
        groups["perturbations"] = multigraph_perturbations(_perturbation_bases(), args.perturbations, args.seed)

    counts: dict[str, dict[str, int]] = {}
    t0 = time.perf_counter()
    for name, graphs in groups.items():
        c = {"graphs": 0, "matching_covered": 0, "both": 0}
        for g in graphs:
            c["graphs"] += 1
            if not is_matching_covered(g):
                continue
            c["matching_covered"] += 1
            s = decide_structural(g, no_witness=True).both_properties
            o = classify_oracle(g, budget)
            if s != (o.bvn and o.pmc):
                text = write_graph(g, ["crossval disagreement"])
                sys.stderr.write(text)
                _emit({"command": "crossval", "disagreement": True, "graph": text, "structural": s,
                       "oracle": {"bvn": o.bvn, "pmc": o.pmc}})
                return EXIT_DISAGREE
            c["both"] += s
        counts[name] = c
    _emit({
        "command": "crossval",
        "max_order": args.max_order,
        "seed": args.seed,
        "budget": budget,
        "counts": counts,
        "disagreements": 0,
        "timing_s": round(time.perf_counter() - t0, 3),
    })
    return EXIT_BOTH


def cmd_validate(args: argparse.Namespace) -> int:
    """Re-check certificates from a ``decide`` report (or a bare certificate)."""
    g, _ = _load(args.file)
    try:
        data = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not JSON: {exc}") from exc
    checks: dict[str, bool] = {}
    bicycles = []
    if "kind" in data:
        bicycles.append(("certificate", data))
    if "certificate" in data.get("structural", {}):
        bicycles.append(("structural", data["structural"]["certificate"]))
    for parity, cert in data.get("oracle", {}).get("certificates", {}).items():
        bicycles.append((f"oracle_{parity}", cert))
    for name, cert in bicycles:
        checks[name] = ConformalBicycle.from_json(cert).validate(g)
    fam = data.get("structural", {}).get("family")
    if fam is not None:
        r = retract_of(g).graph
        canonical = MultiGraph(r.n, tuple(tuple(e) for e in fam["canonical_edges"]))
        checks["family"] = IsoWitness(tuple(fam["witness"])).validate(r, canonical)
    if not checks:
        raise InputError("no certificate found in the JSON document")
    ok = all(checks.values())
    _emit({"command": "validate", "checks": checks, "valid": ok})
    return EXIT_BOTH if ok else EXIT_NOT_BOTH


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchkit", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def budget_opt(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--budget", type=int, help=f"search budget (default $MATCHKIT_BUDGET or {DEFAULT_BUDGET})")

    d = sub.add_parser("decide", help="decide BvN and PM-compact together")
    d.add_argument("file")
    mode = d.add_mutually_exclusive_group()
    mode.add_argument("--structural", dest="mode", action="store_const", const="structural")
    mode.add_argument("--oracle", dest="mode", action="store_const", const="oracle")
    mode.add_argument("--both", dest="mode", action="store_const", const="both")
    d.add_argument("--no-witness", action="store_true", help="skip the exhaustive negative certificate")
    budget_opt(d)
    d.set_defaults(func=cmd_decide, mode="structural")

    gp = sub.add_parser("generate", help="write a family member as a graph file")
    gp.add_argument("tag", choices=FAMILY_TAGS)
    gp.add_argument("--k", type=int)
    gp.add_argument("--order", type=int)
    gp.add_argument("--mult", type=int)
    gp.add_argument("--extra", type=int)
    gp.add_argument("-o", "--out")
    gp.set_defaults(func=cmd_generate)

    dc = sub.add_parser("decompose", help="tight cut decomposition and b-invariant")
    dc.add_argument("file")
    dc.add_argument("--seed", type=int, help="pick tight cuts at random with this seed")
    dc.set_defaults(func=cmd_decompose)

    r = sub.add_parser("reduce", help="reduce a simple brick to a Norine-Thomas brick")
    r.add_argument("file")
    r.set_defaults(func=cmd_reduce)

    s = sub.add_parser("skeleton", help="1-skeleton of the perfect matching polytope")
    s.add_argument("file")
    s.add_argument("--full", action="store_true", help="include matchings and adjacency lists")
    budget_opt(s)
    s.set_defaults(func=cmd_skeleton)

    c = sub.add_parser("crossval", help="compare structural and oracle verdicts exhaustively")
    c.add_argument("--max-order", type=int, default=8)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--perturbations", type=int, default=0, help="seeded multigraph variants to add")
    c.add_argument("--input", help="graph stream to use instead of the built-in generator ('-' for stdin)")
    budget_opt(c)
    c.set_defaults(func=cmd_crossval)

    v = sub.add_parser("validate", help="re-check certificates against a graph")
    v.add_argument("file")
    v.add_argument("certificate")
    v.set_defaults(func=cmd_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="matchkit: %(message)s")
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except BudgetExhausted as exc:
        log.error("budget exhausted: %s", exc)
        return EXIT_BUDGET
    except (InputError, GraphError, NotMatchable, NotMatchingCovered, MatchkitError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
