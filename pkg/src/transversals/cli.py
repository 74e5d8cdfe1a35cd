"""Command line surface: instance files and reproducible run reports.

Subcommands: gen, count, second, sample-set, multiply, bounds. Every
report is a JSON object on stdout whose fields other than wall_time_s
are a pure function of the inputs and the seed. Exit codes: 0 success,
2 input error, 3 budget or resample cap exhausted, 4 precondition
violated by otherwise well-formed input.

Instance files are JSON: kind ("hamiltonian" or "perfect_matching"),
num_vertices, subgraphs as lists of [u, v] pairs (the list position is
the color), optional base_edges (defaults to the union of the
subgraphs), optional planted {edges, colors}, optional metadata map.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Optional

from . import oracle
from .core import (
    BaseGraph,
    KIND_HAM,
    KIND_PM,
    SubgraphFamily,
    Transversal,
    edge,
    naturally_index,
    transversal_kind_for,
    validate_family,
    validate_transversal,
)
from .digraphs import build_full_rb, build_full_ryb, d_cross, d_star
from .errors import (
    BudgetExceeded,
    DomainError,
    ResampleBudgetExceeded,
    TransversalError,
)
from .exchange import (
    find_alternating_cycle,
    lollipop_walk,
    prune,
    second_ham_transversal,
    second_pm_transversal,
)
from .generators import (
    gen_dirac_family,
    gen_planted_ham_family,
    gen_planted_pm_family,
    gen_regular_all_equal,
    gen_witness_instance_ham,
)
from .multiplier import (
    enumerate_omega_ham,
    enumerate_omega_pm,
    many_ham_transversals,
    many_pm_transversals,
)
from .sampler import (
    BOUND_IDS,
    SamplerConfig,
    factorial_bounds,
    lll_condition_ham,
    lll_condition_scan,
    pm_degree_threshold,
    sample_set_dirac,
    sample_set_lll_ham,
    sample_set_pm,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4

_BUDGET_ERRORS = (BudgetExceeded, ResampleBudgetExceeded)


class InputError(ValueError):
    pass


def transversal_to_obj(t: Transversal) -> dict:
    return {
        "edges": [list(e) for e, _ in t.items],
        "colors": [c for _, c in t.items],
    }


def instance_to_obj(
    family: SubgraphFamily, planted: Optional[Transversal], metadata: Optional[dict]
) -> dict:
    obj = {
        "kind": "hamiltonian" if family.kind == KIND_HAM else "perfect_matching",
        "num_vertices": family.num_vertices,
        "base_edges": [list(e) for e in family.base.edges()],
        "subgraphs": [[list(e) for e in sorted(g)] for g in family.subgraphs],
    }
    if planted is not None:
        obj["planted"] = transversal_to_obj(planted)
    if metadata:
        obj["metadata"] = metadata
    return obj


def instance_from_obj(obj: dict):
    try:
        kind_tag = obj["kind"]
        num_vertices = int(obj["num_vertices"])
        sub_lists = obj["subgraphs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed instance file: {exc}") from exc
    if kind_tag == "hamiltonian":
        kind = KIND_HAM
    elif kind_tag == "perfect_matching":
        kind = KIND_PM
    else:
        raise InputError(f"unknown kind {kind_tag!r}")
    try:
        subgraphs = [
            frozenset(edge(int(u), int(v)) for u, v in g) for g in sub_lists
        ]
        union = set().union(*subgraphs) if subgraphs else set()
        if "base_edges" in obj:
            base_edges = [edge(int(u), int(v)) for u, v in obj["base_edges"]]
        else:
            base_edges = sorted(union)
        planted_obj = obj.get("planted")
        planted = None
        if planted_obj is not None:
            colors = {
                edge(int(u), int(v)): int(c)
                for (u, v), c in zip(planted_obj["edges"], planted_obj["colors"])
            }
            union |= set(colors)
            if "base_edges" not in obj:
                base_edges = sorted(union)
            planted = Transversal.from_map(transversal_kind_for(kind), colors)
        base = BaseGraph(num_vertices, base_edges)
        family = SubgraphFamily(base, subgraphs, kind)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"malformed instance file: {exc}") from exc
    report = validate_family(family)
    if not report.ok:
        raise InputError(f"invalid family: {report.summary()}")
    if planted is not None:
        report = validate_transversal(family, planted)
        if not report.ok:
            raise InputError(f"invalid planted transversal: {report.summary()}")
    return family, planted, obj.get("metadata", {})


def load_instance(path: str):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse {path}: {exc}") from exc
    return instance_from_obj(obj)


def require_planted(planted: Optional[Transversal]) -> Transversal:
    if planted is None:
        raise InputError("this command needs an instance file with a planted transversal")
    return planted


def parse_set_spec(spec: str, family: SubgraphFamily) -> tuple[int, ...]:
    """Comma-separated vertices; matching instances accept x3/y3 aliases."""
    n = family.num_vertices
    half = family.num_pairs
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            if family.kind == KIND_PM and tok[0] in "xy":
                i = int(tok[1:])
                if not 0 <= i < half:
                    raise ValueError
                out.append(i if tok[0] == "x" else half + i)
            else:
                v = int(tok)
                if not 0 <= v < n:
                    raise ValueError
                out.append(v)
        except ValueError:
            raise InputError(f"bad set member {tok!r}") from None
    if not out:
        raise InputError("empty set spec")
    return tuple(sorted(set(out)))


def _canonicalize(family, planted):
    fam_c, t_c, idx = naturally_index(family, planted)
    return fam_c, t_c, idx, idx.inverse()


def cmd_gen(args) -> tuple[dict, list, int]:
    model = args.model
    params = {"model": model, "n": args.n, "seed": args.seed}
    if model == "planted-ham":
        params["extra_degree"] = args.extra_degree
        family, planted = gen_planted_ham_family(args.n, args.extra_degree, args.seed)
    elif model == "planted-pm":
        params["extra_degree"] = args.extra_degree
        family, planted = gen_planted_pm_family(args.n, args.extra_degree, args.seed)
    elif model == "dirac":
        if args.c is None:
            raise InputError("dirac model needs --c")
        params["c"] = args.c
        family = gen_dirac_family(args.n, args.c, args.seed)
        planted = None
        if args.find_planted:
            planted = oracle.exists_ham_transversal(family)
            if planted is None:
                raise DomainError("no transversal found to plant")
            family, planted, _ = naturally_index(family, planted)
    elif model == "regular-all-equal":
        if args.m is None:
            raise InputError("regular-all-equal model needs --m")
        params["m"] = args.m
        family, planted = gen_regular_all_equal(args.n, args.m, args.seed)
    elif model == "witness":
        if args.set is None or args.d is None:
            raise InputError("witness model needs --set and --d")
        members = tuple(int(t) for t in args.set.split(",") if t.strip())
        params["set"] = list(members)
        params["d"] = args.d
        family, planted = gen_witness_instance_ham(args.n, members, args.d, args.seed)
    else:
        raise InputError(f"unknown model {model!r}")
    metadata = {k: v for k, v in params.items()}
    obj = instance_to_obj(family, planted, metadata)
    with open(args.out, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")
    results = {
        "path": args.out,
        "num_vertices": family.num_vertices,
        "num_subgraphs": family.num_colors,
        "num_base_edges": family.base.num_edges,
        "max_degree": family.base.max_degree(),
        "planted": planted is not None,
    }
    return results, [], EXIT_OK


def cmd_count(args) -> tuple[dict, list, int]:
    family, _, _ = load_instance(args.infile)
    budget = oracle.SearchBudget(max_nodes=args.max_nodes, max_results=args.max_results)
    counter = (
        oracle.count_ham_transversals
        if family.kind == KIND_HAM
        else oracle.count_pm_transversals
    )
    try:
        count = counter(family, budget)
    except BudgetExceeded as exc:
        results = {
            "status": "inconclusive",
            "partial_count": len(exc.partial),
            "nodes": exc.nodes,
        }
        return results, [f"search budget exhausted: {exc}"], EXIT_BUDGET
    return {"status": "exact", "count": count}, [], EXIT_OK


def cmd_second(args) -> tuple[dict, list, int]:
    family, planted, _ = load_instance(args.infile)
    planted = require_planted(planted)
    members = parse_set_spec(args.set, family)
    fam_c, t_c, idx, inv = _canonicalize(family, planted)
    ms = idx.map_vertices(members)
    if family.kind == KIND_HAM:
        from .digraphs import omega_member_ham

        H = build_full_ryb(fam_c, t_c)
        jp = prune(H, ms)
        anchor = edge(min(ms), (min(ms) + 1) % fam_c.num_vertices)
        trace = lollipop_walk(jp, anchor)
        t2_c = second_ham_transversal(fam_c, t_c, ms, H)
        omega_ok = omega_member_ham(t_c, ms, t2_c)
        provenance = {
            "anchor": list(anchor),
            "trace_states": len(trace.states),
            "pivot_edges": [list(e) for e in trace.pivots],
        }
        metric = {"metric": "d_star", "value": d_star(H, ms)}
    else:
        from .digraphs import omega_member_pm

        H = build_full_rb(fam_c, t_c)
        cyc = find_alternating_cycle(H, ms)
        t2_c = second_pm_transversal(fam_c, t_c, ms, H)
        omega_ok = omega_member_pm(t_c, ms, t2_c)
        provenance = {
            "cycle_pairs": list(cyc.pairs),
            "cycle_arcs": [list(a) for a in cyc.arcs],
            "cycle_length": cyc.length(),
        }
        metric = {"metric": "d_cross", "value": d_cross(H, ms)}
    t2 = inv.apply_to_transversal(t2_c)
    valid = validate_transversal(family, t2).ok
    results = {
        "set": list(members),
        "second": transversal_to_obj(t2),
        "valid": valid,
        "distinct": t2 != planted,
        "omega_member": omega_ok,
        "provenance": provenance,
        **metric,
    }
    return results, [], EXIT_OK


def _write_debug_log(path: Optional[str], records) -> None:
    if path is None:
        return
    def clean(v):
        if isinstance(v, tuple):
            return list(v)
        return v
    with open(path, "w") as fh:
        for rec in records:
            fh.write(
                json.dumps(
                    {
                        "step": rec.step,
                        "kind": rec.kind,
                        "location": clean(rec.location),
                        "redrawn": list(rec.redrawn),
                    },
                    sort_keys=True,
                )
                + "\n"
            )


def cmd_sample_set(args) -> tuple[dict, list, int]:
    family, planted, _ = load_instance(args.infile)
    planted = require_planted(planted)
    fam_c, t_c, idx, inv = _canonicalize(family, planted)
    m = args.m if args.m is not None else family.base.max_degree()
    cfg = SamplerConfig(
        seed=args.seed,
        max_resamples=args.max_resamples,
        p=args.p,
        alpha=args.alpha,
        r=args.r,
        m=m,
        c=args.c,
    )
    if args.method in ("lll-ham", "dirac"):
        if fam_c.kind != KIND_HAM:
            raise InputError(f"method {args.method} needs a hamiltonian instance")
        H = build_full_ryb(fam_c, t_c)
        run = sample_set_lll_ham if args.method == "lll-ham" else sample_set_dirac
        metric_name = "d_star"
    elif args.method == "pm":
        if fam_c.kind != KIND_PM:
            raise InputError("method pm needs a perfect_matching instance")
        H = build_full_rb(fam_c, t_c)
        run = sample_set_pm
        metric_name = "d_cross"
    else:
        raise InputError(f"unknown method {args.method!r}")
    try:
        outcome = run(H, cfg)
    except ResampleBudgetExceeded as exc:
        _write_debug_log(args.debug_log, exc.records)
        results = {"status": "budget-exhausted", "resamples": exc.resamples}
        return results, [str(exc)], EXIT_BUDGET
    _write_debug_log(args.debug_log, outcome.records)
    cand = outcome.candidate
    original_members = sorted(inv.map_vertex(v) for v in cand.members)
    guarantee: dict = {}
    if args.method == "lll-ham":
        r_eff = cfg.r if cfg.r is not None else min(
            min(len(H.yellow[v]) for v in range(H.n)),
            min(len(H.blue[v]) for v in range(H.n)),
        )
        p_eff = cfg.p if cfg.p is not None else 0.5 * math.sqrt(math.log(m) / m)
        guarantee = {
            "event_threshold": p_eff * r_eff / 400.0,
            "depth_floor": math.ceil(p_eff * r_eff / 400.0),
            "statement_form": r_eff / 400.0 * math.sqrt(math.log(m) / m),
        }
    elif args.method == "dirac":
        from .sampler import dirac_depth_target

        guarantee = {"depth_floor": dirac_depth_target(H.n, cfg.c)}
    else:
        r_eff = cfg.r if cfg.r is not None else min(
            len(H.blue[v]) for v in range(2 * H.n)
        )
        guarantee = {
            "event_threshold": cfg.alpha * r_eff / 2.0,
            "depth_floor": math.ceil(cfg.alpha * r_eff / 2.0),
        }
    results = {
        "status": "ok",
        "members": original_members,
        "size": len(cand),
        "metric": metric_name,
        "depth": cand.metrics.depth,
        "red_independent": cand.metrics.red_independent,
        "resamples": outcome.resamples,
        "guarantee": guarantee,
    }
    return results, list(outcome.warnings), EXIT_OK


def cmd_multiply(args) -> tuple[dict, list, int]:
    family, planted, _ = load_instance(args.infile)
    planted = require_planted(planted)
    members = parse_set_spec(args.set, family)
    fam_c, t_c, idx, inv = _canonicalize(family, planted)
    ms = idx.map_vertices(members)
    warnings: list[str] = []
    if family.kind == KIND_HAM:
        H = build_full_ryb(fam_c, t_c)
        d = d_star(H, ms)
        out_c = many_ham_transversals(fam_c, t_c, ms)
        metric_name = "d_star"
        omega = (
            enumerate_omega_ham(fam_c, t_c, ms)
            if fam_c.num_vertices <= 12 and len(ms) <= 4
            else None
        )
    else:
        H = build_full_rb(fam_c, t_c)
        d = d_cross(H, ms)
        out_c = many_pm_transversals(fam_c, t_c, ms)
        metric_name = "d_cross"
        omega = enumerate_omega_pm(fam_c, t_c, ms) if fam_c.num_pairs <= 8 else None
    required = math.factorial(d + 1)
    results = {
        "set": list(members),
        "metric": metric_name,
        "d": d,
        "required": required,
        "count": len(out_c),
        "transversals": [
            transversal_to_obj(inv.apply_to_transversal(t)) for t in out_c
        ],
    }
    if omega is not None:
        omega_set = set(omega)
        in_omega = all(t in omega_set for t in out_c)
        results["oracle"] = {
            "omega_size": len(omega),
            "outputs_in_omega": in_omega,
            "omega_at_least_required": len(omega) >= required,
        }
    return results, warnings, EXIT_OK


def cmd_bounds(args) -> tuple[dict, list, int]:
    bid = args.id
    if bid == "lll-cond":
        if args.m is None:
            raise InputError("lll-cond needs --m")
        rep = lll_condition_ham(args.m)
        results = {
            "m": rep.m,
            "p": rep.p,
            "r": rep.r,
            "x": rep.x,
            "y": rep.y,
            "xi": rep.xi,
            "first": {
                "lhs": rep.first_lhs,
                "rhs": rep.first_rhs,
                "margin": rep.first_margin,
                "holds": rep.first_holds,
            },
            "second": {
                "lhs": rep.second_lhs,
                "rhs": rep.second_rhs,
                "margin": rep.second_margin,
                "holds": rep.second_holds,
            },
        }
        return results, [], EXIT_OK
    if bid == "lll-scan":
        scan = lll_condition_scan(args.lo, args.hi)
        results = {
            "lo": scan.lo,
            "hi": scan.hi,
            "first_min_m": scan.first_min_m,
            "second_min_m": scan.second_min_m,
            "first_transitions": list(scan.first_transitions),
            "second_transitions": list(scan.second_transitions),
        }
        notes = []
        if not scan.second_single_crossing:
            notes.append(
                "second inequality crosses more than once; minimal m reported as a note"
            )
        return results, notes, EXIT_OK
    if bid == "pm-degree-threshold":
        if args.m is None or args.alpha is None:
            raise InputError("pm-degree-threshold needs --alpha and --m")
        value = pm_degree_threshold(args.alpha, args.m)
        return {"alpha": args.alpha, "m": args.m, "threshold": value}, [], EXIT_OK
    if bid in BOUND_IDS:
        params = {}
        for name in ("m", "n", "t"):
            if getattr(args, name) is not None:
                params[name] = getattr(args, name)
        for name in ("c", "epsilon", "alpha"):
            if getattr(args, name) is not None:
                params[name] = getattr(args, name)
        value = factorial_bounds(bid, **params)
        return {"id": bid, "params": params, "value": value}, [], EXIT_OK
    raise InputError(
        f"unknown bound id {bid!r}; known: lll-cond, lll-scan, pm-degree-threshold, "
        + ", ".join(BOUND_IDS)
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transversals",
        description="Colored subgraph-family transversal toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument(
        "--model",
        required=True,
        choices=["planted-ham", "planted-pm", "dirac", "regular-all-equal", "witness"],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--extra-degree", type=int, default=0)
    p.add_argument("--c", type=float)
    p.add_argument("--m", type=int)
    p.add_argument("--set", type=str)
    p.add_argument("--d", type=int)
    p.add_argument("--find-planted", action="store_true")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("count", help="exact transversal count by exhaustive search")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--max-nodes", type=int, default=100_000_000)
    p.add_argument("--max-results", type=int)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("second", help="exchange a planted transversal for a second one")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--set", required=True, help='e.g. "0,3" or "x0,x3" for matchings')
    p.set_defaults(handler=cmd_second)

    p = sub.add_parser("sample-set", help="sample a red-independent set")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--method", required=True, choices=["lll-ham", "dirac", "pm"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-resamples", type=int, default=10_000)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--c", type=float)
    p.add_argument("--debug-log", type=str)
    p.set_defaults(handler=cmd_sample_set)

    p = sub.add_parser("multiply", help="emit at least (d+1)! distinct transversals")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--set", required=True)
    p.set_defaults(handler=cmd_multiply)

    p = sub.add_parser("bounds", help="evaluate a claimed bound or inequality")
    p.add_argument("--id", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--lo", type=int, default=3)
    p.add_argument("--hi", type=int, default=5000)
    p.set_defaults(handler=cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        results, warnings, code = args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _BUDGET_ERRORS as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TransversalError as exc:
        print(f"precondition failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    report = {
        "command": args.command,
        "parameters": _echo_params(args),
        "seed": getattr(args, "seed", None),
        "results": results,
        "warnings": warnings,
        "wall_time_s": round(time.perf_counter() - start, 6),
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    return code


def _echo_params(args) -> dict:
    skip = {"handler", "command"}
    return {
        k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None
    }


if __name__ == "__main__":
    sys.exit(main())
