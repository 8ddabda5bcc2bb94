"""Command-line front end.

Subcommands: build, label, verify, sparing, sweep. All file formats are
JSON (see graph_core / set_label serializers); DOT is output-only.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 capacity error,
4 verification failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import constructions, graph_core, sparing
from .graph_core import Graph, GraphError
from .set_label import LabelError, Labeling, verify_weak_iasi
from .sparing import CapacityError, SparingError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


def export_dot(g, labeling=None, path=None):
    """Graphviz DOT text for a graph, with set-labels and mono edges marked.

    Mono-indexed edges (both endpoints singleton) are drawn bold red so the
    construction cost is visible at a glance.
    """
    lines = ["graph G {"]
    for v in range(g.n):
        if labeling is not None:
            label = "{" + ",".join(map(str, labeling[v])) + "}"
            shape = "ellipse" if labeling[v].is_singleton() else "box"
            lines.append(f'  {v} [label="{v}: {label}", shape={shape}];')
        else:
            lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        style = ""
        if labeling is not None and labeling[u].is_singleton() and labeling[v].is_singleton():
            style = ' [color=red, penwidth=2.0, style=bold]'
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphError(f"cannot parse {path}: {exc}")


def _load_graph(path, allow_isolated=False):
    return Graph.from_json_dict(_load_json(path), allow_isolated=allow_isolated)


def _write_json(path, payload):
    text = json.dumps(payload, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_PRODUCTS = {
    "cartesian": graph_core.cartesian_product,
    "direct": graph_core.direct_product,
    "strong": graph_core.strong_product,
    "lex": graph_core.lexicographic_product,
    "corona": graph_core.corona,
    "rooted": graph_core.rooted_product,
}


def _vmap_json(vmap):
    if isinstance(vmap, graph_core.ProductVertexMap):
        return {"kind": "grid", "n1": vmap.n1, "n2": vmap.n2,
                "order": "row-major (i, j) -> i * n2 + j"}
    if isinstance(vmap, graph_core.CoronaVertexMap):
        return {"kind": "corona", "p1": vmap.p1, "p2": vmap.p2,
                "copies": {str(i): vmap.copy_vertices(i) for i in range(vmap.p1)}}
    return {"kind": "rooted", "n1": vmap.n1, "n2": vmap.n2, "root": vmap.root,
            "copies": {str(i): [vmap.copy_vertex(i, v) for v in range(vmap.n2)]
                       for i in range(vmap.n1)}}


def cmd_build(args):
    if args.op == "union":
        g1 = _load_graph(args.g1, args.allow_isolated)
        g2 = _load_graph(args.g2, args.allow_isolated)
        g = graph_core.disjoint_union(g1, g2)
        vmap_payload = {"kind": "union", "shift": g1.n}
    else:
        g1 = _load_graph(args.g1, args.allow_isolated)
        g2 = _load_graph(args.g2, args.allow_isolated)
        if args.op == "rooted":
            if args.root is None:
                raise UsageError("--root is required for the rooted product")
            g, vmap = _PRODUCTS[args.op](g1, g2, args.root)
        else:
            g, vmap = _PRODUCTS[args.op](g1, g2)
        vmap_payload = _vmap_json(vmap)
    payload = dict(g.to_json_dict())
    payload["vertex_map"] = vmap_payload
    payload["connected"] = g.is_connected()
    _write_json(args.out, payload)
    if args.dot:
        export_dot(g, path=args.dot)
    return EXIT_OK


def _factor_labeling(g, path, oracle_bound):
    """Labeling from file, or an oracle-optimal one when no file is given."""
    if path:
        return Labeling.from_json_dict(_load_json(path), g)
    return constructions.optimal_labeling(g, oracle_bound)


def cmd_label(args):
    bound = args.oracle_bound
    if args.op is None:
        g = _load_graph(args.graph, args.allow_isolated)
        labeling = _factor_labeling(g, args.labels, bound)
        plan = constructions.LabelPlan(
            frozenset(labeling.non_singleton_vertices()), "oracle-witness")
        labeling = constructions.assign_concrete_sets(g, plan)
    else:
        g1 = _load_graph(args.g1, args.allow_isolated)
        g2 = _load_graph(args.g2, args.allow_isolated)
        if args.op == "cartesian":
            g, _ = graph_core.cartesian_product(g1, g2)
            plan = constructions.plan_cartesian(g1, _factor_labeling(g1, args.labels, bound), g2)
        elif args.op == "direct":
            g, _ = graph_core.direct_product(g1, g2)
            plan = constructions.plan_direct(g1, _factor_labeling(g1, args.labels, bound), g2)
        elif args.op == "strong":
            g, _ = graph_core.strong_product(g1, g2)
            plan = constructions.plan_strong(g1, _factor_labeling(g1, args.labels, bound), g2)
        elif args.op == "lex":
            g, _ = graph_core.lexicographic_product(g1, g2)
            plan = constructions.plan_lexicographic(g1, g2, _factor_labeling(g2, args.labels, bound))
        elif args.op == "corona":
            g, _ = graph_core.corona(g1, g2)
            plan = constructions.plan_corona(
                g1, _factor_labeling(g1, args.labels, bound),
                g2, _factor_labeling(g2, args.labels2, bound))
        elif args.op == "rooted":
            if args.root is None:
                raise UsageError("--root is required for the rooted product")
            g, _ = graph_core.rooted_product(g1, g2, args.root)
            plan = constructions.plan_rooted(
                g1, _factor_labeling(g1, args.labels, bound),
                g2, _factor_labeling(g2, args.labels2, bound), args.root)
        else:
            raise UsageError(f"cannot label product kind {args.op!r}")
    labeling, report = constructions.build_labeling(g, plan)
    payload = {
        "graph": g.to_json_dict(),
        "plan": plan.to_json_dict(),
        "labeling": labeling.to_json_dict(),
        "report": report.to_json_dict(),
    }
    _write_json(args.out, payload)
    if args.dot:
        export_dot(g, labeling, path=args.dot)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_verify(args):
    g = _load_graph(args.graph, args.allow_isolated)
    labeling = Labeling.from_json_dict(_load_json(args.labels), g)
    report = verify_weak_iasi(g, labeling)
    _write_json(args.out, report.to_json_dict())
    if args.dot:
        export_dot(g, labeling, path=args.dot)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_sparing(args):
    g = _load_graph(args.graph, args.allow_isolated)
    result = sparing.sparing_exact(g, args.oracle_bound)
    formula_value = _matching_formula(g)
    _write_json(args.out, result.to_json_dict(formula_value))
    return EXIT_OK


def _matching_formula(g):
    """Closed-form value when the graph is a recognized special family."""
    if g.n >= 1 and g.m == g.n * (g.n - 1) // 2:
        return sparing.sparing_formula_complete(g.n)
    if g.n >= 3 and g.m == g.n and all(len(g.neighbors(v)) == 2 for v in range(g.n)):
        if g.is_connected():
            return sparing.sparing_formula_cycle(g.n)
    return None


# ---------------------------------------------------------------------------
# Sweep: the full small-graph suite with the corona discrepancy report.

def sweep_families():
    """The named small-graph family used by the sweeps, in fixed order."""
    return {
        "P2": graph_core.path_graph(2),
        "P3": graph_core.path_graph(3),
        "P4": graph_core.path_graph(4),
        "C3": graph_core.cycle_graph(3),
        "C4": graph_core.cycle_graph(4),
        "C5": graph_core.cycle_graph(5),
        "K2": graph_core.complete_graph(2),
        "K3": graph_core.complete_graph(3),
        "K4": graph_core.complete_graph(4),
        "S3": graph_core.star_graph(3),
    }


def run_sweep(oracle_bound=None, seed=0):
    """Planner validity sweep over all ordered family pairs and products,
    plus the corona formula-vs-oracle comparison.

    Returns a dict with per-case rows and a list of corona discrepancies
    (cases where the exact oracle beats the construction-cost formula).
    """
    bound = oracle_bound if oracle_bound is not None else sparing.oracle_bound_default()
    families = sweep_families()
    optimal = {name: constructions.optimal_labeling(g) for name, g in families.items()}
    rows = []
    discrepancies = []
    for name1, g1 in families.items():
        l1 = optimal[name1]
        for name2, g2 in families.items():
            l2 = optimal[name2]
            cases = [
                ("cartesian", lambda: (graph_core.cartesian_product(g1, g2)[0],
                                       constructions.plan_cartesian(g1, l1, g2))),
                ("direct", lambda: (graph_core.direct_product(g1, g2)[0],
                                    constructions.plan_direct(g1, l1, g2))),
                ("strong", lambda: (graph_core.strong_product(g1, g2)[0],
                                    constructions.plan_strong(g1, l1, g2))),
                ("lex", lambda: (graph_core.lexicographic_product(g1, g2)[0],
                                 constructions.plan_lexicographic(g1, g2, l2))),
                ("corona", lambda: (graph_core.corona(g1, g2)[0],
                                    constructions.plan_corona(g1, l1, g2, l2))),
                ("rooted", lambda: (graph_core.rooted_product(g1, g2, 0)[0],
                                    constructions.plan_rooted(g1, l1, g2, l2, 0))),
            ]
            for op, make in cases:
                product, plan = make()
                labeling, report = constructions.build_labeling(product, plan)
                row = {
                    "g1": name1, "g2": name2, "op": op,
                    "n": product.n, "m": product.m,
                    "passed": report.passed,
                    "mono_edges": report.mono_edge_count,
                }
                if op == "corona":
                    r1 = sum(1 for v in range(g1.n) if l1[v].is_singleton())
                    r2 = sum(1 for v in range(g2.n) if l2[v].is_singleton())
                    formula = sparing.sparing_formula_corona(g1.n, g2.m, r1, r2)
                    row["formula"] = formula
                    if product.n <= bound:
                        exact = sparing.sparing_exact(product, bound)
                        row["exact"] = exact.value
                        if exact.value != formula:
                            discrepancies.append({
                                "case": f"{name1} (.) {name2}",
                                "formula": formula,
                                "exact": exact.value,
                                "construction": report.mono_edge_count,
                                "direction": ("formula-overcounts"
                                              if exact.value < formula
                                              else "formula-undercounts"),
                            })
                    else:
                        row["exact"] = None
                rows.append(row)
    rng = random.Random(seed)
    random_rows = []
    for _ in range(10):
        g = _random_graph(rng, n=rng.randint(4, 10))
        result = sparing.sparing_exact(g, bound)
        plan = constructions.LabelPlan(frozenset(result.witness), "oracle-witness")
        labeling, report = constructions.build_labeling(g, plan)
        random_rows.append({
            "n": g.n, "m": g.m, "passed": report.passed,
            "oracle": result.value, "construction": report.mono_edge_count,
            "agree": report.mono_edge_count == result.value,
        })
    return {
        "cases": rows,
        "all_passed": all(r["passed"] for r in rows),
        "corona_discrepancies": discrepancies,
        "random_witness_checks": random_rows,
    }


def _random_graph(rng, n):
    """Random connected graph without isolated vertices."""
    edges = set()
    perm = list(range(n))
    rng.shuffle(perm)
    for a, b in zip(perm, perm[1:]):
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.3:
                edges.add((u, v))
    return Graph(n, edges)


def cmd_sweep(args):
    summary = run_sweep(args.oracle_bound, seed=args.seed)
    _write_json(args.out, summary)
    lines = []
    for row in summary["cases"]:
        status = "ok" if row["passed"] else "FAIL"
        extra = ""
        if row["op"] == "corona":
            extra = f" formula={row['formula']} exact={row['exact']}"
        lines.append(f"{row['g1']:>3} {row['op']:<9} {row['g2']:<3} "
                     f"n={row['n']:<3} mono={row['mono_edges']:<3}{extra} [{status}]")
    for d in summary["corona_discrepancies"]:
        rel = ">" if d["direction"] == "formula-overcounts" else "<"
        lines.append(f"DISCREPANCY {d['case']}: corona formula {d['formula']} "
                     f"{rel} exact sparing {d['exact']} "
                     f"(construction cost {d['construction']})")
    sys.stderr.write("\n".join(lines) + "\n")
    return EXIT_OK if summary["all_passed"] else EXIT_VERIFY


def build_parser():
    parser = argparse.ArgumentParser(
        prog="weakiasi",
        description="Graph products, weak integer-additive set-indexers, "
                    "and exact sparing numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=False, pair=False, labels=False):
        if graph:
            p.add_argument("--graph", required=True, help="graph JSON file")
        if pair:
            p.add_argument("--g1", required=True, help="first factor JSON file")
            p.add_argument("--g2", required=True, help="second factor JSON file")
            p.add_argument("--op", required=True,
                           choices=[*_PRODUCTS, "union"], help="product kind")
            p.add_argument("--root", type=int, default=None,
                           help="root vertex of g2 (rooted product)")
        if labels:
            p.add_argument("--labels", default=None, help="labeling JSON file")
        p.add_argument("--out", default=None, help="output JSON path (default stdout)")
        p.add_argument("--dot", default=None, help="also write a DOT file here")
        p.add_argument("--oracle-bound", type=int,
                       default=sparing.oracle_bound_default(),
                       help="max vertices for the exact oracle")
        p.add_argument("--allow-isolated", action="store_true",
                       help="accept graphs with isolated vertices")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized sweep cases")

    p_build = sub.add_parser("build", help="construct a graph product")
    common(p_build, pair=True)

    p_label = sub.add_parser("label", help="plan and assign a weak IASI")
    common(p_label, labels=True)
    p_label.add_argument("--graph", default=None, help="graph JSON (no product)")
    p_label.add_argument("--g1", default=None)
    p_label.add_argument("--g2", default=None)
    p_label.add_argument("--op", default=None, choices=list(_PRODUCTS))
    p_label.add_argument("--root", type=int, default=None)
    p_label.add_argument("--labels2", default=None,
                         help="second factor labeling (corona/rooted)")

    p_verify = sub.add_parser("verify", help="verify a labeling")
    common(p_verify, graph=True, labels=True)

    p_sparing = sub.add_parser("sparing", help="exact sparing number")
    common(p_sparing, graph=True)

    p_sweep = sub.add_parser("sweep", help="run the small-graph property suite")
    common(p_sweep)
    return parser


_HANDLERS = {
    "build": cmd_build,
    "label": cmd_label,
    "verify": cmd_verify,
    "sparing": cmd_sparing,
    "sweep": cmd_sweep,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "label" and args.op is None and args.graph is None:
            raise UsageError("label needs --graph or --op with --g1/--g2")
        if args.command == "label" and args.op is not None and not (args.g1 and args.g2):
            raise UsageError("label with --op needs --g1 and --g2")
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (GraphError, LabelError, SparingError, constructions.PlanError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_PARSE
    except CapacityError as exc:
        sys.stderr.write(f"capacity error: {exc}\n")
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
