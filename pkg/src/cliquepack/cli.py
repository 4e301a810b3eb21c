"""Command-line front end.

Subcommands: nu-star, nu, verify-theorem, symmetrize, construct, scalars,
phi, example-abc. Exit codes: 0 success, 2 parse error, 3 budget
exhausted, 4 theorem/invariant violation.

All sweep output is CSV (UTF-8, LF); rationals are printed as "num/den"
so values round-trip exactly. Columns are fixed; new fields are only ever
appended.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from multiprocessing import Pool

from . import generators, lp, multipartite, packing, phi as phi_mod, symmetrize as sym
from .errors import (
    EXIT_BUDGET_EXHAUSTED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_VIOLATION,
    BudgetExceededError,
    GraphParseError,
)
from .graph import Graph, load_graph, turan_edge_count

SWEEP_COLUMNS = [
    "instance",
    "family",
    "n",
    "e",
    "r",
    "k",
    "nu_star",
    "nu_integral",
    "constructed_value",
    "bound_2k_over_r",
    "satisfied",
    "error",
]


def _frac(x: Fraction | None) -> str:
    if x is None:
        return ""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_nu_star(args) -> int:
    try:
        g = load_graph(args.graph)
    except (GraphParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        value, pack = packing.nu_star(
            g, args.r, args.clique_budget, args.lp_pivot_budget
        )
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXHAUSTED
    print(_frac(value))
    if args.packing_out:
        with open(args.packing_out, "w", encoding="utf-8") as fh:
            fh.write(pack.to_json() + "\n")
    return EXIT_OK


def cmd_nu(args) -> int:
    try:
        g = load_graph(args.graph)
    except (GraphParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        value, witness = packing.nu_integral(g, args.r, args.bb_node_budget)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXHAUSTED
    print(value)
    if args.witness:
        for clique in witness:
            print(" ".join(map(str, clique)))
    return EXIT_OK


def _sweep_instance(task) -> dict:
    """Evaluate one instance; returns a SWEEP_COLUMNS row dict."""
    kind, label, payload, r, with_nu, budgets = task
    clique_budget, pivot_budget, node_budget = budgets
    if kind == "graph-edges":
        n, edges = payload
        g = Graph.from_edges(n, edges)
        profile = None
    else:  # multipartite profile
        from .graph import complete_multipartite

        profile = payload
        g = complete_multipartite(profile)
    row = {c: "" for c in SWEEP_COLUMNS}
    row["instance"] = label
    row["family"] = kind if kind != "graph-edges" else label.split(":")[0]
    row["n"], row["e"], row["r"] = g.n, g.edge_count, r
    k = packing.continuous_k(g, r)
    bound = 2 * k / r
    row["k"], row["bound_2k_over_r"] = _frac(k), _frac(bound)
    try:
        value, _ = packing.nu_star(g, r, clique_budget, pivot_budget)
    except BudgetExceededError as exc:
        row["error"] = str(exc)
        row["satisfied"] = ""
        return row
    row["nu_star"] = _frac(value)
    ok = value >= bound
    if with_nu:
        try:
            nu, _ = packing.nu_integral(g, r, node_budget)
            row["nu_integral"] = str(nu)
            ok = ok and nu <= value
        except BudgetExceededError as exc:
            row["error"] = str(exc)
    if profile is not None:
        f = multipartite.construct_packing(profile, r)
        row["constructed_value"] = _frac(f.value)
        ok = ok and f.value >= bound and f.value <= value
    row["satisfied"] = "true" if ok else "false"
    return row


def cmd_verify_theorem(args) -> int:
    budgets = (args.clique_budget, args.lp_pivot_budget, args.bb_node_budget)
    tasks = []
    if args.family == "random-gnp":
        ps = [_parse_fraction(p) for p in args.p.split(",")]
        for i in range(args.count):
            p = ps[i % len(ps)]
            n = generators._rng(args.seed, f"n:{i}").randint(args.n_min, args.n_max)
            g = generators.gnp(n, p, args.seed, i)
            label = f"gnp:{n}:{p}:{i}"
            tasks.append(("graph-edges", label, (n, g.edges()), args.r, args.with_nu, budgets))
    elif args.family == "random-multipartite":
        idx = 0
        for n in range(1, args.n_max + 1):
            for prof in generators.all_profiles(n):
                label = f"multipartite:{','.join(map(str, prof))}"
                tasks.append(("profile", label, prof, args.r, args.with_nu, budgets))
                idx += 1
    elif args.family == "turan-plus-edges":
        for i in range(args.count):
            extra_max = (
                args.n_max * (args.n_max - 1) // 2
                - turan_edge_count(args.n_max, args.r - 1)
            )
            extra = generators._rng(args.seed, f"x:{i}").randint(0, extra_max)
            g = generators.turan_plus_edges(args.n_max, args.r, extra, args.seed, i)
            label = f"turan+{extra}:{i}"
            tasks.append(("graph-edges", label, (g.n, g.edges()), args.r, args.with_nu, budgets))
    else:
        print(f"error: unknown family {args.family}", file=sys.stderr)
        return EXIT_PARSE_ERROR

    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            rows = pool.map(_sweep_instance, tasks, chunksize=16)
    else:
        rows = [_sweep_instance(t) for t in tasks]

    out, close = _open_out(args.out)
    try:
        writer = csv.DictWriter(out, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if close:
            out.close()
    if any(r["error"] for r in rows):
        return EXIT_BUDGET_EXHAUSTED
    if any(r["satisfied"] == "false" for r in rows):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_symmetrize(args) -> int:
    try:
        g = load_graph(args.graph)
    except (GraphParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        trace = sym.symmetrize(g, args.r, args.clique_budget, args.lp_pivot_budget)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXHAUSTED
    hs = [s.h_before for s in trace.steps]
    if trace.steps:
        hs.append(trace.steps[-1].h_after)
    monotone = all(a >= b for a, b in zip(hs, hs[1:]))
    out, close = _open_out(args.out)
    try:
        out.write(trace.to_json() + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK if monotone else EXIT_VIOLATION


def _profile_arg(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def cmd_construct(args) -> int:
    f = multipartite.construct_packing(args.profile, args.r)
    scal = multipartite.compute_scalars(args.profile, args.r)
    ok = packing.verify_packing(f.graph, f) and f.value >= 2 * scal.k_G / args.r
    print(_frac(f.value))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(f.to_json() + "\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_scalars(args) -> int:
    print(multipartite.compute_scalars(args.profile, args.r).to_json())
    return EXIT_OK


def cmd_phi(args) -> int:
    try:
        table = phi_mod.phi_table(args.n, args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    out, close = _open_out(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["e", "k", "phi"])
        writer.writerows(table)
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_example_abc(args) -> int:
    ns = [int(x) for x in args.n.split(",")]
    if args.t:
        ts = [int(x) for x in args.t.split(",")]
    else:
        ts = None
    eps = Fraction(args.epsilon) if args.epsilon else None
    out, close = _open_out(args.out)
    code = EXIT_OK
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["n", "t", "e", "k", "f_t", "triangle_total", "disjoint_upper",
             "f_over_k", "warning"]
        )
        for n in ns:
            cand = ts
            if cand is None:
                # sweep t around (1+eps) 6n/13, snapped to multiples of 6
                center = (1 + (eps or Fraction(0))) * Fraction(6 * n, 13)
                base = int(center) // 6 * 6
                cand = [base - 6, base, base + 6, base + 12]
            for t in cand:
                try:
                    rep = multipartite.concluding_example(n, t)
                except ValueError as exc:
                    writer.writerow([n, t, "", "", "", "", "", "", str(exc)])
                    continue
                ratio = (
                    _frac(rep.f_t / rep.k_formula) if rep.k_formula else ""
                )
                writer.writerow(
                    [n, t, rep.e, _frac(rep.k_formula), _frac(rep.f_t),
                     rep.triangle_total, _frac(rep.disjoint_upper), ratio, ""]
                )
                if not rep.bc_edges_triangle_free:
                    code = EXIT_VIOLATION
    finally:
        if close:
            out.close()
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquepack",
        description="Exact fractional clique-packing toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lp_budget=True, bb_budget=False):
        p.add_argument("--r", type=int, default=3)
        if lp_budget:
            p.add_argument("--lp-pivot-budget", type=int, default=lp.DEFAULT_PIVOT_BUDGET)
            p.add_argument("--clique-budget", type=int, default=packing.DEFAULT_CLIQUE_BUDGET)
        if bb_budget:
            p.add_argument("--bb-node-budget", type=int, default=packing.DEFAULT_NODE_BUDGET)

    p = sub.add_parser("nu-star", help="exact fractional packing number of a graph file")
    p.add_argument("graph")
    p.add_argument("--packing-out", help="write the witness packing as JSON")
    common(p)
    p.set_defaults(func=cmd_nu_star)

    p = sub.add_parser("nu", help="exact integral packing number (branch and bound)")
    p.add_argument("graph")
    p.add_argument("--witness", action="store_true", help="print the clique set")
    common(p, lp_budget=False, bb_budget=True)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("verify-theorem", help="sweep instances and check nu* >= 2k/r")
    p.add_argument("--family", required=True,
                   choices=["random-gnp", "random-multipartite", "turan-plus-edges"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--p", default="1/2", help="comma-separated rational edge probabilities")
    p.add_argument("--with-nu", action="store_true", help="also compute integral nu")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="-")
    common(p, bb_budget=True)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("symmetrize", help="reduce a graph to complete multipartite form")
    p.add_argument("graph")
    p.add_argument("--out", default="-")
    common(p)
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("construct", help="constructive packing for a multipartite profile")
    p.add_argument("--profile", type=_profile_arg, required=True)
    p.add_argument("--out", help="write the packing as JSON")
    common(p, lp_budget=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scalars", help="k_G, t_H, k_H, alpha for a profile")
    p.add_argument("--profile", type=_profile_arg, required=True)
    common(p, lp_budget=False)
    p.set_defaults(func=cmd_scalars)

    p = sub.add_parser("phi", help="exhaustive table k -> min nu_r over n-vertex graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    common(p, lp_budget=False)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("example-abc", help="three-class construction sweep")
    p.add_argument("--n", required=True, help="comma-separated n values (multiples of 6)")
    p.add_argument("--t", help="comma-separated t values (multiples of 6)")
    p.add_argument("--epsilon", help="sweep t near (1+eps) 6n/13 instead")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_example_abc)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
