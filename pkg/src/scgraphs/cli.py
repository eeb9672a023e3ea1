"""Command-line entry point: ``scgraphs <subcommand> ...``.

Exit status: 0 success, 1 bad input, 2 a proven identity or implication
failed (an internal bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as C
from .classify import TheoremViolation, classify_pair
from .figures import all_figures
from .graph import Graph, Graph6Error, parse_graph6, write_graph6
from .poly import char_poly, inertia, squared_char_poly
from .search import default_workers, scan
from .spectrum import eigenvalues, energy, singular_values
from .verify import SUITES
from .walks import walk_profile


class InputError(Exception):
    pass


def _graph(text: str) -> Graph:
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise InputError(f"bad graph6 {text!r}: {exc}") from exc


def _out(obj) -> None:
    print(json.dumps(obj, indent=1))


def _edge_text(g: Graph, one_based: bool) -> str:
    off = 1 if one_based else 0
    return " ".join(f"{u + off}-{v + off}" for u, v in g.edges())


def _spectrum_dict(g: Graph, tol):
    spec = eigenvalues(g, tol)
    return json.loads(spec.to_json())


def cmd_spectrum(args) -> int:
    g = _graph(args.graph)
    spec = eigenvalues(g, args.tol)
    if args.json:
        d = json.loads(spec.to_json())
        d["singular_values"] = singular_values(g, args.tol)
        d["energy"] = energy(g, args.tol)
        d["inertia"] = list(inertia(g))
        print(json.dumps(d, indent=1))
        return 0
    print(f"graph {write_graph6(g)}  n={g.n} m={g.m}")
    print(f"{'eigenvalue':>22}  mult")
    for v, m in spec.groups:
        print(f"{v:>22.12f}  {m}")
    print(f"energy   {energy(g, args.tol):.12f}")
    print(f"inertia  {tuple(inertia(g))}")
    return 0


def cmd_charpoly(args) -> int:
    g = _graph(args.graph)
    p = char_poly(g)
    q = squared_char_poly(g)
    i = inertia(g)
    if args.json:
        _out({"char_poly": p.to_json(), "squared_char_poly": q.to_json(), "inertia": list(i)})
        return 0
    print(f"P(x)     = {p}")
    print(f"P_A2(x)  = {q}")
    print(f"inertia  = {tuple(i)}  rank = {i.positive + i.negative}")
    return 0


def cmd_classify(args) -> int:
    g, h = _graph(args.left), _graph(args.right)
    report = classify_pair(g, h)
    if args.json:
        d = report.as_dict()
        d["left"], d["right"] = write_graph6(g), write_graph6(h)
        _out(d)
        return 0
    rows = [
        ("cospectral", report.cospectral),
        ("singularly cospectral", report.singularly_cospectral),
        ("almost cospectral", report.almost_cospectral),
        ("equienergetic", f"{report.equienergetic} ({'exact' if report.equienergetic_exact else 'numeric'})"),
        ("NCSC", report.ncsc),
    ]
    for name, val in rows:
        print(f"{name:<24}{val}")
    print("filters: " + ", ".join(f"{k}={v}" for k, v in report.filters.items()))
    print(f"inertia: {tuple(report.inertia_left)} vs {tuple(report.inertia_right)}")
    return 0


def _construct(args) -> list[Graph]:
    k = args.kind
    if k == "tensor-k2":
        return [C.tensor_k2(_graph(args.base))]
    if k == "double":
        return [C.double(_graph(args.base))]
    if k in ("union", "strong", "cartesian", "tensor"):
        fn = {
            "union": C.disjoint_union,
            "strong": C.strong_product,
            "cartesian": C.cartesian_product,
            "tensor": C.tensor_product,
        }[k]
        return [fn(_graph(args.left), _graph(args.right))]
    if k == "add-vertex":
        base = _graph(args.base)
        s = [int(x) - args.one_based for x in args.set.split(",") if x.strip()]
        return [C.add_vertex(base, s)]
    if k == "gknj":
        return [C.family_gknj(args.n, args.j)]
    if k == "hknj":
        return [C.family_hknj(args.n, args.j)]
    if k == "coalesce":
        off = args.one_based
        return [C.coalesce(_graph(args.left), args.lv - off, _graph(args.right), args.rv - off)]
    if k == "chain":
        return list(C.coalesce_chain(args.n, args.j, args.k))
    if k == "delete-vertex":
        return [C.delete_vertex(_graph(args.base), args.v - args.one_based)]
    if k == "figure":
        figs = all_figures()
        if args.name not in figs:
            raise InputError(f"unknown figure {args.name!r}; choose from {sorted(figs)}")
        return [figs[args.name]]
    raise InputError(f"unknown construction {k!r}")


def cmd_construct(args) -> int:
    try:
        graphs = _construct(args)
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        out = []
        for g in graphs:
            d = {"graph6": write_graph6(g), "n": g.n, "m": g.m, "label": g.label}
            if args.spectrum:
                d["spectrum"] = _spectrum_dict(g, args.tol)
            out.append(d)
        _out(out)
        return 0
    for g in graphs:
        print(write_graph6(g))
        if args.edges:
            print("  edges: " + _edge_text(g, args.one_based))
        if args.spectrum:
            print("  spectrum: " + eigenvalues(g, args.tol).to_json())
    return 0


def cmd_walks(args) -> int:
    g = _graph(args.graph)
    if args.max_k < 1:
        raise InputError("--max-k must be at least 1")
    prof = walk_profile(g, args.max_k)
    if args.json:
        _out({"graph6": write_graph6(g), "counts": [str(c) for c in prof.counts]})
        return 0
    print(f"{'length':>8}  closed walks")
    for k, c in enumerate(prof.counts, start=1):
        print(f"{2 * k:>8}  {c}")
    return 0


def cmd_search(args) -> int:
    try:
        fh = sys.stdin if args.input == "-" else open(args.input)
    except OSError as exc:
        raise InputError(str(exc)) from exc
    with fh:
        result = scan(fh, workers=args.workers)
    for lineno, msg in result.errors:
        print(f"line {lineno}: {msg}", file=sys.stderr)
    text = result.to_json()
    if args.report:
        with open(args.report, "w") as out:
            out.write(text + "\n")
    print(f"wall time {result.stats['wall_time']:.3f}s", file=sys.stderr)
    if args.json:
        print(text)
    else:
        s = result.stats
        print(
            f"scanned {s['graphs_scanned']} graphs ({s['unique_graphs']} unique), "
            f"{s['multi_buckets']} SC classes with >1 member, "
            f"{s['ncsc_pairs']} NCSC pairs, {s['cospectral_pairs']} cospectral pairs"
        )
        for b in result.buckets:
            if b.ncsc_pairs:
                print(f"  bucket [{b.sc_key.decode()}]: " + " ".join(b.members))
    return 0


def cmd_verify(args) -> int:
    name = args.suite or args.family
    if name is None:
        raise InputError("give --suite NAME (or --family NAME)")
    names = sorted(SUITES) if name == "all" else [name]
    reports = []
    for nm in names:
        if nm not in SUITES:
            raise InputError(f"unknown suite {nm!r}; choose from {sorted(SUITES)} or 'all'")
        kwargs = {}
        if args.n_max is not None:
            key = {"cycles": "j_max", "rowlinson": "n_max", "schwenk": "n_max"}.get(nm, "n_max")
            kwargs[key] = args.n_max
        if args.trials is not None and nm in ("rowlinson", "schwenk"):
            kwargs["trials"] = args.trials
        if args.seed is not None and nm in ("rowlinson", "schwenk"):
            kwargs["seed"] = args.seed
        if nm == "walks":
            kwargs["workers"] = args.workers
        try:
            reports.append(SUITES[nm](**kwargs))
        except TypeError as exc:
            raise InputError(str(exc)) from exc
    if args.json:
        _out([r.as_dict() for r in reports])
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:10]:
                print(f"  {f}")
    return 0 if all(r.ok for r in reports) else 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scgraphs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, tol=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if tol:
            sp.add_argument("--tol", type=float, default=None, help="eigenvalue clustering tolerance")

    sp = sub.add_parser("spectrum", help="numeric spectrum, energy, inertia")
    sp.add_argument("--graph", required=True)
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("charpoly", help="exact characteristic polynomials")
    sp.add_argument("--graph", required=True)
    common(sp, tol=False)
    sp.set_defaults(func=cmd_charpoly)

    sp = sub.add_parser("classify", help="classify a pair of graphs")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    common(sp, tol=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("construct", help="build a graph")
    sp.add_argument(
        "kind",
        choices=[
            "tensor-k2", "double", "union", "strong", "cartesian", "tensor",
            "add-vertex", "delete-vertex", "gknj", "hknj", "coalesce", "chain", "figure",
        ],
    )
    sp.add_argument("--base")
    sp.add_argument("--left")
    sp.add_argument("--right")
    sp.add_argument("--lv", type=int)
    sp.add_argument("--rv", type=int)
    sp.add_argument("--v", type=int)
    sp.add_argument("--set", help="comma-separated neighbour set for add-vertex")
    sp.add_argument("--n", type=int)
    sp.add_argument("--j", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--name", help="figure name, e.g. fig4_H1")
    sp.add_argument("--one-based", action="store_true", help="vertex numbers in and out start at 1")
    sp.add_argument("--edges", action="store_true", help="also print the edge list")
    sp.add_argument("--spectrum", action="store_true", help="also print the spectrum")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("walks", help="closed-walk counts of even length")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--max-k", type=int, required=True)
    common(sp, tol=False)
    sp.set_defaults(func=cmd_walks)

    sp = sub.add_parser("search", help="scan a graph6 file for SC classes")
    sp.add_argument("--input", required=True, help="graph6 file, '-' for stdin")
    sp.add_argument("--workers", type=int, default=default_workers())
    sp.add_argument("--report", help="write the JSON report here")
    common(sp, tol=False)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite")
    sp.add_argument("--family", help="alias of --suite")
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--workers", type=int, default=default_workers())
    common(sp, tol=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", None) is not None and args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (InputError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TheoremViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
