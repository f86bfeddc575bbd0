"""Command-line interface: analyze | color | verify | oracle | corpus | treelike.

Exit codes: 0 success, 1 internal assertion failure, 2 unparseable input,
3 coloring unavailable (not distinguishable / index out of range),
4 verification answered false, 5 theorem violation found by corpus --check.
All big integers are emitted as decimal strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .asym import asym_rooted, asym_unrooted, group_order_bound_check
from .autom import aut_order, motion
from .coloring import to_dot, unrank_distinguishing, unrank_unrooted, verify_distinguishing
from .corpus import CorpusSpec, conjecture_check, generate, run_theorem_suite
from .oracle import brute_asym
from .treelike import extract_forest, is_treelike, parse_graph_edge_list, treelike_distinguish
from .trees import (
    Coloring,
    EdgeListParseError,
    Tree,
    VertexCenter,
    center,
    parse_edge_list,
    root_at,
    serialize_edge_list,
)

SCHEMA = 1


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_tree(path: str) -> Tree:
    return parse_edge_list(_read_input(path))


def _center_json(t: Tree):
    c = center(t)
    if isinstance(c, VertexCenter):
        return {"kind": "vertex", "vertex": c.vertex}
    return {"kind": "edge", "u": c.u, "v": c.v}


def cmd_analyze(args) -> int:
    t = _load_tree(args.file)
    mot = motion(t)
    aut = aut_order(t)
    a = asym_unrooted(t)
    report = {
        "schema": SCHEMA,
        "n": t.n,
        "delta": t.delta,
        "center": _center_json(t),
        "motion": mot.to_json(),
        "aut_order": str(aut),
        "a": str(a),
        "two_distinguishable": a > 0,
        "group_order_bound": None,
    }
    if a > 0:
        chk = group_order_bound_check(t)
        report["group_order_bound"] = {"holds": chk.holds, "product": str(chk.product), "bound": str(chk.bound)}
    if mot.is_asymmetric:
        report["motion_note"] = "asymmetric: exceeds every finite threshold by convention"
    roots = []
    if args.all_roots:
        roots = list(range(t.n))
    elif args.root is not None:
        if not (0 <= args.root < t.n):
            raise EdgeListParseError(f"root {args.root} out of range 0..{t.n - 1}")
        roots = [args.root]
    if roots:
        report["roots"] = {str(w): str(asym_rooted(root_at(t, w))) for w in roots}
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    c = report["center"]
    center_txt = f"vertex {c['vertex']}" if c["kind"] == "vertex" else f"edge ({c['u']}, {c['v']})"
    print(f"n:                  {t.n}")
    print(f"max degree:         {t.delta}")
    print(f"center:             {center_txt}")
    print(f"motion:             {report['motion']}")
    print(f"|Aut|:              {aut}")
    print(f"a (unrooted):       {a}")
    print(f"2-distinguishable:  {'yes' if a > 0 else 'no'}")
    if report["group_order_bound"] is not None:
        chk = report["group_order_bound"]
        print(f"|Aut|*a <= 2^n:     {chk['product']} <= {chk['bound']} ({'ok' if chk['holds'] else 'VIOLATED'})")
    for w in roots:
        print(f"a rooted at {w}:     {report['roots'][str(w)]}")
    return 0


def cmd_color(args) -> int:
    t = _load_tree(args.file)
    if args.root is not None:
        if not (0 <= args.root < t.n):
            raise EdgeListParseError(f"root {args.root} out of range 0..{t.n - 1}")
        rt = root_at(t, args.root)
        total = asym_rooted(rt)
        unrank = lambda k: unrank_distinguishing(rt, k)
    else:
        total = asym_unrooted(t)
        unrank = lambda k: unrank_unrooted(t, k)
    if total == 0:
        print("tree is not 2-distinguishable", file=sys.stderr)
        return 3
    indices = range(args.count) if args.count is not None else [args.index]
    if any(not 0 <= k < total for k in indices):
        print(f"index out of range [0, {total})", file=sys.stderr)
        return 3
    for k in indices:
        coloring = unrank(k)
        if args.dot:
            sys.stdout.write(to_dot(t, coloring))
        else:
            print(coloring.bits())
    return 0


def cmd_verify(args) -> int:
    t = _load_tree(args.file)
    try:
        coloring = Coloring.from_bits(args.coloring)
    except ValueError as exc:
        raise EdgeListParseError(str(exc))
    if coloring.n != t.n:
        raise EdgeListParseError(f"coloring length {coloring.n} != n = {t.n}")
    if args.pin is not None and not (0 <= args.pin < t.n):
        raise EdgeListParseError(f"pin {args.pin} out of range 0..{t.n - 1}")
    ok = verify_distinguishing(t, coloring, pinned=args.pin)
    print("true" if ok else "false")
    return 0 if ok else 4


def cmd_oracle(args) -> int:
    t = _load_tree(args.file)
    report = brute_asym(t)
    out = {"schema": SCHEMA}
    out.update(report.to_json())
    print(json.dumps(out, indent=2))
    return 0


def _corpus_spec(args) -> CorpusSpec:
    if args.all_trees is not None:
        return CorpusSpec("all-trees", n=args.all_trees)
    if args.random_prufer is not None:
        return CorpusSpec("random-prufer", n=args.random_prufer, count=args.count, seed=args.seed)
    if args.caterpillar is not None:
        return CorpusSpec("caterpillar", n=args.caterpillar, count=args.count, seed=args.seed)
    if args.lobed_extremal is not None:
        return CorpusSpec("lobed-extremal", m=args.lobed_extremal)
    if args.kary is not None:
        return CorpusSpec("kary", n=args.kary[0], arity=args.kary[1])
    if args.spider is not None:
        return CorpusSpec("spider", n=args.spider[0], arity=args.spider[1])
    raise EdgeListParseError("choose a corpus family (e.g. --all-trees 8)")


def cmd_corpus(args) -> int:
    spec = _corpus_spec(args)
    trees = list(generate(spec))
    if args.check:
        report = run_theorem_suite(trees)
        conjectures = [conjecture_check(t) for t in trees]
        inconsistent = [
            {"check": "conjecture-consistency", "tree": serialize_edge_list(t)}
            for t, c in zip(trees, conjectures)
            if not c.consistent
        ]
        payload = {"schema": SCHEMA, "suite": report.to_json()}
        payload["conjecture"] = {
            "consistent": not inconsistent,
            "counterexamples": inconsistent,
        }
        if args.json:
            print(json.dumps(payload, indent=2))
        else:
            print(report.summary())
            print(f"conjecture consistent: {not inconsistent}")
            for ce in inconsistent:
                print(f"COUNTEREXAMPLE [conjecture]: {ce['tree']!r}")
        return 0 if report.ok and not inconsistent else 5
    payload = {
        "schema": SCHEMA,
        "trees": [{"n": t.n, "edges": [list(e) for e in sorted(t.edges())]} for t in trees],
    }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_treelike(args) -> int:
    g = parse_graph_edge_list(_read_input(args.file), root=args.root)
    report = is_treelike(g)
    forest = extract_forest(g)
    coloring = treelike_distinguish(g) if g.n <= 12 else None
    payload = {
        "schema": SCHEMA,
        "n": g.n,
        "root": g.root,
        "treelike": report.treelike,
        "witnesses": list(report.witnesses),
        "forest": {
            "edges": [list(e) for e in forest.edges],
            "components": [list(c) for c in forest.components],
            "component_sizes": [len(c) for c in forest.components],
        },
        "coloring": coloring.bits() if coloring is not None else None,
    }
    print(json.dumps(payload, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treesym",
        description="Symmetry invariants of finite trees and distinguishing 2-colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one tree")
    p.add_argument("file", help="edge-list file or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--root", type=int, default=None, help="also report a(T,w) for this root")
    p.add_argument("--all-roots", action="store_true", help="report a(T,w) for every root")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("color", help="emit distinguishing colorings")
    p.add_argument("file")
    p.add_argument("--index", type=int, default=0, help="class index to unrank (default 0)")
    p.add_argument("--count", type=int, default=None, help="emit classes 0..count-1 instead")
    p.add_argument("--root", type=int, default=None, help="color the rooted tree (T,w)")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of 0/1 strings")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check whether a coloring is distinguishing")
    p.add_argument("file")
    p.add_argument("--coloring", required=True, help="0/1 string in vertex order")
    p.add_argument("--pin", type=int, default=None, help="only automorphisms fixing this vertex")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force orbit census (n <= 16)")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("corpus", help="generate tree families and run the property suite")
    p.add_argument("--all-trees", type=int, default=None, metavar="N")
    p.add_argument("--random-prufer", type=int, default=None, metavar="N")
    p.add_argument("--caterpillar", type=int, default=None, metavar="N")
    p.add_argument("--lobed-extremal", type=int, default=None, metavar="M")
    p.add_argument("--kary", type=int, nargs=2, default=None, metavar=("N", "ARITY"))
    p.add_argument("--spider", type=int, nargs=2, default=None, metavar=("N", "ARITY"))
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", action="store_true", help="run the theorem and conjecture suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("treelike", help="tree-like test, forest extraction, distinguishing")
    p.add_argument("file")
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=cmd_treelike)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
