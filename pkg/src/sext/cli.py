"""``sext`` command-line workbench.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from sext.catalog import catalog_from_selector
from sext.claims import spotcheck_claims
from sext.errors import ClosureError, SextError
from sext.expr import parse_expr
from sext.extension import ExtensionClass, build_extension
from sext.iso import find_isomorphism
from sext.semigroup import FiniteSemigroup, PropertyReport, classify, format_cay, parse_cay
from sext.theorems import THEOREMS, verify_theorem
from sext.upfamily import CLASSES, enumerate_class

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_CATALOGS = ("exhaustive:3", "curated:4")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read_cay(path: str) -> FiniteSemigroup:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SextError(f"cannot read {path}: {exc.strerror}") from None
    return parse_cay(text)


def _load_input(args) -> tuple[str, FiniteSemigroup]:
    if args.expr is not None:
        return args.expr, parse_expr(args.expr)
    return args.cay, _read_cay(args.cay)


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr", help='constructor expression, e.g. "L1+C2" or "L(2)xC(2)"')
    src.add_argument("--cay", help="path to a .cay Cayley table")


def _ext_labels(ext, base: FiniteSemigroup) -> list[str]:
    return [u.literal(base.labels) for u in ext.elements]


def noncommuting_idempotent_pairs(s: FiniteSemigroup, idem: Sequence[int]) -> list[tuple[int, int]]:
    t = s.table
    return [(e, f) for k, e in enumerate(idem) for f in idem[k + 1:] if t[e][f] != t[f][e]]


# -- subcommands ---------------------------------------------------------------------

def cmd_build(args, out) -> int:
    name, x = _load_input(args)
    ext = build_extension(x, ExtensionClass.parse(args.ext))
    s = ext.semigroup
    if args.out == "table":
        out.write(format_cay(s))
    elif args.out == "elements":
        for u in ext.elements:
            out.write(u.literal() + "\n")
    else:
        out.write(_dump({
            "input": name,
            "extension": ext.ext.value,
            "order": s.order,
            "elements": [u.literal() for u in ext.elements],
            "element_labels": _ext_labels(ext, x),
            "embed": list(ext.embed_index),
            "table": [list(r) for r in s.table],
        }))
    return EXIT_OK


def _select(report: PropertyReport, props: Optional[list[str]]) -> list[str]:
    if not props:
        return list(PropertyReport.FLAGS)
    bad = [p for p in props if p not in PropertyReport.FLAGS]
    if bad:
        raise SextError(f"unknown properties {', '.join(bad)}; choose from {', '.join(PropertyReport.FLAGS)}")
    return props


def cmd_check(args, out) -> int:
    name, x = _load_input(args)
    if args.ext:
        ext = build_extension(x, ExtensionClass.parse(args.ext))
        s, labels = ext.semigroup, _ext_labels(ext, x)
    else:
        s, labels = x, list(x.labels)
    report = classify(s)
    props = _select(report, args.props.split(",") if args.props else None)
    pairs = noncommuting_idempotent_pairs(s, report.idempotent_set)
    if args.format == "json":
        full = report.to_dict(labels)
        doc = {
            "input": name,
            "extension": args.ext or "base",
            "order": s.order,
            "properties": {p: full[p] for p in props},
            "witness": {p: full["witness"][p] for p in props if p in full["witness"]},
            "witness_labels": {p: full["witness_labels"][p] for p in props if p in full["witness_labels"]},
            "idempotents": [labels[i] for i in report.idempotent_set],
        }
        if "idempotents_commute" in props or "inverse" in props:
            doc["noncommuting_idempotent_pairs"] = [[labels[e], labels[f]] for e, f in pairs]
        out.write(_dump(doc))
    else:
        out.write(f"{name} {args.ext or 'base'}: order {s.order}\n")
        for p in props:
            line = f"  {p}: {str(getattr(report, p)).lower()}"
            if p in report.witness:
                w = report.witness[p]
                shown = [labels[w[0]], *map(str, w[1:])] if p == "sub_clifford" else [labels[i] for i in w]
                line += "  witness: " + ", ".join(shown)
            out.write(line + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    catalogs = [catalog_from_selector(sel) for sel in (args.catalog or DEFAULT_CATALOGS)]
    reports = [verify_theorem(t, c) for t in theorems for c in catalogs]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        out.write(_dump({"passed": ok, "reports": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            out.write(f"{r.theorem} over {r.catalog}: {'PASS' if r.passed else 'FAIL'} "
                      f"({len(r.entries)} entries, {len(r.skipped)} skipped)\n")
            out.write(f"  satisfiers: {', '.join(r.satisfiers) or '-'}\n")
            for e in r.entries:
                if not e.equivalent:
                    out.write(f"  DISAGREEMENT {e.name}: {e.conditions}\n")
            for inst, hit in r.family_coverage.items():
                if hit is None:
                    out.write(f"  family instance {inst} not among satisfiers\n")
            for e in r.entries:
                if e.also_matches:
                    out.write(f"  note: {e.name} matches {e.family_match} and {', '.join(e.also_matches)}\n")
            for sk in r.skipped:
                out.write(f"  skipped {sk['name']}: {sk['reason']}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_iso(args, out) -> int:
    a, b = _read_cay(args.a), _read_cay(args.b)
    w = find_isomorphism(a, b, anti=args.anti)
    if w is None:
        out.write("not isomorphic\n")
        return EXIT_FAIL
    kind = "anti-isomorphic" if args.anti else "isomorphic"
    out.write(f"{kind}\n")
    for i, j in enumerate(w.mapping):
        out.write(f"{a.labels[i]} -> {b.labels[j]}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    fams = enumerate_class(args.n, args.cls)
    if args.format == "json":
        out.write(_dump({"n": args.n, "class": args.cls, "count": len(fams),
                         "families": [u.literal() for u in fams]}))
    else:
        for u in fams:
            out.write(u.literal() + "\n")
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    cat = catalog_from_selector(args.selector)
    if args.format == "json":
        out.write(_dump({
            "selector": cat.selector,
            "provenance": cat.provenance,
            "count": len(cat),
            "entries": [{"name": e.name, "order": e.semigroup.order, "aliases": list(e.aliases),
                         "table": [list(r) for r in e.semigroup.table]} for e in cat],
        }))
    else:
        out.write(f"{cat.provenance}: {len(cat)} semigroups\n")
        for e in cat:
            alias = f"  ({', '.join(e.aliases)})" if e.aliases else ""
            out.write(f"{e.name}  order {e.semigroup.order}{alias}\n")
    return EXIT_OK


def cmd_spotcheck(args, out) -> int:
    results = spotcheck_claims()
    ok = all(r.passed for r in results)
    if args.format == "json":
        out.write(_dump({"passed": ok, "checks": [r.to_dict() for r in results]}))
    else:
        for r in results:
            out.write(f"({r.key}) {r.semigroup}: {'PASS' if r.passed else 'FAIL'}  {r.title}\n")
            for f in r.facts:
                if not f.holds:
                    out.write(f"    failed: {f.description}  [{f.detail}]\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sext", description="Finite semigroups and their upfamily extensions.")
    sub = parser.add_subparsers(dest="command", required=True)
    ext_choices = [c.value for c in ExtensionClass]

    p = sub.add_parser("build", help="build an extension and print it")
    _add_input(p)
    p.add_argument("--ext", required=True, choices=ext_choices)
    p.add_argument("--out", choices=("table", "elements", "json"), default="table")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="classify a semigroup or one of its extensions")
    _add_input(p)
    p.add_argument("--ext", choices=ext_choices, help="classify this extension instead of the input itself")
    p.add_argument("--props", help="comma-separated property names (default: all)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="verify a classification theorem over catalogs")
    p.add_argument("--theorem", required=True, choices=(*THEOREMS, "all"))
    p.add_argument("--catalog", action="append",
                   help="exhaustive:K or curated[:K]; repeatable (default: exhaustive:3 and curated:4)")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="search for an isomorphism between two .cay tables")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--anti", action="store_true", help="search for anti-isomorphisms instead")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("enumerate", help="list every upfamily of a class on an n-point set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="list a catalog of small semigroups")
    p.add_argument("--selector", default="exhaustive:3")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("spotcheck", help="reproduce the explicit product computations")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_spotcheck)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ClosureError as exc:
        print(f"sext: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SextError as exc:
        print(f"sext: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
