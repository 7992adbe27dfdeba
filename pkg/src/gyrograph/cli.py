"""The ``gyro`` command.

Exit codes: 0 success, 1 usage error (or a failing ``reproduce`` run),
2 search capacity exceeded, 3 a table or graph failed validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import analysis as an
from . import catalog, io, reproduce
from .core import GyroGroup, StructureError, validate
from .graphs import MultiGraph, g_graph, l_cayley, line_graph, r_cayley

OK, USAGE, CAPACITY, INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def split_labels(text: str) -> list[str]:
    """Split on commas that are not inside parentheses: ``(3,0),(4,0)`` gives two labels."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    if any(not x for x in out):
        raise UsageError(f"empty label in generator list {text!r}")
    return out


def _read(source: str) -> str:
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"{source!r} is neither a catalog key nor a readable file; "
                         f"catalog keys: {', '.join(catalog.keys())}")
    return path.read_text()


def load_group(source: str, allow_errata: bool = False) -> GyroGroup:
    if source in catalog.keys():
        return catalog.group(source)
    if source in catalog.RAW_TABLES:
        table = catalog.RAW_TABLES[source]
        report = validate(table)
        if not report.passed:
            raise StructureError(f"{source} fails: {', '.join(report.failures())}", report)
        return GyroGroup(table, name=source)
    return io.table_from_json(_read(source), allow_errata=allow_errata)


def generators(G: GyroGroup, labels: str | None) -> list[int]:
    if not labels:
        raise UsageError("a generator list is required (-S)")
    try:
        return [G.element(x) for x in split_labels(labels)]
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad generator list {labels!r}: {exc}") from None


def build_graph(args) -> MultiGraph:
    """A graph from a graph JSON file, or built from a group source and ``-S``."""
    src = args.source
    if src not in catalog.keys() and src not in catalog.RAW_TABLES and Path(src).is_file():
        text = Path(src).read_text()
        if io.is_graph_document(text):
            return io.graph_from_json(text)
    G = load_group(src, args.allow_errata)
    S = generators(G, args.S)
    base = getattr(args, "base", "ggraph")
    if base == "left":
        return l_cayley(G, S, allow_identity=args.allow_identity)
    if base == "right":
        return r_cayley(G, S, allow_identity=args.allow_identity)
    return g_graph(G, S, allow_identity=args.allow_identity)


def emit_graph(g: MultiGraph, fmt: str) -> str:
    if fmt == "dot":
        return io.to_dot(g)
    if fmt == "text":
        lines = [f"{g.kind}: {g.n} vertices, {len(g.edges)} edges ({g.edge_count()} with multiplicity)"]
        lines += [f"  {g.vertex_name(u)} -- {g.vertex_name(v)}" + (f"  p={p}" if p > 1 else "")
                  for (u, v), p in g.edges.items()]
        lines += [f"  warning: {w}" for w in g.warnings]
        return "\n".join(lines) + "\n"
    return io.graph_to_json(g)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def group_info(G: GyroGroup) -> dict:
    elements = []
    for s in G.elements:
        cyc = G.cyclic_subgyrogroup(s)
        elements.append({
            "label": G.labels[s],
            "inverse": G.labels[G.left_inverse(s)],
            "order": len(cyc),
            "cyclic": [G.labels[x] for x in cyc],
            "cyclic_is_L_subgyrogroup": G.is_L_subgyrogroup(cyc) if G.is_subgyrogroup(cyc) else None,
        })
    nontrivial = sorted({str(G.gyration(a, b)) for a in G.elements for b in G.elements} - {"()"})
    return {
        "name": G.name,
        "order": G.order,
        "identity": G.labels[G.identity],
        "gyrocommutative": G.is_gyrocommutative(),
        "skew_left_loop": G.has_skew_left_loop(),
        "nontrivial_gyrations": nontrivial,
        "elements": elements,
    }


# -- verbs -----------------------------------------------------------------------

def cmd_validate(args, out) -> int:
    src = args.source
    if src in catalog.keys():
        report = catalog.group(src).validate()
    elif src in catalog.RAW_TABLES:
        report = catalog.check_raw(src)
    else:
        try:
            doc = io.parse_table(_read(src))
        except io.FormatError as exc:
            print(f"invalid table file: {exc}", file=sys.stderr)
            return INVALID
        report = validate(doc["table"], doc["identity"])
    out.write(_json(report.to_dict()) if args.format == "json" else str(report) + "\n")
    return OK if report.passed else INVALID


def cmd_info(args, out) -> int:
    info = group_info(load_group(args.source, args.allow_errata))
    if args.format == "json":
        out.write(_json(info))
        return OK
    out.write(f"{info['name']}: order {info['order']}, identity {info['identity']}, "
              f"gyrocommutative {info['gyrocommutative']}, skew left loop {info['skew_left_loop']}\n")
    out.write(f"nontrivial gyrations: {', '.join(info['nontrivial_gyrations']) or 'none'}\n")
    for e in info["elements"]:
        out.write(f"  {e['label']:>6}  inverse {e['inverse']:>6}  order {e['order']:>2}  "
                  f"<s> = {{{', '.join(e['cyclic'])}}}"
                  f"{'  L-subgyrogroup' if e['cyclic_is_L_subgyrogroup'] else ''}\n")
    return OK


def cmd_ggraph(args, out) -> int:
    args.base = "ggraph"
    out.write(emit_graph(build_graph(args), args.format))
    return OK


def cmd_cayley(args, out) -> int:
    args.base = args.side
    out.write(emit_graph(build_graph(args), args.format))
    return OK


def cmd_linegraph(args, out) -> int:
    out.write(emit_graph(line_graph(build_graph(args)), args.format))
    return OK


def cmd_analyze(args, out) -> int:
    checks, other = [], None
    for item in split_labels(args.checks):
        name, _, path = item.partition("=")
        if name not in an.CHECKS:
            raise UsageError(f"unknown check {name!r}; choose from {', '.join(an.CHECKS)}")
        if name == "iso":
            if not path:
                raise UsageError("iso needs a second graph: iso=<other.json>")
            other = io.graph_from_json(_read(path))
        checks.append(name)
    report = an.analyze(build_graph(args), checks, other)
    out.write(_json(report.to_dict()))
    return OK


def cmd_catalog(args, out) -> int:
    if args.action == "list":
        rows = [{"key": e.key, "order": e.group.order, "errata": bool(e.errata),
                 "provenance": e.provenance} for e in catalog.entries()]
        rows += [{"key": k, "order": len(t), "errata": True, "provenance": "as printed, fails validation"}
                 for k, t in catalog.RAW_TABLES.items()]
        if args.format == "json":
            out.write(_json(rows))
        else:
            for r in rows:
                out.write(f"{r['key']:<22} {r['order']:>3}  {'errata' if r['errata'] else '':<6}  "
                          f"{r['provenance']}\n")
        return OK
    if not args.key:
        raise UsageError("catalog dump needs a key")
    if args.key in catalog.RAW_TABLES:
        out.write(io.raw_table_to_json(catalog.RAW_TABLES[args.key], args.key))
        return OK
    try:
        entry = catalog.get(args.key)
    except catalog.UnknownKeyError as exc:
        raise UsageError(str(exc)) from None
    out.write(io.table_to_json(entry.group))
    return OK


def cmd_dihedralize(args, out) -> int:
    D = catalog.dihedralize(load_group(args.source, args.allow_errata))
    out.write(io.table_to_json(D) if args.format != "text" else str(D.validate()) + "\n")
    return OK


def cmd_reproduce(args, out) -> int:
    results = reproduce.run_all()
    if args.format == "json":
        out.write(_json([r.__dict__ for r in results]))
    else:
        out.write(reproduce.format_table(results))
    return OK if all(r.passed for r in results) else USAGE


# -- parser ----------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gyro", description="Finite gyro-groups, G-graphs and Cayley graphs.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help, source=True, gens=False, fmt=("json", "dot", "text"), default="json"):
        sp = sub.add_parser(name, help=help)
        if source:
            sp.add_argument("source", help="catalog key or JSON file")
        if gens:
            sp.add_argument("-S", metavar="LABELS", help="comma-separated generator labels")
            sp.add_argument("--allow-identity", action="store_true",
                            help="accept the identity as a generator")
        sp.add_argument("--format", choices=fmt, default=default)
        sp.add_argument("--allow-errata", action="store_true",
                        help="accept tables failing only G3, G4 or the automorphism check")
        sp.set_defaults(fn=fn)
        return sp

    verb("validate", cmd_validate, "check a table against the axioms", fmt=("json", "text"))
    verb("info", cmd_info, "summarise a gyro-group", fmt=("json", "text"))
    verb("ggraph", cmd_ggraph, "build a G-graph", gens=True)
    sp = verb("cayley", cmd_cayley, "build a left or right Cayley graph", gens=True)
    sp.add_argument("--side", choices=("left", "right"), default="left")
    sp = verb("linegraph", cmd_linegraph, "line graph of a graph file or of a built graph", gens=True)
    sp.add_argument("--base", choices=("ggraph", "left", "right"), default="ggraph",
                    help="graph to build when the source is a group")
    sp = verb("analyze", cmd_analyze, "structural analysis report", gens=True, fmt=("json",))
    sp.add_argument("--base", choices=("ggraph", "left", "right"), default="ggraph")
    sp.add_argument("--checks", default="comps,degrees,shape,vt,et,ham",
                    help="comma-separated subset of " + ",".join(an.CHECKS[:-1]) + ",iso=<other.json>")
    sp = verb("catalog", cmd_catalog, "list or dump embedded tables", source=False, fmt=("json", "text"))
    sp.add_argument("action", choices=("list", "dump"))
    sp.add_argument("key", nargs="?")
    verb("dihedralize", cmd_dihedralize, "dihedralization of a gyro-group", fmt=("json", "text"))
    verb("reproduce", cmd_reproduce, "recompute every published claim", source=False,
         fmt=("text", "json"), default="text")
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.fn(args, out)
    except UsageError as exc:
        print(f"gyro: {exc}", file=sys.stderr)
        return USAGE
    except an.CapacityError as exc:
        print(f"gyro: {exc}", file=sys.stderr)
        return CAPACITY
    except StructureError as exc:
        print(f"gyro: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report, file=sys.stderr)
        return INVALID
    except io.FormatError as exc:
        print(f"gyro: {exc}", file=sys.stderr)
        return INVALID
    except ValueError as exc:
        print(f"gyro: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
