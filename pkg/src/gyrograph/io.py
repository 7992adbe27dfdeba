"""JSON and DOT serialization for gyro-group tables and multigraphs.

Dumps are byte-stable: keys in a fixed order, one table row, vertex or
edge per line, and a trailing newline. Loading a dump and dumping again
reproduces the input exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .core import GyroGroup, StructureError, validate
from .graphs import KINDS, MultiGraph, OrbitVertex


class FormatError(ValueError):
    """A JSON document does not match the table or graph schema."""


def _line(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def _dump(fields: list[tuple[str, Any]], block: set[str]) -> str:
    """Top-level object with one key per line; keys in ``block`` get one item per line."""
    out = ["{"]
    for i, (key, value) in enumerate(fields):
        comma = "," if i < len(fields) - 1 else ""
        if key in block and value:
            items = ",\n".join("    " + _line(x) for x in value)
            out.append(f"  {_line(key)}: [\n{items}\n  ]{comma}")
        else:
            out.append(f"  {_line(key)}: {_line(value)}{comma}")
    out.append("}")
    return "\n".join(out) + "\n"


# -- tables ----------------------------------------------------------------------

def raw_table_to_json(table, name: str = "", identity: int = 0, labels=()) -> str:
    """Dump a table without validating it (used for the as-printed tables)."""
    n = len(table)
    labels = list(labels) or [str(i) for i in range(n)]
    return _dump([("name", name), ("order", n), ("identity", identity),
                  ("labels", labels), ("table", [list(r) for r in table])], {"table"})


def table_to_json(G: GyroGroup) -> str:
    return raw_table_to_json(G.table, G.name, G.identity, G.labels)


def parse_table(text: str) -> dict:
    """Schema-checked table document; the table itself is not validated here."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "table" not in doc:
        raise FormatError("table document must be an object with a 'table' field")
    table = doc["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise FormatError("'table' must be a list of rows")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in table for x in r):
        raise FormatError("table entries must be integers")
    n = len(table)
    if n == 0:
        raise FormatError("table must have at least one row")
    if any(len(r) != n for r in table):
        raise FormatError("table must be square")
    if any(not 0 <= x < n for r in table for x in r):
        raise FormatError(f"table entries must lie in 0..{n - 1}")
    if doc.get("order", n) != n:
        raise FormatError(f"'order' is {doc['order']} but the table has {n} rows")
    labels = doc.get("labels") or [str(i) for i in range(n)]
    if not isinstance(labels, list) or len(labels) != n:
        raise FormatError(f"'labels' must list {n} strings")
    identity = doc.get("identity", 0)
    if not isinstance(identity, int) or not 0 <= identity < n:
        raise FormatError("'identity' must be an element index")
    return {"name": str(doc.get("name", "")), "order": n, "identity": identity,
            "labels": [str(x) for x in labels], "table": table}


def table_from_json(text: str, allow_errata: bool = False) -> GyroGroup:
    """Parse and validate a table document.

    Raises ``StructureError`` carrying the ``ValidationReport`` on failure.
    """
    doc = parse_table(text)
    report = validate(doc["table"], doc["identity"])
    if not report.passed:
        table_level = {"rows-latin", "G1", "G2"}
        if not allow_errata or table_level & set(report.failures()):
            raise StructureError(f"table {doc['name'] or '<unnamed>'} fails: "
                                 f"{', '.join(report.failures())}", report)
    return GyroGroup(table=doc["table"], identity=doc["identity"],
                     labels=tuple(doc["labels"]), name=doc["name"])


# -- graphs ----------------------------------------------------------------------

def _vertex_record(g: MultiGraph, i: int) -> dict:
    x = g.vertices[i]
    if isinstance(x, OrbitVertex):
        return {"id": i, "level": x.level, "orbit": list(x.orbit)}
    if isinstance(x, tuple):
        return {"id": i, "edge": list(x)}
    return {"id": i, "element": x}


def graph_to_json(g: MultiGraph) -> str:
    fields: list[tuple[str, Any]] = [
        ("kind", g.kind),
        ("vertices", [_vertex_record(g, i) for i in range(g.n)]),
        ("edges", [{"u": u, "v": v, "p": p} for (u, v), p in g.edges.items()]),
        ("warnings", list(g.warnings)),
    ]
    if g.kind in ("lcayley", "rcayley"):
        fields.append(("arcs", [list(a) for a in g.arcs]))
    if g.labels:
        fields.append(("labels", list(g.labels)))
    return _dump(fields, {"vertices", "edges", "arcs"})


def graph_from_json(text: str) -> MultiGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("kind") not in KINDS:
        raise FormatError(f"graph document needs 'kind' in {list(KINDS)}")
    try:
        records = sorted(doc["vertices"], key=lambda r: r["id"])
        if [r["id"] for r in records] != list(range(len(records))):
            raise FormatError("vertex ids must be 0..n-1")
        vertices = []
        for r in records:
            if "orbit" in r:
                vertices.append(OrbitVertex(int(r["level"]), tuple(r["orbit"])))
            elif "edge" in r:
                vertices.append(tuple(r["edge"]))
            else:
                vertices.append(int(r["element"]))
        edges = {}
        for e in doc["edges"]:
            key = (int(e["u"]), int(e["v"]))
            if key in edges or key[::-1] in edges:
                raise FormatError(f"edge {key} listed twice")
            edges[key] = int(e.get("p", 1))
        return MultiGraph(doc["kind"], tuple(vertices), edges,
                          arcs=tuple(tuple(a) for a in doc.get("arcs", ())),
                          warnings=tuple(doc.get("warnings", ())),
                          labels=tuple(doc.get("labels", ())))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed graph document: {exc!r}") from None
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def is_graph_document(text: str) -> bool:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(doc, dict) and "kind" in doc and "table" not in doc


# -- DOT -------------------------------------------------------------------------

def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: MultiGraph, name: str | None = None) -> str:
    """Undirected DOT text; a ``p``-edge becomes ``p`` parallel ``--`` lines."""
    lines = [f"graph {_quote(name or g.kind)} {{"]
    names = [g.vertex_name(v) for v in range(g.n)]
    lines += [f"  {_quote(s)};" for s in names]
    for (u, v), p in g.edges.items():
        lines += [f"  {_quote(names[u])} -- {_quote(names[v])};"] * p
    lines.append("}")
    return "\n".join(lines) + "\n"
