"""G-graphs, left/right Cayley graphs and line graphs as immutable multigraphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Sequence

from .core import GyroGroup

KINDS = ("ggraph", "lcayley", "rcayley", "line")


@dataclass(frozen=True)
class OrbitVertex:
    """One cycle of ``x -> s + x``, listed from its smallest element."""

    level: int
    orbit: tuple[int, ...]

    @property
    def anchor(self) -> int:
        return self.orbit[0]

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(self.orbit)


@dataclass(frozen=True, eq=False)
class MultiGraph:
    """Undirected multigraph with integer edge multiplicities.

    ``edges`` maps ``(u, v)`` with ``u < v`` to the multiplicity ``p >= 1``.
    Cayley graphs also keep their directed ``arcs``; the edge map is then the
    undirected projection.
    """

    kind: str
    vertices: tuple[Any, ...]
    edges: Mapping[tuple[int, int], int]
    arcs: tuple[tuple[int, int], ...] = ()
    warnings: tuple[str, ...] = ()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown graph kind {self.kind!r}")
        n = len(self.vertices)
        clean = {}
        for (u, v), p in self.edges.items():
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if p < 1:
                raise ValueError(f"edge ({u}, {v}) has multiplicity {p}")
            key = (min(u, v), max(u, v))
            if key in clean:
                raise ValueError(f"edge {key} listed twice")
            clean[key] = int(p)
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", MappingProxyType(dict(sorted(clean.items()))))
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (self.kind, self.vertices, dict(self.edges), self.arcs, self.warnings) == \
            (other.kind, other.vertices, dict(other.edges), other.arcs, other.warnings)

    __hash__ = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return self.n

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        adj: list[dict[int, int]] = [{} for _ in self.vertices]
        for (u, v), p in self.edges.items():
            adj[u][v] = p
            adj[v][u] = p
        return tuple(adj)

    def multiplicity(self, u: int, v: int) -> int:
        return self.adjacency[u].get(v, 0)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def degree(self, v: int) -> int:
        """Multiplicity-weighted degree."""
        return sum(self.adjacency[v].values())

    def is_simple(self) -> bool:
        return all(p == 1 for p in self.edges.values())

    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self.edges.values())

    def vertex_name(self, v: int) -> str:
        x = self.vertices[v]
        if isinstance(x, OrbitVertex):
            return f"L{x.level}_{x.anchor}"
        if isinstance(x, tuple):
            return f"E{x[0]}_{x[1]}"
        if self.labels:
            return self.labels[x]
        return str(x)

    def subgraph(self, keep: Iterable[int]) -> "MultiGraph":
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        edges = {(pos[u], pos[v]): p for (u, v), p in self.edges.items()
                 if u in pos and v in pos}
        arcs = tuple((pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos)
        return MultiGraph(self.kind, tuple(self.vertices[v] for v in keep), edges,
                          arcs, self.warnings, self.labels)

    def simple(self) -> "MultiGraph":
        """Same graph with every multiplicity set to 1."""
        return MultiGraph(self.kind, self.vertices, {e: 1 for e in self.edges},
                          self.arcs, self.warnings, self.labels)


def _generators(G: GyroGroup, S: Iterable[int], allow_identity: bool) -> list[int]:
    gens = list(dict.fromkeys(S))
    if not gens:
        raise ValueError("generator set must be non-empty")
    for s in gens:
        if not isinstance(s, int) or not 0 <= s < G.order:
            raise ValueError(f"generator {s!r} out of range for order {G.order}")
    if G.identity in gens and not allow_identity:
        raise ValueError("the identity is not allowed as a generator "
                         "(pass allow_identity=True to keep its singleton level)")
    return gens


def orbit_vertices(G: GyroGroup, s: int) -> list[OrbitVertex]:
    """Cycle decomposition of ``x -> s + x``, ordered by anchor."""
    T = G.table
    seen: set[int] = set()
    out = []
    for x in G.elements:
        if x in seen:
            continue
        cyc = [x]
        y = T[s][x]
        while y != x:
            cyc.append(y)
            y = T[s][y]
        seen.update(cyc)
        out.append(OrbitVertex(s, tuple(cyc)))
    return out


def g_graph(G: GyroGroup, S: Iterable[int], *, allow_identity: bool = False) -> MultiGraph:
    """The G-graph of ``G`` over the generators ``S``.

    One vertex per cycle of each left translation ``x -> s + x`` (levels in
    the order given), and a ``p``-edge between vertices of different levels
    whose cycles share ``p`` elements.
    """
    gens = _generators(G, S, allow_identity)
    vertices: list[OrbitVertex] = []
    warnings = []
    for s in gens:
        level = orbit_vertices(G, s)
        sizes = sorted({len(v.orbit) for v in level})
        if len(sizes) > 1:
            warnings.append(f"level {G.labels[s]}: cycles of unequal lengths {sizes}")
        vertices.extend(level)
    # vertex index of every element at every level
    where = [[0] * G.order for _ in gens]
    for i, v in enumerate(vertices):
        li = gens.index(v.level)
        for x in v.orbit:
            where[li][x] = i
    edges: Counter = Counter()
    for x in G.elements:
        for a, b in combinations(range(len(gens)), 2):
            u, w = where[a][x], where[b][x]
            edges[min(u, w), max(u, w)] += 1
    return MultiGraph("ggraph", tuple(vertices), dict(edges), warnings=tuple(warnings),
                      labels=G.labels)


def _cayley(G: GyroGroup, S: Iterable[int], left: bool, allow_identity: bool) -> MultiGraph:
    gens = _generators(G, S, allow_identity)
    T = G.table
    arcs = []
    for s in gens:
        for x in G.elements:
            arcs.append((x, T[s][x] if left else T[x][s]))
    arc_count = Counter(a for a in arcs if a[0] != a[1])
    edges = {}
    for (u, v), c in arc_count.items():
        key = (min(u, v), max(u, v))
        # an antiparallel pair merges into one undirected edge
        edges[key] = max(edges.get(key, 0), c, arc_count.get((v, u), 0))
    return MultiGraph("lcayley" if left else "rcayley", tuple(G.elements), edges,
                      arcs=tuple(arcs), labels=G.labels)


def l_cayley(G: GyroGroup, S: Iterable[int], *, allow_identity: bool = False) -> MultiGraph:
    """Left Cayley graph: one arc ``x -> s + x`` per generator and element."""
    return _cayley(G, S, True, allow_identity)


def r_cayley(G: GyroGroup, S: Iterable[int], *, allow_identity: bool = False) -> MultiGraph:
    """Right Cayley graph: one arc ``x -> x + s`` per generator and element."""
    return _cayley(G, S, False, allow_identity)


class NotSimpleError(ValueError):
    pass


def line_graph(graph: MultiGraph) -> MultiGraph:
    """Vertices are the edges of ``graph``; adjacent when they share an endpoint."""
    if not graph.is_simple():
        raise NotSimpleError("line graph requires simple graph")
    edge_list: Sequence[tuple[int, int]] = list(graph.edges)
    incident: list[list[int]] = [[] for _ in graph.vertices]
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    edges = {}
    for inc in incident:
        for i, j in combinations(inc, 2):
            edges[min(i, j), max(i, j)] = 1
    return MultiGraph("line", tuple(edge_list), edges)


def level_sizes(graph: MultiGraph) -> dict[int, int]:
    """Number of vertices at each level of a G-graph."""
    return dict(Counter(v.level for v in graph.vertices))
