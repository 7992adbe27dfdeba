"""Structural analysis of multigraphs.

Isomorphism and automorphism questions are answered exactly by an
individualize-and-refine backtracking search: colour refinement with
multiplicity-aware signatures prunes, and a vertex of the first smallest
non-trivial colour class is branched on. Searches are capped at
``MAX_VERTICES`` vertices.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .graphs import MultiGraph, line_graph

MAX_VERTICES = 64


class CapacityError(RuntimeError):
    pass


def _cap(*graphs: MultiGraph) -> None:
    for g in graphs:
        if g.n > MAX_VERTICES:
            raise CapacityError(f"graph has {g.n} vertices; exact search is limited to {MAX_VERTICES}")


def components(g: MultiGraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: MultiGraph) -> bool:
    return len(components(g)) <= 1


def degree_sequence(g: MultiGraph) -> list[int]:
    """Multiplicity-weighted degrees, largest first."""
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def is_regular(g: MultiGraph) -> bool:
    return len(set(degree_sequence(g))) <= 1


def bipartition(g: MultiGraph) -> tuple[list[int], list[int]] | None:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return ([v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1])


def is_bipartite(g: MultiGraph) -> bool:
    return bipartition(g) is not None


@dataclass(frozen=True)
class Shape:
    """A recognised graph family: ``cycle`` (C_n), ``complete_bipartite`` or ``none``."""

    kind: str
    sizes: tuple[int, ...] = ()
    multiplicity: int = 1

    def __str__(self):
        if self.kind == "cycle":
            return f"C{self.sizes[0]}"
        if self.kind == "complete_bipartite":
            base = f"K{self.sizes[0]},{self.sizes[1]}"
            return base if self.multiplicity == 1 else f"{base}(p={self.multiplicity})"
        return "none"


def recognize(g: MultiGraph) -> Shape:
    n = g.n
    if n >= 3 and g.is_simple() and is_connected(g) and all(g.degree(v) == 2 for v in range(n)):
        return Shape("cycle", (n,))
    parts = bipartition(g) if n >= 2 and is_connected(g) else None
    if parts:
        a, b = parts
        mults = {g.multiplicity(u, v) for u in a for v in b}
        if len(mults) == 1 and 0 not in mults:
            return Shape("complete_bipartite", tuple(sorted((len(a), len(b)))), mults.pop())
    return Shape("none")


# -- isomorphism search ------------------------------------------------------

def _refine(g1: MultiGraph, g2: MultiGraph, c1: list[int], c2: list[int]):
    """Jointly refine two colourings to a stable one; None if they diverge."""
    adj1, adj2 = g1.adjacency, g2.adjacency
    classes = len(set(c1))
    while True:
        s1 = [(c1[v], tuple(sorted((c1[u], p) for u, p in adj1[v].items()))) for v in range(g1.n)]
        s2 = [(c2[v], tuple(sorted((c2[u], p) for u, p in adj2[v].items()))) for v in range(g2.n)]
        if Counter(s1) != Counter(s2):
            return None
        ids = {s: i for i, s in enumerate(sorted(set(s1)))}
        c1 = [ids[s] for s in s1]
        c2 = [ids[s] for s in s2]
        if len(ids) == classes:
            return c1, c2
        classes = len(ids)


def _search(g1: MultiGraph, g2: MultiGraph, c1: list[int], c2: list[int]) -> list[int] | None:
    refined = _refine(g1, g2, c1, c2)
    if refined is None:
        return None
    c1, c2 = refined
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(c1):
        cells.setdefault(c, []).append(v)
    open_cells = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
    if not open_cells:
        where = {c: w for w, c in enumerate(c2)}
        f = [where[c] for c in c1]
        return f if _is_isomorphism(g1, g2, f) else None
    _, colour = min(open_cells)
    v = cells[colour][0]
    fresh = max(c1) + 1
    for w in (w for w, c in enumerate(c2) if c == colour):
        d1, d2 = list(c1), list(c2)
        d1[v] = fresh
        d2[w] = fresh
        f = _search(g1, g2, d1, d2)
        if f is not None:
            return f
    return None


def _is_isomorphism(g1: MultiGraph, g2: MultiGraph, f: Sequence[int]) -> bool:
    if sorted(f) != list(range(g2.n)) or len(g1.edges) != len(g2.edges):
        return False
    return all(g2.multiplicity(f[u], f[v]) == p for (u, v), p in g1.edges.items())


def isomorphic(g1: MultiGraph, g2: MultiGraph) -> list[int] | None:
    """A multiplicity-preserving bijection ``f`` (vertex ``v`` of g1 to ``f[v]`` of g2), or None."""
    _cap(g1, g2)
    if g1.n != g2.n or sorted(g1.edges.values()) != sorted(g2.edges.values()):
        return None
    return _search(g1, g2, [0] * g1.n, [0] * g2.n)


def find_automorphism(g: MultiGraph, pairs: Sequence[tuple[int, int]]) -> list[int] | None:
    """An automorphism sending each ``u`` to ``w`` for ``(u, w)`` in ``pairs``, or None."""
    _cap(g)
    c1, c2 = [0] * g.n, [0] * g.n
    for k, (u, w) in enumerate(pairs, start=1):
        if c1[u] or c2[w]:
            return None
        c1[u] = c2[w] = k
    return _search(g, g, c1, c2)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted((sorted(c) for c in out.values()), key=lambda c: c[0])


@dataclass
class Orbits:
    vertex_orbits: list[list[int]]
    edge_orbits: list[list[tuple[int, int]]]
    generators: list[list[int]] = field(default_factory=list)


def automorphism_orbits(g: MultiGraph) -> Orbits:
    """Vertex and edge orbits of the full multiplicity-preserving automorphism group.

    Orbits are assembled from explicitly found automorphisms; for every pair
    left unmerged the search has proved that no automorphism joins them.
    """
    _cap(g)
    base = _refine(g, g, [0] * g.n, [0] * g.n)
    colour = base[0] if base else [0] * g.n
    gens: list[list[int]] = []
    vuf = _UnionFind(range(g.n))
    euf = _UnionFind(list(g.edges))

    def absorb(f):
        gens.append(f)
        for x in range(g.n):
            vuf.union(x, f[x])
        for u, v in g.edges:
            euf.union((u, v), (min(f[u], f[v]), max(f[u], f[v])))

    reps: list[int] = []
    for v in range(g.n):
        if any(vuf.find(r) == vuf.find(v) for r in reps):
            continue
        for r in reps:
            if colour[r] != colour[v]:
                continue
            f = find_automorphism(g, [(r, v)])
            if f is not None:
                absorb(f)
                break
        else:
            reps.append(v)

    def edge_key(e):
        u, v = e
        return (tuple(sorted((colour[u], colour[v]))), g.edges[e])

    erep: list[tuple[int, int]] = []
    for e in g.edges:
        if any(euf.find(r) == euf.find(e) for r in erep):
            continue
        for r in erep:
            if edge_key(r) != edge_key(e):
                continue
            a, b = r
            c, d = e
            f = find_automorphism(g, [(a, c), (b, d)]) or find_automorphism(g, [(a, d), (b, c)])
            if f is not None:
                absorb(f)
                break
        else:
            erep.append(e)

    return Orbits(vuf.classes(), euf.classes(), gens)


def is_vertex_transitive(g: MultiGraph) -> bool:
    if g.n <= 1:
        return True
    if not is_regular(g):
        return False
    return len(automorphism_orbits(g).vertex_orbits) == 1


def is_edge_transitive(g: MultiGraph, cross_check: bool = False) -> bool:
    """Single orbit on edges.

    With ``cross_check``, a connected simple graph on at least 5 vertices is
    also tested through vertex-transitivity of its line graph (when that
    graph is small enough) and a disagreement raises ``AssertionError``.
    """
    direct = len(automorphism_orbits(g).edge_orbits) <= 1
    if cross_check and g.n >= 5 and g.is_simple() and is_connected(g) and len(g.edges) <= MAX_VERTICES:
        via_line = is_vertex_transitive(line_graph(g))
        if via_line != direct:
            raise AssertionError(f"edge orbits say {direct}, line graph says {via_line}")
    return direct


def is_symmetric(g: MultiGraph) -> bool:
    return is_vertex_transitive(g) and is_edge_transitive(g)


# -- hamiltonicity -------------------------------------------------------------

def hamiltonian_cycle(g: MultiGraph) -> list[int] | None:
    """A Hamiltonian cycle of the underlying simple graph as a vertex list, or None.

    Exact backtracking from the lowest-index vertex of minimum degree,
    branching to neighbours with fewest free neighbours first. Partial paths
    are pruned when an unvisited vertex has fewer than two usable neighbours
    or the unvisited vertices are disconnected from the path end.
    """
    _cap(g)
    n = g.n
    if n < 3:
        raise ValueError("a Hamiltonian cycle needs at least 3 vertices")
    if not is_connected(g):
        return None
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    if any(bin(m).count("1") < 2 for m in nbr):
        return None
    parts = bipartition(g)
    if parts and len(parts[0]) != len(parts[1]):
        return None

    start = min(range(n), key=lambda v: (bin(nbr[v]).count("1"), v))
    full = (1 << n) - 1
    path = [start]

    def bits(m):
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def viable(end: int, free: int) -> bool:
        # the last vertex will be a free one and must be adjacent to start
        if not nbr[start] & free:
            return False
        allowed = free | (1 << end) | (1 << start)
        for w in bits(free):
            if bin(nbr[w] & allowed).count("1") < 2:
                return False
        # the free vertices must be reachable from the path end through free vertices
        seen = 0
        frontier = nbr[end] & free
        while frontier:
            seen |= frontier
            nxt = 0
            for w in bits(frontier):
                nxt |= nbr[w]
            frontier = nxt & free & ~seen
        return seen == free

    def extend(end: int, free: int) -> bool:
        if not free:
            return bool(nbr[end] >> start & 1)
        if not viable(end, free):
            return False
        options = sorted(bits(nbr[end] & free),
                         key=lambda w: (bin(nbr[w] & free).count("1"), w))
        for w in options:
            path.append(w)
            if extend(w, free & ~(1 << w)):
                return True
            path.pop()
        return False

    return list(path) if extend(start, full & ~(1 << start)) else None


def is_hamiltonian(g: MultiGraph) -> list[int] | None:
    return hamiltonian_cycle(g)


def verify_hamiltonian_cycle(g: MultiGraph, cycle: Sequence[int]) -> bool:
    return (len(cycle) == g.n and sorted(cycle) == list(range(g.n))
            and all(g.multiplicity(cycle[i], cycle[(i + 1) % len(cycle)]) > 0
                    for i in range(len(cycle))))


# -- report --------------------------------------------------------------------

CHECKS = ("comps", "degrees", "shape", "vt", "et", "ham", "iso")


@dataclass
class AnalysisReport:
    component_count: int | None = None
    component_vertex_lists: list[list[int]] | None = None
    degree_sequence: list[int] | None = None
    is_regular: bool | None = None
    is_bipartite: bool | None = None
    recognized_shape: str | None = None
    is_vertex_transitive: bool | None = None
    is_edge_transitive: bool | None = None
    is_hamiltonian: bool | None = None
    hamiltonian_cycle: list[int] | None = None
    automorphism_generator_count: int | None = None
    isomorphism: list[int] | None = None
    isomorphic: bool | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def analyze(g: MultiGraph, checks: Sequence[str] = CHECKS[:-1],
            other: MultiGraph | None = None) -> AnalysisReport:
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    rep = AnalysisReport()
    if "comps" in checks:
        comps = components(g)
        rep.component_count = len(comps)
        rep.component_vertex_lists = comps
    if "degrees" in checks:
        rep.degree_sequence = degree_sequence(g)
        rep.is_regular = is_regular(g)
        rep.is_bipartite = is_bipartite(g)
    if "shape" in checks:
        rep.recognized_shape = str(recognize(g))
    if "vt" in checks or "et" in checks:
        orbits = automorphism_orbits(g)
        rep.automorphism_generator_count = len(orbits.generators)
        if "vt" in checks:
            rep.is_vertex_transitive = len(orbits.vertex_orbits) == 1 or g.n == 0
        if "et" in checks:
            rep.is_edge_transitive = len(orbits.edge_orbits) <= 1
    if "ham" in checks:
        cyc = hamiltonian_cycle(g) if g.n >= 3 else None
        rep.is_hamiltonian = cyc is not None
        rep.hamiltonian_cycle = cyc
    if "iso" in checks:
        if other is None:
            raise ValueError("the iso check needs a second graph")
        rep.isomorphism = isomorphic(g, other)
        rep.isomorphic = rep.isomorphism is not None
    return rep
