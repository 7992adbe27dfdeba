"""Recomputation of the published claims about the catalog groups.

Each check returns a :class:`Result`; ``run_all`` evaluates every one of
them and ``format_table`` renders the pass/fail table printed by
``gyro reproduce``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from . import analysis as an
from . import catalog
from .graphs import MultiGraph, g_graph, l_cayley, level_sizes, line_graph, orbit_vertices

H4 = tuple(range(8, 16))
P4 = tuple(range(8))


@dataclass(frozen=True)
class Result:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _degree_formula_holds(G, S, g: MultiGraph) -> bool:
    """Every vertex at level ``s`` has weighted degree ``o(s) * (|S| - 1)``."""
    k = len(set(S))
    return all(g.degree(i) == G.order_of(v.level) * (k - 1) for i, v in enumerate(g.vertices))


def c1_axiom_gate() -> tuple[bool, str]:
    keys = ["L1", "O1", "K1-table9", "G15", "G16", "G4", "DihG8", "G8-example"]
    bad = [k for k in keys if not catalog.group(k).validate().passed]
    raw = catalog.check_raw("K1-table2-as-printed")
    witness = raw.witnesses.get("rows-latin")
    ok = not bad and raw.axiom_results["rows-latin"] is False and witness is not None
    return ok, f"failing entries {bad}; as-printed K(1) rows-latin witness {witness}"


def c2_two_cycles() -> tuple[bool, str]:
    G = catalog.group("G8-example")
    g = g_graph(G, [1, 2])
    comps = an.components(g)
    parts = [g.subgraph(c) for c in comps]
    shapes = [str(an.recognize(p)) for p in parts]
    ok = (g.n == 8 and len(g.edges) == 8 and g.is_simple() and len(comps) == 2
          and an.isomorphic(parts[0], parts[1]) is not None and shapes == ["C4", "C4"]
          and G.left_generated([1, 2]) != frozenset(G.elements))
    return ok, f"{g.n} vertices, {len(g.edges)} edges, components {shapes}"


def c3_eight_cycle() -> tuple[bool, str]:
    G = catalog.group("G8-example")
    shape = an.recognize(g_graph(G, [1, 3]))
    ok = str(shape) == "C8" and G.left_generated([1, 3]) == frozenset(G.elements)
    return ok, f"shape {shape}"


def c4_connectivity_sweep() -> tuple[bool, str]:
    counter = []
    checked = 0
    for entry in catalog.entries():
        G = entry.group
        if G.order > 16:
            continue
        pool = [x for x in G.elements if x != G.identity]
        everything = frozenset(G.elements)
        for k in (1, 2, 3):
            for S in combinations(pool, k):
                checked += 1
                if an.is_connected(g_graph(G, S)) != (G.left_generated(S) == everything):
                    counter.append((entry.key, S))
    return not counter, f"{checked} generator sets, counterexamples {counter[:5]}"


def c5_remarks() -> tuple[bool, str]:
    k1 = g_graph(catalog.group("K1-table9"), [5, 7])
    m1 = g_graph(catalog.group("M1-as-printed"), [5, 7])
    o1 = g_graph(catalog.group("O1"), [5, 7])
    shapes = [an.recognize(g) for g in (k1, m1, o1)]
    ok = (str(shapes[0]) == "K2,4" and k1.is_simple()
          and all(s.kind == "complete_bipartite" and s.sizes == (2, 2) for s in shapes[1:])
          and all(set(g.edges.values()) == {2} for g in (m1, o1)))
    return ok, "shapes " + ", ".join(map(str, shapes))


def c6_g15() -> tuple[bool, str]:
    G = catalog.group("G15")
    g = g_graph(G, [1, 4])
    shape = an.recognize(g)
    ok = (g.is_simple() and shape.kind == "complete_bipartite" and shape.sizes == (3, 5)
          and G.order_of(1) == 3 and G.order_of(4) == 5)
    return ok, f"shape {shape}, o(1)={G.order_of(1)}, o(4)={G.order_of(4)}"


def c7_g4() -> tuple[bool, str]:
    G = catalog.group("G4")
    g = g_graph(G, H4)
    cycle = an.hamiltonian_cycle(g)
    degrees = set(g.degree(v) for v in range(g.n))
    sizes = level_sizes(g)
    ok = (an.is_connected(g) and degrees == {14} and cycle is not None
          and an.verify_hamiltonian_cycle(g, cycle) and all(sizes[j] == 8 for j in H4))
    return ok, (f"{g.n} vertices, degrees {sorted(degrees)}, level sizes {sorted(set(sizes.values()))}, "
                f"cycle {'verified' if cycle else 'missing'}")


def c8_degree_formula() -> tuple[bool, str]:
    cases = [("G8-example", [1, 2]), ("G8-example", [1, 3]), ("K1-table9", [5, 7]),
             ("M1-as-printed", [5, 7]), ("O1", [5, 7]), ("G15", [1, 4]), ("G4", list(H4))]
    bad = []
    for key, S in cases:
        G = catalog.group(key)
        if not _degree_formula_holds(G, S, g_graph(G, S)):
            bad.append(key)
    G = catalog.group("G4")
    g = g_graph(G, P4, allow_identity=True)
    by_level = {}
    for i, v in enumerate(g.vertices):
        by_level.setdefault(v.level, set()).add(g.degree(i))
    levelwise = [by_level[s] for s in P4[1:]]
    expected = [{56}, {28}, {56}, {14}, {56}, {28}, {56}]
    ok = not bad and levelwise == expected and _degree_formula_holds(G, P4, g)
    return ok, f"formula failures {bad}; P(4) levels 1..7 degrees {[min(d) for d in levelwise]}"


DRAWN_CAYLEY_EDGES = {(0, 1), (2, 3), (4, 5), (6, 7), (0, 2), (1, 3), (4, 6), (5, 7),
            (0, 3), (1, 5), (2, 6), (4, 7)}


def c9_left_cayley() -> tuple[bool, str]:
    g = l_cayley(catalog.group("G8-example"), [1, 2, 3])
    vt = an.is_vertex_transitive(g)
    ok = set(g.edges) == DRAWN_CAYLEY_EDGES and not vt
    return ok, f"{len(g.edges)} edges, drawn set matched {set(g.edges) == DRAWN_CAYLEY_EDGES}, vertex-transitive {vt}"


def c10_g16_transitivity() -> tuple[bool, str]:
    G = catalog.group("G16")
    S = [1, 2, 3]
    trivial = all(G.gyration(a, s).is_identity() for a in G.elements for s in S)
    symmetric = G.is_symmetric_set(S)
    g = g_graph(G, S)
    vt = an.is_vertex_transitive(g)
    ok = trivial and symmetric and vt
    return ok, (f"gyrations trivial {trivial}, S symmetric {symmetric}, vertex-transitive {vt} "
                f"(degrees {sorted(set(an.degree_sequence(g)))}, {len(an.components(g))} components)")


DRAWN_SQUARES = [((0, 8), (1, 9), (0, 9), (1, 8)), ((2, 10), (3, 11), (2, 11), (3, 10)),
            ((4, 12), (5, 13), (4, 13), (5, 12)), ((6, 14), (7, 15), (6, 15), (7, 14))]


def c11_g16_squares() -> tuple[bool, str]:
    G = catalog.group("G16")
    g = g_graph(G, [8, 9])
    comps = [g.subgraph(c) for c in an.components(g)]
    drawn = {frozenset(frozenset(p) for p in square) for square in DRAWN_SQUARES}
    found = {frozenset(v.elements for v in c.vertices) for c in comps}
    ok = (len(comps) == 4 and all(str(an.recognize(c)) == "C4" for c in comps)
          and found == drawn and an.is_vertex_transitive(g))
    return ok, f"{len(comps)} components, labels matched {found == drawn}"


def c12_line_graph() -> tuple[bool, str]:
    G = catalog.group("G8-example")
    meet = set(G.cyclic_subgyrogroup(1)) & set(G.cyclic_subgyrogroup(3))
    gamma = g_graph(G, [1, 3])
    A = sorted((set(G.cyclic_subgyrogroup(1)) | set(G.cyclic_subgyrogroup(3))) - {G.identity})
    lg = line_graph(gamma)
    cay = l_cayley(G, A)
    ok = (meet == {G.identity} and an.isomorphic(lg, cay) is not None
          and str(an.recognize(cay)) == "C8" and an.is_symmetric(gamma))
    return ok, f"A = {A}, line graph {an.recognize(lg)}, Cayley graph {an.recognize(cay)}"


def c13_dihedralization() -> tuple[bool, str]:
    base = catalog.group("DihG8-base")
    printed = catalog.group("DihG8")
    built = catalog.dihedralize(base)
    agree = sum(built.table[a][b] == printed.table[a][b]
                for a in built.elements for b in built.elements)
    S = [built.element(x) for x in ("(3,0)", "(4,0)", "(0,1)")]
    g = g_graph(built, S)
    sizes = [level_sizes(g)[s] for s in S]
    ok = (agree == 256 and built.validate().passed and g.n == 20
          and sorted(sizes) == [4, 8, 8] and _degree_formula_holds(built, S, g))
    return ok, f"{agree}/256 entries agree, level sizes {sizes}"


def c14_property_suite() -> tuple[bool, str]:
    bad = []
    for entry in catalog.entries():
        G = entry.group
        rep = G.validate()
        derived = rep.derived_properties
        if not (rep.passed and all(derived.get(k) for k in
                                   ("two-sided-identity", "two-sided-inverse", "gyr[0,b]=id"))):
            bad.append((entry.key, "axioms"))
        if not all(G.gyration(a, G.identity).is_identity() for a in G.elements):
            bad.append((entry.key, "gyr[a,0]"))
        for s in G.elements:
            seen = [x for v in orbit_vertices(G, s) for x in v.orbit]
            if sorted(seen) != list(G.elements):
                bad.append((entry.key, f"orbits of {s}"))
    return not bad, f"{len(catalog.entries())} groups, failures {bad}"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "axiom gate", c1_axiom_gate),
    (2, "G8 with {1,2}: two 4-cycles", c2_two_cycles),
    (3, "G8 with {1,3}: 8-cycle", c3_eight_cycle),
    (4, "connectivity theorem sweep", c4_connectivity_sweep),
    (5, "complete bipartite graphs from K(1), M(1), O(1)", c5_remarks),
    (6, "G15 with {1,4}: K5,3", c6_g15),
    (7, "G(4) over H(4): connected, 14-regular, Hamiltonian", c7_g4),
    (8, "degree formula", c8_degree_formula),
    (9, "left Cayley graph of G8 with {1,2,3}", c9_left_cayley),
    (10, "G16 with {1,2,3}: vertex-transitive", c10_g16_transitivity),
    (11, "G16 with {8,9}: four 4-cycles", c11_g16_squares),
    (12, "line graph of the 8-cycle", c12_line_graph),
    (13, "dihedralization of G8", c13_dihedralization),
    (14, "axiom property suite", c14_property_suite),
]


def run(number: int) -> Result:
    for k, title, fn in CRITERIA:
        if k == number:
            t = time.perf_counter()
            passed, detail = fn()
            return Result(k, title, bool(passed), detail, time.perf_counter() - t)
    raise KeyError(f"no criterion {number}")


def run_all() -> list[Result]:
    return [run(k) for k, _, _ in CRITERIA]


def format_table(results: list[Result]) -> str:
    width = max(len(r.title) for r in results)
    lines = [f"{r.number:>2}  {'PASS' if r.passed else 'FAIL'}  {r.title:<{width}}  "
             f"{r.seconds:6.2f}s  {r.detail}" for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria pass")
    return "\n".join(lines) + "\n"
