import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from gyrograph import analysis as an
from gyrograph import catalog
from gyrograph.graphs import g_graph, l_cayley

from conftest import make_graph, weighted_nx


@st.composite
def multigraphs(draw, max_n=7, max_p=2):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, {e: draw(st.integers(1, max_p)) for e in chosen})


def _nx_automorphisms(g):
    h = weighted_nx(g)
    return list(GraphMatcher(h, h, edge_match=lambda a, b: a["p"] == b["p"]).isomorphisms_iter())


def _orbits_from(perms, items, act):
    orbit = {}
    for x in items:
        orbit[x] = frozenset(act(f, x) for f in perms)
    return set(orbit.values())


def _canon(e):
    return (min(e), max(e))


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_basic_structure_against_networkx(g):
    h = weighted_nx(g)
    assert an.components(g) == sorted(sorted(c) for c in nx.connected_components(h))
    assert an.is_bipartite(g) == nx.is_bipartite(h)
    assert an.is_connected(g) == (g.n <= 1 or nx.is_connected(h))


@settings(max_examples=150, deadline=None)
@given(multigraphs(), st.randoms(use_true_random=False))
def test_isomorphic_finds_hidden_relabelling(g, rnd):
    pi = list(range(g.n))
    rnd.shuffle(pi)
    h = make_graph(g.n, {(pi[u], pi[v]): p for (u, v), p in g.edges.items()})
    f = an.isomorphic(g, h)
    assert f is not None
    assert all(h.multiplicity(f[u], f[v]) == p for (u, v), p in g.edges.items())


@settings(max_examples=200, deadline=None)
@given(multigraphs(max_n=6), multigraphs(max_n=6))
def test_isomorphic_agrees_with_networkx(g, h):
    expected = g.n == h.n and nx.is_isomorphic(weighted_nx(g), weighted_nx(h),
                                               edge_match=lambda a, b: a["p"] == b["p"])
    assert (an.isomorphic(g, h) is not None) == expected


@settings(max_examples=120, deadline=None)
@given(multigraphs(max_n=7))
def test_orbits_match_full_automorphism_group(g):
    autos = _nx_automorphisms(g)
    orbits = an.automorphism_orbits(g)
    assert {frozenset(o) for o in orbits.vertex_orbits} == \
        _orbits_from(autos, range(g.n), lambda f, x: f[x])
    assert {frozenset(o) for o in orbits.edge_orbits} == \
        _orbits_from(autos, list(g.edges), lambda f, e: _canon((f[e[0]], f[e[1]])))
    for f in orbits.generators:
        assert all(g.multiplicity(f[u], f[v]) == p for (u, v), p in g.edges.items())


def _brute_hamiltonian(g):
    if g.n < 3:
        return False
    for rest in itertools.permutations(range(1, g.n)):
        cyc = (0,) + rest
        if all(g.multiplicity(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


@settings(max_examples=200, deadline=None)
@given(multigraphs(max_n=8, max_p=1))
def test_hamiltonian_against_brute_force(g):
    if g.n < 3:
        with pytest.raises(ValueError):
            an.hamiltonian_cycle(g)
        return
    cyc = an.hamiltonian_cycle(g)
    assert (cyc is not None) == _brute_hamiltonian(g)
    if cyc is not None:
        assert an.verify_hamiltonian_cycle(g, cyc)


def test_hamiltonian_ignores_multiplicity():
    g = make_graph(3, {(0, 1): 2, (1, 2): 1, (0, 2): 3})
    assert an.hamiltonian_cycle(g) is not None
    assert an.hamiltonian_cycle(make_graph(4, {(0, 1): 2, (1, 2): 2, (2, 3): 2})) is None


def test_unbalanced_bipartite_is_not_hamiltonian():
    k23 = make_graph(5, {(a, b): 1 for a in (0, 1) for b in (2, 3, 4)})
    assert an.hamiltonian_cycle(k23) is None


def test_large_dense_graph_is_fast():
    g = g_graph(catalog.group("G4"), range(8, 16))
    cyc = an.hamiltonian_cycle(g)
    assert cyc is not None and an.verify_hamiltonian_cycle(g, cyc)
    orbits = an.automorphism_orbits(g)
    assert len(orbits.vertex_orbits) == 1


def test_capacity_limit():
    big = make_graph(65, {(i, i + 1): 1 for i in range(64)})
    with pytest.raises(an.CapacityError):
        an.automorphism_orbits(big)
    with pytest.raises(an.CapacityError):
        an.hamiltonian_cycle(big)
    assert an.is_connected(big)


@pytest.mark.parametrize("edges,n,shape", [
    ({(i, (i + 1) % 6): 1 for i in range(6)}, 6, "C6"),
    ({(a, b): 1 for a in (0, 1) for b in (2, 3, 4)}, 5, "K2,3"),
    ({(a, b): 2 for a in (0, 1) for b in (2, 3)}, 4, "K2,2(p=2)"),
    ({(0, 1): 1, (1, 2): 1}, 3, "K1,2"),
    ({(0, 1): 1, (0, 2): 1, (1, 2): 1}, 3, "C3"),
    ({(0, 1): 1, (2, 3): 1}, 4, "none"),
    ({(a, b): 1 for a in (0, 1) for b in (2, 3)} | {(0, 2): 2}, 4, "none"),
])
def test_recognize(edges, n, shape):
    assert str(an.recognize(make_graph(n, edges))) == shape


def test_transitivity_examples():
    G8 = catalog.group("G8-example")
    c8 = g_graph(G8, [1, 3])
    assert an.is_symmetric(c8)
    assert an.is_edge_transitive(c8, cross_check=True)
    assert not an.is_vertex_transitive(l_cayley(G8, [1, 2, 3]))
    assert an.is_vertex_transitive(g_graph(catalog.group("G16"), [8, 9]))
    path = make_graph(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1})
    assert not an.is_vertex_transitive(path)
    assert not an.is_edge_transitive(path)
    star = make_graph(4, {(0, 1): 1, (0, 2): 1, (0, 3): 1})
    assert an.is_edge_transitive(star) and not an.is_vertex_transitive(star)


def test_multiplicity_breaks_edge_transitivity():
    square = {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1}
    assert an.is_edge_transitive(make_graph(4, square))
    assert not an.is_edge_transitive(make_graph(4, square | {(0, 1): 2}))


def test_find_automorphism_respects_pins():
    c4 = make_graph(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1})
    f = an.find_automorphism(c4, [(0, 1), (1, 0)])
    assert f == [1, 0, 3, 2]
    assert an.find_automorphism(c4, [(0, 0), (1, 2)]) is None


def test_analyze_report():
    g = g_graph(catalog.group("G16"), [8, 9])
    rep = an.analyze(g, ["comps", "degrees", "shape", "vt", "et", "ham", "iso"], other=g)
    assert rep.component_count == 4
    assert rep.degree_sequence == [2] * 16
    assert rep.is_regular and rep.is_bipartite
    assert rep.recognized_shape == "none"
    assert rep.is_vertex_transitive and rep.is_edge_transitive
    assert rep.is_hamiltonian is False
    assert rep.isomorphic
    d = rep.to_dict()
    assert d["component_vertex_lists"][0] == [0, 1, 8, 9]
    with pytest.raises(ValueError):
        an.analyze(g, ["iso"])
    with pytest.raises(ValueError):
        an.analyze(g, ["colour"])
    assert an.analyze(g, ["shape"]).is_vertex_transitive is None
