import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gyrograph import GyroGroup, Permutation, StructureError, validate
from gyrograph import catalog
from gyrograph.core import AXIOMS

from conftest import cyclic_table, product_table, relabel, symmetric_group_table


# -- permutations -------------------------------------------------------------------

def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_permutation_cycles_and_str():
    p = Permutation.from_cycles(8, [(1, 6), (2, 5)])
    assert p.cycles() == [(1, 6), (2, 5)]
    assert str(p) == "(1 6)(2 5)"
    assert str(Permutation.identity(4)) == "()"


@given(st.permutations(range(7)), st.permutations(range(7)))
def test_permutation_composition(a, b):
    p, q = Permutation(tuple(a)), Permutation(tuple(b))
    assert all((p * q)(x) == p(q(x)) for x in range(7))
    assert (p * p.inverse()).is_identity()


# -- validation -----------------------------------------------------------------------

def test_trivial_table_passes():
    assert validate([[0]]).passed


def test_non_square_table_raises():
    with pytest.raises(ValueError):
        validate([[0, 1], [1]])


@pytest.mark.parametrize("table", [cyclic_table(5), cyclic_table(12),
                                   product_table(cyclic_table(2), cyclic_table(4)),
                                   symmetric_group_table(3), symmetric_group_table(4)])
def test_groups_are_gyrogroups_with_trivial_gyrations(table):
    rep = validate(table)
    assert rep.passed
    assert all(rep.derived_properties.values())
    G = GyroGroup(table)
    assert all(G.gyration(a, b).is_identity() for a in G.elements for b in G.elements)


def test_repeated_row_entry_reports_latin_witness_and_skips_later_checks():
    t = cyclic_table(4)
    t[1][3] = t[1][2]
    rep = validate(t)
    assert rep.axiom_results["rows-latin"] is False
    assert rep.witnesses["rows-latin"] == (1, 2, 3)
    assert rep.axiom_results["G3"] is None
    assert not rep.passed and "G3" in rep.failures()


def test_bad_identity_row_reports_g1():
    t = cyclic_table(3)
    t[0] = [0, 2, 1]
    rep = validate(t)
    assert rep.axiom_results["G1"] is False
    assert rep.witnesses["G1"] == (0, 1, 2)


def _naive_verdict(T, e=0):
    """Axioms checked literally from their definitions."""
    n = len(T)
    R = range(n)
    if any(sorted(r) != list(R) for r in T) or any(T[e][b] != b for b in R):
        return False
    inv = {}
    for a in R:
        lefts = [b for b in R if T[b][a] == e]
        if len(lefts) != 1:
            return False
        inv[a] = lefts[0]

    def gyr(a, b, c):
        return T[inv[T[a][b]]][T[a][T[b][c]]]

    for a, b in itertools.product(R, R):
        image = [gyr(a, b, c) for c in R]
        if sorted(image) != list(R):
            return False
        for x, y in itertools.product(R, R):
            if image[T[x][y]] != T[image[x]][image[y]]:
                return False
        for c in R:
            if T[a][T[b][c]] != T[T[a][b]][image[c]]:
                return False
            if image[c] != gyr(T[a][b], b, c):
                return False
    return True


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["G8-example", "L1", "O1", "K1-table9", "G82-table9"]),
       st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
def test_single_swap_verdict_matches_naive_oracle(key, row, i, j):
    T = [list(r) for r in catalog.group(key).table]
    T[row][i], T[row][j] = T[row][j], T[row][i]
    assert validate(T).passed == _naive_verdict(T)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["G8-example", "K1-table9", "G15", "G16"]), st.randoms(use_true_random=False))
def test_relabelled_copy_is_valid_and_gyrations_conjugate(key, rnd):
    G = catalog.group(key)
    pi = list(G.elements)
    rnd.shuffle(pi)
    H = GyroGroup.from_table(relabel(G.table, pi), identity=pi[G.identity])
    P = Permutation(tuple(pi))
    for a, b in itertools.product(G.elements, repeat=2):
        assert H.gyration(pi[a], pi[b]) == P * G.gyration(a, b) * P.inverse()


def test_from_table_raises_with_report():
    with pytest.raises(StructureError) as err:
        GyroGroup.from_table(catalog.RAW_TABLES["K1-table2-as-printed"])
    assert err.value.report is not None
    assert err.value.report.axiom_results["rows-latin"] is False


def test_direct_construction_enforces_table_level_invariants():
    with pytest.raises(StructureError):
        GyroGroup([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        GyroGroup(cyclic_table(3), identity=5)


def test_report_serializes_all_axioms():
    d = validate(cyclic_table(2)).to_dict()
    assert list(d["axiom_results"]) == list(AXIOMS)
    assert d["passed"] is True


# -- group operations ---------------------------------------------------------------

def test_g8_gyrations_match_printed_gyro_table():
    G = catalog.group("G8-example")
    A = Permutation.from_cycles(8, [(1, 6), (2, 5)])
    for a in G.elements:
        for b in G.elements:
            expected = A if catalog.G8_GYRO_TABLE[a][b] == "A" else Permutation.identity(8)
            assert G.gyration(a, b) == expected, (a, b)


def test_named_gyrations():
    G = catalog.group("G8-example")
    assert str(G.gyration(1, 2)) == "(1 6)(2 5)"
    assert G.gyration(3, 4).is_identity()


def test_inverse_and_ominus():
    G = catalog.group("G15")
    assert G.left_inverse(1) == 2
    assert all(G.oplus(G.left_inverse(a), a) == 0 for a in G.elements)
    assert all(G.ominus(a, a) == 0 for a in G.elements)


def test_cyclic_orders():
    G = catalog.group("G15")
    assert G.order_of(1) == 3
    assert G.order_of(4) == 5
    assert G.cyclic_subgyrogroup(0) == (0,)


def test_out_of_range_element_rejected():
    G = catalog.group("G8-example")
    with pytest.raises(ValueError):
        G.oplus(0, 8)
    with pytest.raises(ValueError):
        G.element("nine")


def test_generated_sets():
    G = catalog.group("G8-example")
    assert G.left_generated([1, 3]) == frozenset(range(8))
    assert G.left_generated([1, 2]) != frozenset(range(8))
    G16 = catalog.group("G16")
    assert G16.right_generated([8, 9]) == frozenset({0, 1, 8, 9})
    with pytest.raises(ValueError):
        G.left_generated([])


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(catalog.keys()), st.data())
def test_left_generated_is_closed(key, data):
    G = catalog.group(key)
    S = data.draw(st.sets(st.sampled_from(list(G.elements)), min_size=1, max_size=3))
    closure = G.left_generated(S)
    assert all(G.oplus(s, x) in closure for s in S for x in closure)
    assert set(S) <= closure


def test_gyrocommutativity_and_skew_left_loop():
    expected = {"G8-example": (True, True), "L1": (True, True), "M1-as-printed": (True, True),
                "O1": (True, True), "K1-table9": (False, True), "G82-table9": (False, True),
                "G4": (False, True), "G15": (True, False), "G16": (False, True),
                "DihG8-base": (True, True)}
    for key, (comm, skew) in expected.items():
        G = catalog.group(key)
        assert (G.is_gyrocommutative(), G.has_skew_left_loop()) == (comm, skew), key


def test_subgyrogroups():
    G4 = catalog.group("G4")
    assert G4.is_subgyrogroup(range(8))
    assert not G4.is_subgyrogroup([0, 1])
    assert G4.is_L_subgyrogroup(G4.cyclic_subgyrogroup(1))
    # gyr[11, 8] moves 8 to 12, so <8> = {0, 8} is not gyration-invariant
    assert G4.gyration(11, 8)(8) == 12
    assert not G4.is_L_subgyrogroup(G4.cyclic_subgyrogroup(8))
    with pytest.raises(ValueError):
        G4.is_L_subgyrogroup([0, 1])


def test_symmetric_set_and_restriction():
    G16 = catalog.group("G16")
    assert G16.is_symmetric_set([1, 2, 3])
    assert not G16.is_symmetric_set([2])
    G4 = catalog.group("G4")
    sub = G4.restrict(list(range(8)))
    assert validate(sub).passed


def test_groups_are_value_objects():
    assert catalog.group("G16") == GyroGroup(catalog.group("G16").table)
    assert hash(catalog.group("L1")) == hash(GyroGroup(catalog.group("L1").table))
