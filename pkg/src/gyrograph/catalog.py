"""Gyro-group tables reproduced from print, plus the constructive families.

Every table is embedded verbatim as a data constant. Known print problems are
kept in each entry's ``errata`` list rather than silently fixed; the only
repaired table is G(4) (row 1), and the repair is recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import GyroGroup, StructureError, validate


def _parse(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in line.split()) for line in text.strip().splitlines())


def _parse_pairs(text: str) -> tuple[tuple[tuple[int, int], ...], ...]:
    rows = []
    for line in text.strip().splitlines():
        rows.append(tuple((int(t[0]), int(t[1])) for t in line.split()))
    return tuple(rows)


G8_EXAMPLE = _parse("""
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 0 1 6 7 4 5
3 5 6 0 7 1 2 4
4 2 1 7 0 6 5 3
5 4 7 6 1 0 3 2
6 7 4 5 2 3 0 1
7 6 5 4 3 2 1 0
""")

# Gyration table printed beside G8: "I" is the identity, "A" is (1 6)(2 5).
G8_GYRO_TABLE = tuple(line.split() for line in """
I I I I I I I I
I I A A A A I I
I A I A A I A I
I A A I I A A I
I A A I I A A I
I A I A A I A I
I I A A A A I I
I I I I I I I I
""".strip().splitlines())

# Table 2 exactly as printed. It is not a gyro-group (row 0 repeats 2).
K1_TABLE2_AS_PRINTED = _parse("""
0 1 2 2 3 4 5 6
1 2 3 4 5 6 7 6
2 3 0 1 6 7 4 5
3 2 1 0 7 6 5 4
4 5 6 7 0 1 2 3
5 4 7 6 1 0 3 2
6 7 4 5 3 2 1 0
7 6 5 4 2 3 0 1
""")

L1 = _parse("""
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 0 1 6 7 4 5
3 2 1 0 7 6 5 4
4 5 6 7 0 1 2 3
5 4 7 6 1 0 3 2
6 7 5 4 3 2 0 1
7 6 4 5 2 3 1 0
""")

# M(1) and N(1) are printed with identical tables.
M1_AS_PRINTED = _parse("""
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 0 1 6 7 4 5
3 2 1 0 7 6 5 4
4 5 6 7 1 0 3 2
5 4 7 6 0 1 2 3
6 7 5 4 2 3 1 0
7 6 4 5 3 2 0 1
""")
N1_AS_PRINTED = M1_AS_PRINTED

O1 = _parse("""
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 0 1 6 7 4 5
3 2 1 0 7 6 5 4
4 5 7 6 1 0 2 3
5 4 6 7 0 1 3 2
6 7 5 4 2 3 1 0
7 6 4 5 3 2 0 1
""")

K1_TABLE9 = _parse("""
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 0 1 6 7 4 5
3 2 1 0 7 6 5 4
4 5 6 7 0 1 2 3
5 4 7 6 1 0 3 2
6 7 4 5 3 2 1 0
7 6 5 4 2 3 0 1
""")

G82_TABLE9 = _parse("""
0 1 2 3 4 5 6 7
1 7 6 0 5 2 4 3
2 5 7 6 0 3 1 4
3 0 5 7 6 4 2 1
4 6 0 5 7 1 3 2
5 2 3 4 1 7 0 6
6 4 1 2 3 0 7 5
7 3 4 1 2 6 5 0
""")

# Table 8 as printed; row 1 is not a permutation.
G4_TABLE8_AS_PRINTED = _parse("""
 0  1  2  3  4  5  6  7  8  9 10 11 12 13 14 15
 1  2  3  4  5  0  7  9 10 11  8 12 13 14 15  8
 2  3  4  5  6  7  0  1 10 11 12 13 14 15  8  9
 3  4  5  6  7  0  1  2 11 12 13 14 15  8  9 10
 4  5  6  7  0  1  2  3 12 13 14 15  8  9 10 11
 5  6  7  0  1  2  3  4 13 14 15  8  9 10 11 12
 6  7  0  1  2  3  4  5 14 15  8  9 10 11 12 13
 7  0  1  2  3  4  5  6 15  8  9 10 11 12 13 14
 8 11 14  9 12 15 10 13  0  3  6  1  4  7  2  5
 9 12 15 10 13  8 11 14  5  0  3  6  1  4  7  2
10 13  8 11 14  9 12 15  2  5  0  3  6  1  4  7
11 14  9 12 15 10 13  8  7  2  5  0  3  6  1  4
12 15 10 13  8 11 14  9  4  7  2  5  0  3  6  1
13  8 11 14  9 12 15 10  1  4  7  2  5  0  3  6
14  9 12 15 10 13  8 11  6  1  4  7  2  5  0  3
15 10 13  8 11 14  9 12  3  6  1  4  7  2  5  0
""")

G15 = _parse("""
 0  1  2  3  4  5  6  7  8  9 10 11 12 13 14
 1  2  0  4  6 11  3 14 13  7  8 12  5 10  9
 2  0  1  6  3 12  4  9 10 14 13  5 11  8  7
 3  4  5  7  8  9 13  0  1  2 12  6 14 11 10
 4 10  8 11 13  1  5  6 14  0  7  2  9 12  3
 5 14 12  9  7  8  2 11  0 10  3  4  6  1 13
 6 11  4 13 10  3 14  8 12  1  2  9  7  5  0
 7  8  9  0  1  2 11  3  4  5 14 13 10  6 12
 8 13  6 10 11  0 12  4  5  3  9  7  2 14  1
 9  5 11 14  0  6  7 10  2 12  1  3 13  4  8
10  3 13 12  5 14  8  2  9  6 11  0  1  7  4
11 12  7  1 14  4  9 13  6  8  0 10  3  2  5
12  6  3  8  9  7 10  1 11 13  5 14  4  0  2
13  7 14  2 12 10  1  5  3  4  6  8  0  9 11
14  9 10  5  2 13  0 12  7 11  4  1  8  3  6
""")

G16 = _parse("""
 0  1  2  3  4  5  6  7  8  9 10 11 12 13 14 15
 1  0  3  2  5  4  7  6  9  8 11 10 13 12 15 14
 2  3  1  0  6  7  5  4 11 10  8  9 15 14 12 13
 3  2  0  1  7  6  4  5 10 11  9  8 14 15 13 12
 4  5  6  7  3  2  0  1 15 14 12 13  9  8 11 10
 5  4  7  6  2  3  1  0 14 15 13 12  8  9 10 11
 6  7  5  4  0  1  2  3 13 12 15 14 10 11  9  8
 7  6  4  5  1  0  3  2 12 13 14 15 11 10  8  9
 8  9 10 11 12 13 14 15  0  1  2  3  4  5  6  7
 9  8 11 10 13 12 15 14  1  0  3  2  5  4  7  6
10 11  9  8 14 15 13 12  3  2  0  1  7  6  4  5
11 10  8  9 15 14 12 13  2  3  1  0  6  7  5  4
12 13 14 15 11 10  8  9  6  7  5  4  0  1  2  3
13 12 15 14 10 11  9  8  7  6  4  5  1  0  3  2
14 15 13 12  8  9 10 11  4  5  6  7  3  2  0  1
15 14 12 13  9  8 11 10  5  4  7  6  2  3  1  0
""")

# Table 12, columns (b,0) then (b,1); each cell "ai" is the pair (a, i).
DIH_G8_TABLE12 = _parse_pairs("""
00 10 20 30 40 50 60 70 01 11 21 31 41 51 61 71
10 30 00 20 70 40 50 60 11 31 01 21 71 41 51 61
20 00 30 10 50 60 70 40 21 01 31 11 51 61 71 41
30 20 10 00 60 70 40 50 31 21 11 01 61 71 41 51
40 50 70 60 30 20 00 10 41 51 71 61 31 21 01 11
50 60 40 70 20 00 10 30 51 61 41 71 21 01 11 31
60 70 50 40 00 10 30 20 61 71 51 41 01 11 31 21
70 40 60 50 10 30 20 00 71 41 61 51 11 31 21 01
01 21 11 31 61 51 41 71 00 20 10 30 60 50 40 70
11 01 31 21 51 41 71 61 10 00 30 20 50 40 70 60
21 31 01 11 71 61 51 41 20 30 00 10 70 60 50 40
31 11 21 01 41 71 61 51 30 10 20 00 40 70 60 50
41 71 51 61 01 21 31 11 40 70 50 60 00 20 30 10
51 41 61 71 11 01 21 31 50 40 60 70 10 00 20 30
61 51 71 41 31 11 01 21 60 50 70 40 30 10 00 20
71 61 41 51 21 31 11 01 70 60 40 50 20 30 10 00
""")

RAW_TABLES = {
    "K1-table2-as-printed": K1_TABLE2_AS_PRINTED,
    "G4-table8-as-printed": G4_TABLE8_AS_PRINTED,
}


class UnknownKeyError(KeyError):
    def __str__(self):
        return self.args[0]


class NotDihedralizableError(StructureError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    group: GyroGroup
    provenance: str
    errata: tuple[str, ...] = ()
    erratum_tolerant: bool = False


def pair_index(a: int, i: int, n: int) -> int:
    """Index of the pair ``(a, i)`` in a dihedralized group of base order ``n``."""
    return a + n * i


def pair_labels(base: GyroGroup) -> tuple[str, ...]:
    n = base.order
    return tuple(f"({base.labels[k % n]},{k // n})" for k in range(2 * n))


def dihedralize(G: GyroGroup) -> GyroGroup:
    """The order-2n gyro-group on pairs ``(a, i)`` with ``i`` in {0, 1}.

    ``(a,0) + (b,j) = (a+b, j)`` and ``(a,1) + (b,j) = (a-b, 1-j)``, where
    ``a-b`` means ``a + (-b)``. Pair ``(a, i)`` has index ``a + n*i``.
    """
    wit = G.gyrocommutative_witness()
    if wit is not None:
        raise NotDihedralizableError(f"not dihedralizable: not gyro-commutative at {wit}")
    wit = G.skew_left_loop_witness()
    if wit is not None:
        raise NotDihedralizableError(
            f"not dihedralizable: skew left loop property fails at {wit}")
    n = G.order
    T = G.table
    rows = []
    for i in (0, 1):
        for a in range(n):
            row = []
            for j in (0, 1):
                for b in range(n):
                    if i == 0:
                        row.append(pair_index(T[a][b], j, n))
                    else:
                        row.append(pair_index(G.ominus(a, b), 1 - j, n))
            rows.append(tuple(row))
    return GyroGroup.from_table(rows, identity=pair_index(G.identity, 0, n),
                                labels=pair_labels(G), name=f"Dih({G.name})")


def g4() -> GyroGroup:
    """G(4) from Table 8 with row 1 replaced by the additive pattern of the other P(4) rows."""
    rows = [list(r) for r in G4_TABLE8_AS_PRINTED]
    rows[1] = [(1 + b) % 8 for b in range(8)] + [8 + (1 + b) % 8 for b in range(8)]
    return GyroGroup.from_table(rows, name="G4")


def _from_pairs(rows, name: str) -> GyroGroup:
    n = len(rows) // 2
    table = [[pair_index(a, i, n) for a, i in row] for row in rows]
    labels = tuple(f"({k % n},{k // n})" for k in range(2 * n))
    return GyroGroup.from_table(table, labels=labels, name=name)


def _build() -> dict[str, CatalogEntry]:
    def entry(key, table, provenance, errata=(), group=None):
        return CatalogEntry(key, group or GyroGroup.from_table(table, name=key),
                            provenance, tuple(errata))

    entries = [
        entry("G8-example", G8_EXAMPLE, "Table 1, Cayley table of G8 (gyration A = (1 6)(2 5))"),
        entry("K1-table9", K1_TABLE9, "Table 9, left block 'Cayley table K(1)'",
              ["Table 2 'Gyro table of K(1)' is corrupt as printed (row 0 repeats 2, header lists 8); "
               "this block is used as K(1)"]),
        entry("L1", L1, "Table 3, Cayley table of L(1)"),
        entry("M1-as-printed", M1_AS_PRINTED, "Table 4, gyro table of M(1)",
              ["printed table is identical to Table 5 (N(1)) although M(1) and N(1) are distinct"]),
        entry("N1-as-printed", N1_AS_PRINTED, "Table 5, gyro table of N(1)",
              ["printed table is identical to Table 4 (M(1)) although M(1) and N(1) are distinct"]),
        entry("O1", O1, "Table 6, gyro table of O(1)"),
        entry("G82-table9", G82_TABLE9, "Table 9, right block headed only by the operation symbol",
              ["the caption calls this block 'the gyro table of G8' while the surrounding example calls "
               "it G_{8,2}; labeling ambiguity kept"]),
        entry("G4", None, "Table 8, Cayley table of G(4)",
              ["row 1 as printed ('1 2 3 4 5 0 7 9 10 11 8 12 13 14 15 8') is not a permutation; "
               "replaced by 1+b mod 8 on P(4) and 8+((1+b) mod 8) on H(4)"], group=g4()),
        entry("G15", G15, "Table 10, Cayley table for the gyro-group G15"),
        entry("G16", G16, "Table 11, addition table of the gyro-group G16"),
        entry("DihG8-base", [[a for a, _ in row[:8]] for row in DIH_G8_TABLE12[:8]],
              "Table 12, block of rows and columns with second coordinate 0"),
        entry("DihG8", None, "Table 12, Cayley table for Dih(G8)", group=_from_pairs(DIH_G8_TABLE12, "DihG8")),
    ]
    return {e.key: e for e in entries}


@lru_cache(maxsize=None)
def _entries() -> dict[str, CatalogEntry]:
    return _build()


def keys() -> list[str]:
    return list(_entries())


def get(key: str) -> CatalogEntry:
    try:
        return _entries()[key]
    except KeyError:
        raise UnknownKeyError(f"unknown catalog key {key!r}; available: {', '.join(keys())}") from None


def group(key: str) -> GyroGroup:
    return get(key).group


def entries() -> list[CatalogEntry]:
    return list(_entries().values())


def check_raw(key: str):
    """Validation report for one of the as-printed tables in ``RAW_TABLES``."""
    return validate(RAW_TABLES[key])
