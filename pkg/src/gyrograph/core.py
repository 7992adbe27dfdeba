"""Finite gyro-groups given by their Cayley tables.

Elements are the integers ``0..n-1``; ``labels`` are for display only.
The gyration ``gyr[a, b]`` is never stored, it is derived from the table as
``c -> (-(a+b)) + (a + (b + c))`` which is the only map satisfying left
gyroassociativity once left translations are bijective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

AXIOMS = ("rows-latin", "G1", "G2", "G3", "gyr-automorphism", "G4")
DERIVED = ("two-sided-identity", "two-sided-inverse", "gyr[a,a]=id", "gyr[0,b]=id")


class StructureError(ValueError):
    """The table does not describe a gyro-group."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0..n-1}`` stored as its image list."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        image = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                image[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(image))

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(x) == p(q(x))
        if len(self) != len(other):
            raise ValueError("permutations act on different sets")
        return Permutation(tuple(self.image[y] for y in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            y = self.image[start]
            while y != start:
                cyc.append(y)
                seen.add(y)
                y = self.image[y]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass
class ValidationReport:
    """Outcome of checking a raw table against the gyro-group axioms.

    ``axiom_results`` maps each name in ``AXIOMS`` to True, False, or None
    when the check could not be evaluated because an earlier structural
    check failed. Each False/None entry has a witness tuple.
    """

    order: int
    identity: int
    axiom_results: dict[str, bool | None] = field(default_factory=dict)
    witnesses: dict[str, tuple] = field(default_factory=dict)
    derived_properties: dict[str, bool | None] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.axiom_results.get(name) is True for name in AXIOMS)

    def failures(self) -> list[str]:
        return [name for name in AXIOMS if self.axiom_results.get(name) is not True]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "identity": self.identity,
            "passed": self.passed,
            "axiom_results": {k: self.axiom_results.get(k) for k in AXIOMS},
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "derived_properties": {k: self.derived_properties.get(k) for k in DERIVED},
        }

    def __str__(self) -> str:
        lines = [f"order {self.order}, identity {self.identity}: "
                 + ("PASS" if self.passed else "FAIL")]
        for name in AXIOMS:
            res = self.axiom_results.get(name)
            mark = {True: "pass", False: "FAIL", None: "skipped"}[res]
            wit = f"  witness {self.witnesses[name]}" if name in self.witnesses else ""
            lines.append(f"  {name:<17} {mark}{wit}")
        for name in DERIVED:
            res = self.derived_properties.get(name)
            lines.append(f"  ({name}) {res}")
        return "\n".join(lines)


def _as_square(table) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in table)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("table must be a non-empty square array")
    return rows


def validate(table, identity: int = 0) -> ValidationReport:
    """Check a raw table against the gyro-group axioms, in order.

    Failures are reported, never raised. Witnesses are the lexicographically
    smallest violating tuple for each check.
    """
    T = _as_square(table)
    n = len(T)
    if not 0 <= identity < n:
        raise ValueError(f"identity {identity} out of range for order {n}")
    R = range(n)
    rep = ValidationReport(order=n, identity=identity)
    res, wit = rep.axiom_results, rep.witnesses

    latin_witness = None
    for a in R:
        first_col = {}
        for b in R:
            v = T[a][b]
            if not 0 <= v < n:
                latin_witness = (a, b, v)
                break
            if v in first_col:
                latin_witness = (a, first_col[v], b)
                break
            first_col[v] = b
        if latin_witness:
            break
    res["rows-latin"] = latin_witness is None
    if latin_witness:
        wit["rows-latin"] = latin_witness

    g1 = next(((identity, b, T[identity][b]) for b in R if T[identity][b] != b), None)
    res["G1"] = g1 is None
    if g1:
        wit["G1"] = g1

    inverses = []
    g2 = None
    for a in R:
        lefts = [b for b in R if T[b][a] == identity]
        if len(lefts) != 1:
            g2 = (a, len(lefts))
            break
        inverses.append(lefts[0])
    res["G2"] = g2 is None
    if g2:
        wit["G2"] = g2

    if latin_witness or g2:
        for name in ("G3", "gyr-automorphism", "G4"):
            res[name] = None
            wit[name] = ("prerequisite failed",)
        for name in DERIVED:
            rep.derived_properties[name] = None
        return rep

    gyr = {(a, b): tuple(T[inverses[T[a][b]]][T[a][T[b][c]]] for c in R)
           for a in R for b in R}

    # G3 asks for an automorphism satisfying the identity; our candidate is
    # forced, so G3 holds iff it satisfies the identity and is an automorphism.
    g3 = next(((a, b, c) for a, b, c in product(R, R, R)
               if T[a][T[b][c]] != T[T[a][b]][gyr[a, b][c]]), None)
    res["G3"] = g3 is None
    if g3:
        wit["G3"] = g3

    aut = None
    for a, b in product(R, R):
        g = gyr[a, b]
        if sorted(g) != list(R):
            aut = (a, b, "not bijective")
            break
        bad = next(((a, b, x, y) for x, y in product(R, R)
                    if g[T[x][y]] != T[g[x]][g[y]]), None)
        if bad:
            aut = bad
            break
    res["gyr-automorphism"] = aut is None
    if aut:
        wit["gyr-automorphism"] = aut

    g4 = next(((a, b) for a, b in product(R, R) if gyr[a, b] != gyr[T[a][b], b]), None)
    res["G4"] = g4 is None
    if g4:
        wit["G4"] = g4

    ident = tuple(R)
    d = rep.derived_properties
    d["two-sided-identity"] = all(T[a][identity] == a for a in R)
    d["two-sided-inverse"] = all(T[a][inverses[a]] == identity for a in R)
    d["gyr[a,a]=id"] = all(gyr[a, a] == ident for a in R)
    d["gyr[0,b]=id"] = all(gyr[identity, b] == ident for b in R)
    return rep


@dataclass(frozen=True, eq=False)
class GyroGroup:
    """A finite gyro-group as an immutable Cayley table.

    Construction enforces the table-level invariants (latin rows, left
    identity, unique left inverses). Use :meth:`from_table` to also require
    G3, G4 and the automorphism property.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        T = _as_square(self.table)
        n = len(T)
        object.__setattr__(self, "table", T)
        labels = tuple(str(x) for x in self.labels) or tuple(str(i) for i in range(n))
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be n distinct strings")
        object.__setattr__(self, "labels", labels)
        if not 0 <= self.identity < n:
            raise ValueError(f"identity {self.identity} out of range")
        for a, row in enumerate(T):
            if sorted(row) != list(range(n)):
                raise StructureError(f"row {a} is not a permutation of the elements")
        if any(T[self.identity][b] != b for b in range(n)):
            raise StructureError("identity is not a left identity")
        for a in range(n):
            if sum(1 for b in range(n) if T[b][a] == self.identity) != 1:
                raise StructureError(f"element {a} has no unique left inverse")

    @classmethod
    def from_table(cls, table, identity: int = 0, labels: Sequence[str] = (),
                   name: str = "", allow_errata: bool = False) -> "GyroGroup":
        """Validate ``table`` and build the group.

        With ``allow_errata`` a table failing only G3, G4 or the automorphism
        check is still accepted; table-level failures always raise.
        """
        report = validate(table, identity)
        if not report.passed and not allow_errata:
            raise StructureError(
                f"table {name or '<unnamed>'} fails: {', '.join(report.failures())}", report)
        return cls(table=table, identity=identity, labels=tuple(labels), name=name)

    def __eq__(self, other):
        if not isinstance(other, GyroGroup):
            return NotImplemented
        return (self.table, self.identity, self.labels) == (other.table, other.identity, other.labels)

    def __hash__(self):
        return hash((self.table, self.identity, self.labels))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GyroGroup(name={self.name!r}, order={self.order})"

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not isinstance(x, int) or not 0 <= x < self.order:
                raise ValueError(f"element {x!r} out of range for order {self.order}")

    def element(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ValueError(f"unknown element label {label!r}") from None

    def oplus(self, a: int, b: int) -> int:
        self._check(a, b)
        return self.table[a][b]

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for b, row in enumerate(self.table):
            for a, v in enumerate(row):
                if v == self.identity:
                    inv[a] = b
        return tuple(inv)

    def left_inverse(self, a: int) -> int:
        """The unique ``b`` with ``b + a == identity``."""
        self._check(a)
        return self._inverses[a]

    def ominus(self, a: int, b: int) -> int:
        """``a + (-b)``."""
        return self.oplus(a, self.left_inverse(b))

    @cached_property
    def _gyrations(self) -> dict[tuple[int, int], Permutation]:
        T, inv, R = self.table, self._inverses, self.elements
        return {(a, b): Permutation(tuple(T[inv[T[a][b]]][T[a][T[b][c]]] for c in R))
                for a in R for b in R}

    def gyration(self, a: int, b: int) -> Permutation:
        self._check(a, b)
        return self._gyrations[a, b]

    def left_translation(self, s: int) -> Permutation:
        self._check(s)
        return Permutation(self.table[s])

    def cyclic_subgyrogroup(self, s: int) -> tuple[int, ...]:
        """Orbit of the identity under ``x -> s + x``, in iteration order."""
        self._check(s)
        out = [self.identity]
        x = self.table[s][self.identity]
        while x != self.identity:
            out.append(x)
            x = self.table[s][x]
        return tuple(out)

    def order_of(self, s: int) -> int:
        return len(self.cyclic_subgyrogroup(s))

    def _closure(self, S: Iterable[int], left: bool) -> frozenset[int]:
        gens = list(dict.fromkeys(S))
        if not gens:
            raise ValueError("generator set must be non-empty")
        self._check(*gens)
        T = self.table
        found = set(gens)
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = T[s][x] if left else T[x][s]
                if y not in found:
                    found.add(y)
                    frontier.append(y)
        return frozenset(found)

    def left_generated(self, S: Iterable[int]) -> frozenset[int]:
        """Closure of ``S`` under ``x -> s + x`` for ``s`` in ``S``."""
        return self._closure(S, left=True)

    def right_generated(self, S: Iterable[int]) -> frozenset[int]:
        """Closure of ``S`` under ``x -> x + s`` for ``s`` in ``S``."""
        return self._closure(S, left=False)

    def gyrocommutative_witness(self) -> tuple[int, int] | None:
        T = self.table
        for a, b in product(self.elements, self.elements):
            if T[a][b] != self._gyrations[a, b](T[b][a]):
                return (a, b)
        return None

    def is_gyrocommutative(self) -> bool:
        return self.gyrocommutative_witness() is None

    def skew_left_loop_witness(self) -> tuple[int, int] | None:
        T, inv, g = self.table, self._inverses, self._gyrations
        for a, b in product(self.elements, self.elements):
            if g[T[a][b], inv[b]] != g[a, b]:
                return (a, b)
        return None

    def has_skew_left_loop(self) -> bool:
        return self.skew_left_loop_witness() is None

    def is_subgyrogroup(self, H: Iterable[int]) -> bool:
        H = set(H)
        self._check(*H)
        T = self.table
        return (self.identity in H
                and all(T[a][b] in H for a in H for b in H)
                and all(self._inverses[a] in H for a in H))

    def is_L_subgyrogroup(self, H: Iterable[int]) -> bool:
        """True iff ``gyr[a, h]`` maps ``H`` onto itself for all ``a`` in G, ``h`` in H."""
        H = frozenset(H)
        if not self.is_subgyrogroup(H):
            raise ValueError(f"{sorted(H)} is not a sub-gyro-group")
        g = self._gyrations
        return all(frozenset(g[a, h].image[x] for x in H) == H
                   for a in self.elements for h in H)

    def is_symmetric_set(self, S: Iterable[int]) -> bool:
        S = set(S)
        return all(self.left_inverse(s) in S for s in S)

    def restrict(self, H: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        """Table of the operation restricted to ``H``, reindexed by position in ``H``."""
        pos = {x: i for i, x in enumerate(H)}
        return tuple(tuple(pos[self.table[a][b]] for b in H) for a in H)

    def validate(self) -> ValidationReport:
        return validate(self.table, self.identity)
