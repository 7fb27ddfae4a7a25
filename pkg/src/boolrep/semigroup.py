"""Finite semigroups given by Cayley tables, and their Green structure.

Elements are the integers ``0..n-1``. The adjoined identity of ``S^1`` is
never materialised; principal ideals simply include the generating element.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from . import bits
from .errors import EmptyGeneratorList, NonAssociative, NotRegular, OutOfRange


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def label(self, s: int) -> str:
        return self.labels[s] if self.labels else str(s)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "FiniteSemigroup":
        n = len(table)
        if n == 0:
            raise OutOfRange("empty table")
        for row in table:
            if len(row) != n:
                raise OutOfRange("table is not square")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise OutOfRange(f"table entry {v!r} outside 0..{n - 1}")
        if labels is not None and len(labels) != n:
            raise OutOfRange("labels length differs from order")
        tab = tuple(tuple(row) for row in table)
        witness = find_nonassociative_triple(tab)
        if witness is not None:
            raise NonAssociative(*witness)
        return cls(tab, tuple(labels) if labels is not None else None)

    @classmethod
    def from_transformations(cls, degree: int, generators: Sequence[Sequence[int]]) -> "FiniteSemigroup":
        """Close ``generators`` under composition.

        Maps act on the right: point ``i`` goes to ``f[i]`` and the product
        ``f*g`` applies ``f`` first. Elements are numbered in BFS order
        starting from the generators in the order given.
        """
        if not generators:
            raise EmptyGeneratorList("at least one generator is required")
        gens = []
        for g in generators:
            if len(g) != degree or any(not 0 <= x < degree for x in g):
                raise OutOfRange(f"generator {list(g)} is not a map on {degree} points")
            gens.append(tuple(g))
        elems, index = _close_under_right_products(gens, lambda f, g: tuple(g[x] for x in f))
        table = tuple(
            tuple(index[tuple(g[x] for x in f)] for g in elems) for f in elems
        )
        labels = tuple("".join(map(str, f)) if degree <= 10 else ",".join(map(str, f)) for f in elems)
        return cls(table, labels)

    def opposite(self) -> "FiniteSemigroup":
        n = self.order
        return FiniteSemigroup(tuple(tuple(self.table[t][s] for t in range(n)) for s in range(n)), self.labels)

    def idempotents(self) -> list[int]:
        return [s for s in self.elements if self.table[s][s] == s]

    def identity(self) -> int | None:
        for e in self.elements:
            if all(self.table[e][x] == x == self.table[x][e] for x in self.elements):
                return e
        return None

    def zero(self) -> int | None:
        for z in self.elements:
            if all(self.table[z][x] == z == self.table[x][z] for x in self.elements):
                return z
        return None

    def relabel(self, perm: Sequence[int]) -> "FiniteSemigroup":
        """Isomorphic copy in which old element ``s`` becomes ``perm[s]``."""
        n = self.order
        inv = [0] * n
        for s, p in enumerate(perm):
            inv[p] = s
        table = tuple(tuple(perm[self.table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        labels = tuple(self.label(inv[a]) for a in range(n)) if self.labels else None
        return FiniteSemigroup(table, labels)


def find_nonassociative_triple(table) -> tuple[int, int, int] | None:
    n = len(table)
    for s in range(n):
        row_s = table[s]
        for t in range(n):
            st = row_s[t]
            row_t = table[t]
            row_st = table[st]
            for u in range(n):
                if row_st[u] != row_s[row_t[u]]:
                    return (s, t, u)
    return None


def _close_under_right_products(gens, compose):
    elems: list = []
    index: dict = {}
    queue: deque = deque()
    for g in gens:
        if g not in index:
            index[g] = len(elems)
            elems.append(g)
            queue.append(g)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    return elems, index


# ---------------------------------------------------------------------------
# Green's relations


@dataclass(frozen=True, eq=False)
class GreenStructure:
    semigroup: FiniteSemigroup
    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    j_class: tuple[int, ...]
    h_class: tuple[int, ...]
    # bitsets of S^1 s, s S^1 and S^1 s S^1 per element
    left_ideal: tuple[int, ...]
    right_ideal: tuple[int, ...]
    ideal: tuple[int, ...]
    regular: tuple[bool, ...]
    idempotents: frozenset[int]
    transversal: dict[int, int]
    maximal_subgroups: dict[int, tuple[FiniteSemigroup, tuple[int, ...]]] = field(repr=False)

    @property
    def num_j_classes(self) -> int:
        return len(self.regular)

    def j_members(self, j: int) -> list[int]:
        return [s for s, c in enumerate(self.j_class) if c == j]

    def j_representative(self, j: int) -> int:
        return self.j_class.index(j)

    def j_leq(self, a: int, b: int) -> bool:
        """J-class ``a`` lies J-below J-class ``b``."""
        ra = self.j_representative(a)
        rb = self.j_representative(b)
        return bool(self.ideal[rb] >> ra & 1)

    def j_order(self) -> list[tuple[int, int]]:
        k = self.num_j_classes
        return [(a, b) for a in range(k) for b in range(k) if self.j_leq(a, b)]

    def regular_j_classes(self) -> list[int]:
        return [j for j, r in enumerate(self.regular) if r]

    def is_regular_element(self, s: int) -> bool:
        return self.regular[self.j_class[s]]


def green_structure(S: FiniteSemigroup) -> GreenStructure:
    n = S.order
    tab = S.table
    right = [(1 << s) | bits.from_members(tab[s]) for s in range(n)]
    left = [(1 << s) | bits.from_members(tab[t][s] for t in range(n)) for s in range(n)]
    two_sided = []
    for s in range(n):
        acc = 0
        for x in bits.members(left[s]):
            acc |= right[x]
        two_sided.append(acc)

    r_class = bits.canonical_partition(right)
    l_class = bits.canonical_partition(left)
    j_class = bits.canonical_partition(two_sided)
    h_class = bits.canonical_partition(zip(r_class, l_class))

    idempotents = frozenset(S.idempotents())
    k = max(j_class) + 1
    transversal: dict[int, int] = {}
    for e in sorted(idempotents):
        transversal.setdefault(j_class[e], e)
    regular = tuple(j in transversal for j in range(k))

    subgroups = {}
    for j, e in transversal.items():
        members = [s for s in range(n) if h_class[s] == h_class[e]]
        pos = {s: i for i, s in enumerate(members)}
        table = tuple(tuple(pos[tab[a][b]] for b in members) for a in members)
        labels = tuple(S.label(s) for s in members)
        subgroups[j] = (FiniteSemigroup(table, labels), tuple(members))

    return GreenStructure(
        semigroup=S,
        r_class=r_class,
        l_class=l_class,
        j_class=j_class,
        h_class=h_class,
        left_ideal=tuple(left),
        right_ideal=tuple(right),
        ideal=tuple(two_sided),
        regular=regular,
        idempotents=idempotents,
        transversal=transversal,
        maximal_subgroups=subgroups,
    )


def apex_ideal(S: FiniteSemigroup, G: GreenStructure, j: int) -> frozenset[int]:
    """All s with J not contained in S^1 s S^1."""
    rep = G.j_representative(j)
    return frozenset(s for s in S.elements if not G.ideal[s] >> rep & 1)


@dataclass(frozen=True)
class JClassGeometry:
    j_class: int
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    # h_idempotent[b][a]: the H-class (L-class b) & (R-class a) has an idempotent
    h_idempotent: tuple[tuple[bool, ...], ...]
    h_cells: tuple[tuple[tuple[int, ...], ...], ...]

    def r_index(self, s: int) -> int:
        for a, cls in enumerate(self.r_classes):
            if s in cls:
                return a
        raise KeyError(s)

    def l_index(self, s: int) -> int:
        for b, cls in enumerate(self.l_classes):
            if s in cls:
                return b
        raise KeyError(s)


def _j_class_cells(G: GreenStructure, j: int):
    members = G.j_members(j)
    r_ids: list[int] = []
    l_ids: list[int] = []
    for s in members:
        if G.r_class[s] not in r_ids:
            r_ids.append(G.r_class[s])
        if G.l_class[s] not in l_ids:
            l_ids.append(G.l_class[s])
    r_classes = tuple(tuple(s for s in members if G.r_class[s] == r) for r in r_ids)
    l_classes = tuple(tuple(s for s in members if G.l_class[s] == l) for l in l_ids)
    cells = tuple(
        tuple(tuple(s for s in members if G.l_class[s] == l and G.r_class[s] == r) for r in r_ids)
        for l in l_ids
    )
    return r_classes, l_classes, cells


def j_class_geometry(S: FiniteSemigroup, G: GreenStructure, j: int) -> JClassGeometry:
    if not G.regular[j]:
        raise NotRegular(f"J-class {j} is not regular")
    r_classes, l_classes, cells = _j_class_cells(G, j)
    table = tuple(
        tuple(any(s in G.idempotents for s in cell) for cell in row) for row in cells
    )
    return JClassGeometry(j, r_classes, l_classes, table, cells)


def eggbox(S: FiniteSemigroup, G: GreenStructure, j: int) -> str:
    """ASCII eggbox: rows are R-classes, columns L-classes, ``*`` marks idempotent cells."""
    r_classes, l_classes, cells = _j_class_cells(G, j)
    grid = []
    for a in range(len(r_classes)):
        row = []
        for b in range(len(l_classes)):
            cell = cells[b][a]
            mark = "*" if any(s in G.idempotents for s in cell) else " "
            row.append(mark + ",".join(S.label(s) for s in cell))
        grid.append(row)
    width = max(len(c) for row in grid for c in row) + 1
    sep = "+" + "+".join("-" * (width + 1) for _ in l_classes) + "+"
    lines = [sep]
    for row in grid:
        lines.append("|" + "|".join(" " + c.ljust(width) for c in row) + "|")
        lines.append(sep)
    return "\n".join(lines)
