"""Boolean matrices and finite join semilattices realised inside ``B^w``.

Vectors are ints (bit ``i`` = coordinate ``i``). A :class:`SpanLattice`
keeps its elements sorted by (popcount, value), which fixes element indices
reproducibly; most of the API speaks in those indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Callable, Iterable, Sequence

from . import bits
from .errors import CapExceeded, NotAnElement, WidthMismatch


# ---------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class BoolMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]  # one bitset per row

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "BoolMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise WidthMismatch("ragged matrix")
        return cls(rows, cols, tuple(bits.from_members(j for j, v in enumerate(r) if v) for r in data))

    @classmethod
    def from_strings(cls, data: Sequence[str]) -> "BoolMatrix":
        cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise WidthMismatch("ragged matrix")
        return cls(len(data), cols, tuple(bits.from_bitstring(r) for r in data))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BoolMatrix":
        return cls(rows, cols, (0,) * rows)

    def to_strings(self) -> list[str]:
        return [bits.to_bitstring(r, self.cols) for r in self.entries]

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.cols)] for r in self.entries]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i] >> j & 1

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        if self.cols != other.rows:
            raise WidthMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        out = []
        for r in self.entries:
            acc = 0
            for k in bits.members(r):
                acc |= other.entries[k]
            out.append(acc)
        return BoolMatrix(self.rows, other.cols, tuple(out))

    def __or__(self, other: "BoolMatrix") -> "BoolMatrix":
        return BoolMatrix(self.rows, self.cols, tuple(a | b for a, b in zip(self.entries, other.entries)))

    def vec_mul(self, v: int) -> int:
        """Row vector times matrix."""
        acc = 0
        for k in bits.members(v):
            acc |= self.entries[k]
        return acc

    def int_product(self, other: "BoolMatrix") -> list[list[int]]:
        """Product over the nonnegative integers (no truncation)."""
        a = self.to_lists()
        b = other.to_lists()
        return [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]

    def trace(self) -> int:
        return sum(self.entries[i] >> i & 1 for i in range(min(self.rows, self.cols)))


# ---------------------------------------------------------------------------
# Lattices


def _sort_key(v: int) -> tuple[int, int]:
    return (bits.popcount(v), v)


@dataclass(frozen=True, eq=False)
class SpanLattice:
    width: int
    elements: tuple[int, ...]
    generators: tuple[int, ...] = ()
    sji: tuple[int, ...] = ()
    index: dict[int, int] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def index_of(self, vec: int) -> int:
        try:
            return self.index[vec]
        except KeyError:
            raise NotAnElement(f"{bits.to_bitstring(vec, self.width)} is not in the lattice") from None

    def check_index(self, i: int) -> int:
        if not isinstance(i, int) or not 0 <= i < len(self.elements):
            raise NotAnElement(f"no element with index {i!r}")
        return i

    def join(self, i: int, j: int) -> int:
        return self.index[self.elements[i] | self.elements[j]]

    def join_all(self, idx: Iterable[int]) -> int:
        acc = 0
        for i in idx:
            acc |= self.elements[i]
        return self.index[acc]

    def leq(self, i: int, j: int) -> bool:
        return self.elements[i] & ~self.elements[j] == 0

    def meet(self, i: int, j: int) -> int:
        acc = 0
        for k, v in enumerate(self.elements):
            if self.leq(k, i) and self.leq(k, j):
                acc |= v
        return self.index[acc]

    def label(self, i: int) -> str:
        return bits.to_bitstring(self.elements[i], self.width)

    def is_free(self) -> bool:
        return len(self.elements) == 1 << len(self.sji)

    def hasse_edges(self) -> list[tuple[int, int]]:
        n = len(self.elements)
        edges = []
        for i in range(n):
            for j in range(n):
                if i != j and self.leq(i, j):
                    if not any(k not in (i, j) and self.leq(i, k) and self.leq(k, j) for k in range(n)):
                        edges.append((i, j))
        return edges

    def sji_below(self, i: int) -> list[int]:
        return [x for x in self.sji if self.leq(x, i)]

    @classmethod
    def from_vectors(cls, width: int, vectors: Iterable[int], generators: Sequence[int] = ()) -> "SpanLattice":
        """Build from a join-closed vector set containing 0."""
        elems = tuple(sorted(set(vectors), key=_sort_key))
        index = {v: i for i, v in enumerate(elems)}
        sji = tuple(i for i in range(len(elems)) if _is_sji(elems, i))
        return cls(width, elems, tuple(generators), sji, index)

    @classmethod
    def from_join_table(cls, join: Sequence[Sequence[int]]) -> tuple["SpanLattice", list[int]]:
        """Realise an abstract join semilattice with 0 given by its join table.

        Element ``m`` is sent to the indicator of ``{x : m not<= x}``; this is
        join-preserving and injective. Returns the lattice and the map from
        abstract ids to lattice indices.
        """
        k = len(join)
        leq = [[join[a][b] == b for b in range(k)] for a in range(k)]
        vec = [bits.from_members(x for x in range(k) if not leq[m][x]) for m in range(k)]
        for a in range(k):
            for b in range(k):
                if vec[join[a][b]] != vec[a] | vec[b]:
                    raise WidthMismatch("join table is not a semilattice")
        if 0 not in vec:
            raise NotAnElement("join table has no least element")
        lat = cls.from_vectors(k, vec)
        return lat, [lat.index[v] for v in vec]


def _is_sji(elems: Sequence[int], i: int) -> bool:
    m = elems[i]
    if m == 0:
        return False
    below = 0
    for v in elems:
        if v != m and v & ~m == 0:
            below |= v
    return below != m


def row_span(rows: Sequence[int] | BoolMatrix, width: int | None = None) -> SpanLattice:
    if isinstance(rows, BoolMatrix):
        width = rows.cols
        rows = rows.entries
    if width is None:
        raise WidthMismatch("width is required for bare vectors")
    for r in rows:
        if r >> width:
            raise WidthMismatch(f"vector {r:b} wider than {width}")
    closed = {0}
    for r in rows:
        closed |= {x | r for x in closed}
    return SpanLattice.from_vectors(width, closed, tuple(rows))


def naive_closure(width: int, rows: Sequence[int]) -> set[int]:
    """Fixed-point join closure of ``rows`` and 0; reference for :func:`row_span`."""
    current = set(rows) | {0}
    while True:
        nxt = current | {a | b for a in current for b in current}
        if nxt == current:
            return current
        current = nxt


def free_lattice(rank: int) -> SpanLattice:
    return row_span([1 << i for i in range(rank)], rank)


# ---------------------------------------------------------------------------
# Decompositions over the sji elements


def all_decompositions(M: SpanLattice, m: int, cap: int = 20) -> list[frozenset[int]]:
    """Every subset X of sji(M) whose join is element ``m``, by size then lexicographically."""
    M.check_index(m)
    if len(M.sji) > cap:
        raise CapExceeded("sji elements", len(M.sji), cap)
    target = M.elements[m]
    cands = M.sji_below(m)
    out = []
    for size in range(len(cands) + 1):
        for X in combinations(cands, size):
            acc = 0
            for x in X:
                acc |= M.elements[x]
            if acc == target:
                out.append(frozenset(X))
    return out


def irredundant_decompositions(M: SpanLattice, m: int, cap: int = 20) -> list[frozenset[int]]:
    decs = all_decompositions(M, m, cap)
    return [X for X in decs if not any(Y < X for Y in decs)]


def canonical_decomposition(M: SpanLattice, m: int, cap: int = 20) -> frozenset[int]:
    """Smallest irredundant decomposition, ties broken lexicographically."""
    decs = irredundant_decompositions(M, m, cap)
    return min(decs, key=lambda X: (len(X), sorted(X)))


# ---------------------------------------------------------------------------
# Duality


@dataclass(frozen=True, eq=False)
class DualLattice:
    """Functionals ``phi_m(n) = 0 iff n <= m`` on a lattice, with pointwise join."""

    base: SpanLattice
    lattice: SpanLattice
    anchor: tuple[int, ...]  # base index m -> dual index of phi_m
    anchor_of: tuple[int, ...]  # dual index -> base index m

    def evaluate(self, f: int, x: int) -> int:
        """Value of dual element ``f`` at base element ``x``."""
        return self.lattice.elements[f] >> x & 1


def dual_lattice(M: SpanLattice) -> DualLattice:
    n = len(M)
    vecs = [bits.from_members(x for x in range(n) if not M.leq(x, m)) for m in range(n)]
    lat = SpanLattice.from_vectors(n, vecs)
    anchor = tuple(lat.index[v] for v in vecs)
    back = [0] * n
    for m, f in enumerate(anchor):
        back[f] = m
    return DualLattice(M, lat, anchor, tuple(back))


# ---------------------------------------------------------------------------
# Lattice properties and elementary endomorphisms


def is_distributive(M: SpanLattice) -> bool:
    n = len(M)
    meet = [[M.meet(a, b) for b in range(n)] for a in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x][M.join(y, z)] != M.join(meet[x][y], meet[x][z]):
                    return False
    return True


def e_ab(M: SpanLattice, a: int, b: int) -> tuple[int, ...]:
    """The map x -> 0 if x <= a else b, as a tuple of element indices."""
    M.check_index(a)
    M.check_index(b)
    return tuple(0 if M.leq(x, a) else b for x in range(len(M)))


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """Apply ``f`` then ``g`` (right action convention)."""
    return tuple(g[x] for x in f)


def is_endomorphism(M: SpanLattice, f: Sequence[int]) -> bool:
    if f[0] != 0:
        return False
    n = len(M)
    return all(f[M.join(a, b)] == M.join(f[a], f[b]) for a in range(n) for b in range(a + 1, n))


def endomorphisms(M: SpanLattice, cap: int = 1 << 20) -> list[tuple[int, ...]]:
    """All join-endomorphisms fixing 0, found by assigning images to sji elements."""
    n = len(M)
    k = len(M.sji)
    if n ** k > cap:
        raise CapExceeded("endomorphism candidates", n**k, cap)
    below = [M.sji_below(m) for m in range(n)]
    pos = {x: i for i, x in enumerate(M.sji)}
    out = []
    for imgs in product(range(n), repeat=k):
        f = tuple(M.join_all(imgs[pos[x]] for x in below[m]) for m in range(n))
        if all(f[x] == imgs[pos[x]] for x in M.sji) and is_endomorphism(M, f):
            out.append(f)
    return out


def enumerate_lattices(size: int) -> list[SpanLattice]:
    """All join semilattices with 0 of the given size, one per isomorphism type."""
    if size == 1:
        return [SpanLattice.from_vectors(0, [0])]
    width = size - 1
    reps: dict = {}
    universe = range(1, 1 << width)
    for combo in combinations(universe, size - 1):
        S = set(combo) | {0}
        if any((a | b) not in S for a in combo for b in combo):
            continue
        lat = SpanLattice.from_vectors(width, S)
        key = _order_canonical_form(lat)
        reps.setdefault(key, lat)
    return list(reps.values())


def _order_canonical_form(M: SpanLattice) -> tuple:
    n = len(M)
    best = None
    for perm in permutations(range(1, n)):
        p = (0,) + perm
        rel = tuple(sorted((p[i], p[j]) for i in range(n) for j in range(n) if M.leq(i, j)))
        if best is None or rel < best:
            best = rel
    return best


def stone_weierstrass_cases(M: SpanLattice) -> Iterable[tuple[frozenset[int], bool, bool]]:
    """For every 0-containing join-closed subset N of the dual: (N, separates points, N is everything)."""
    D = dual_lattice(M)
    L = D.lattice
    n = len(L)
    nonzero = list(range(1, n))
    for r in range(n):
        for combo in combinations(nonzero, r):
            N = frozenset((0,) + combo)
            if any(L.join(a, b) not in N for a in N for b in N):
                continue
            seps = all(
                any(D.evaluate(f, x) != D.evaluate(f, y) for f in N)
                for x in range(len(M))
                for y in range(x + 1, len(M))
            )
            yield N, seps, len(N) == n


def span_closure(maps: Iterable[tuple[int, ...]], join: Callable[[int, int], int], size: int, cap: int) -> set[tuple[int, ...]]:
    """All finite pointwise joins of ``maps`` (the empty join is the zero map)."""
    closed = {(0,) * size}
    for g in maps:
        new = {tuple(join(a, b) for a, b in zip(f, g)) for f in closed}
        closed |= new
        if len(closed) > cap:
            raise CapExceeded("span closure", len(closed), cap)
    return closed
