"""Finite right modules over the boolean semigroup semiring BS.

A module is a :class:`~boolrep.lattice.SpanLattice` together with an action
table ``action[s][m]`` (element indices). Left modules never appear: they
are right modules over the opposite semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

from . import bits
from .config import Caps
from .errors import CapExceeded, Degenerate, IncompatiblePartition
from .lattice import SpanLattice, dual_lattice, enumerate_lattices, endomorphisms, free_lattice
from .semigroup import FiniteSemigroup, GreenStructure, apex_ideal

_CAPS = Caps()


@dataclass(frozen=True, eq=False)
class BModule:
    carrier: SpanLattice
    semigroup: FiniteSemigroup
    action: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.carrier)

    def act(self, m: int, s: int) -> int:
        return self.action[s][m]

    @property
    def nondegenerate(self) -> bool:
        return any(v != 0 for row in self.action for v in row)

    @classmethod
    def from_function(cls, carrier: SpanLattice, S: FiniteSemigroup, fn: Callable[[int, int], int]) -> "BModule":
        """``fn(vector, s)`` returns the image vector; indices are derived."""
        action = tuple(
            tuple(carrier.index_of(fn(v, s)) for v in carrier.elements) for s in S.elements
        )
        return cls(carrier, S, action)


@dataclass(frozen=True)
class ModuleCheck:
    ok: bool
    nondegenerate: bool
    violation: str | None = None
    witness: tuple | None = None


def check_module(M: BModule) -> ModuleCheck:
    L = M.carrier
    n = len(L)
    S = M.semigroup
    nd = M.nondegenerate
    if len(M.action) != S.order or any(len(row) != n for row in M.action):
        return ModuleCheck(False, nd, "shape", None)
    for s in S.elements:
        row = M.action[s]
        if row[0] != 0:
            return ModuleCheck(False, nd, "zero not fixed", (s,))
        for a in range(n):
            for b in range(a + 1, n):
                if row[L.join(a, b)] != L.join(row[a], row[b]):
                    return ModuleCheck(False, nd, "linearity", (a, b, s))
    for s in S.elements:
        for t in S.elements:
            st = S.mul(s, t)
            for m in range(n):
                if M.action[t][M.action[s][m]] != M.action[st][m]:
                    return ModuleCheck(False, nd, "associativity", (m, s, t))
    return ModuleCheck(True, nd)


def zero_module(S: FiniteSemigroup) -> BModule:
    return BModule(SpanLattice.from_vectors(0, [0]), S, tuple((0,) for _ in S.elements))


def set_action_module(S: FiniteSemigroup, points: int, act: Callable[[int, int], int]) -> BModule:
    """The free module BX for an action of S on X = {0..points-1} by total maps."""
    L = free_lattice(points)

    def fn(v, s):
        return bits.from_members(act(x, s) for x in bits.members(v))

    return BModule.from_function(L, S, fn)


# ---------------------------------------------------------------------------
# Submodules


def submodule_generated(M: BModule, gens: Iterable[int]) -> frozenset[int]:
    L = M.carrier
    current: set[int] = set()
    stack = [0, *gens]
    while stack:
        m = stack.pop()
        if m in current:
            continue
        current.add(m)
        stack.extend(M.action[s][m] for s in M.semigroup.elements)
        stack.extend(L.join(m, x) for x in current)
    return frozenset(current)


def span_of(L: SpanLattice, idx: Iterable[int]) -> frozenset[int]:
    closed = {0}
    for i in set(idx):
        closed |= {L.join(i, x) for x in closed}
    return frozenset(closed)


def submodules(M: BModule, cap: int = _CAPS.submodules) -> list[frozenset[int]]:
    """All submodules, grown from {0} by adjoining one generator at a time."""
    n = len(M)
    if n > cap:
        raise CapExceeded("module size for submodule enumeration", n, cap)
    zero = frozenset({0})
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for N in frontier:
            for m in range(n):
                if m not in N:
                    bigger = submodule_generated(M, list(N) + [m])
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda N: (len(N), sorted(N)))


def is_submodule(M: BModule, N: Iterable[int]) -> bool:
    N = set(N)
    if 0 not in N:
        return False
    L = M.carrier
    return all(L.join(a, b) in N for a in N for b in N) and all(
        M.action[s][m] in N for s in M.semigroup.elements for m in N
    )


# ---------------------------------------------------------------------------
# Congruences


@dataclass(frozen=True)
class ModCongruence:
    class_of: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    @property
    def proper(self) -> bool:
        return self.num_classes >= 2

    @property
    def trivial(self) -> bool:
        return self.num_classes == len(self.class_of)

    def blocks(self) -> list[list[int]]:
        return bits.partition_blocks(self.class_of)


def is_congruence(M: BModule, class_of: Sequence[int]) -> bool:
    L = M.carrier
    n = len(L)
    for x in range(n):
        for y in range(x + 1, n):
            if class_of[x] != class_of[y]:
                continue
            for s in M.semigroup.elements:
                if class_of[M.action[s][x]] != class_of[M.action[s][y]]:
                    return False
            for z in range(n):
                if class_of[L.join(x, z)] != class_of[L.join(y, z)]:
                    return False
    return True


def generated_congruence(M: BModule, pairs: Iterable[tuple[int, int]]) -> ModCongruence:
    """Least module congruence containing ``pairs``."""
    L = M.carrier
    n = len(L)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = list(pairs)
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[max(rx, ry)] = min(rx, ry)
        for s in M.semigroup.elements:
            queue.append((M.action[s][x], M.action[s][y]))
        for z in range(n):
            queue.append((L.join(x, z), L.join(y, z)))
    return ModCongruence(bits.canonical_partition(find(x) for x in range(n)))


def congruences(M: BModule, cap: int = _CAPS.congruences) -> list[ModCongruence]:
    """All module congruences by restricted-growth enumeration with pruning."""
    L = M.carrier
    n = len(L)
    if n > cap:
        raise CapExceeded("module size for congruence enumeration", n, cap)
    S = M.semigroup
    cls = [-1] * n
    out = []

    def consistent(i):
        # every pair now fully assigned must respect join and action
        for x in range(i + 1):
            for y in range(x + 1, i + 1):
                if cls[x] != cls[y]:
                    continue
                for s in S.elements:
                    a, b = M.action[s][x], M.action[s][y]
                    if a <= i and b <= i and cls[a] != cls[b]:
                        return False
                for z in range(i + 1):
                    a, b = L.join(x, z), L.join(y, z)
                    if a <= i and b <= i and cls[a] != cls[b]:
                        return False
        return True

    def rec(i, nblocks):
        if i == n:
            if is_congruence(M, cls):
                out.append(ModCongruence(tuple(cls)))
            return
        for c in range(nblocks + 1):
            cls[i] = c
            if consistent(i):
                rec(i + 1, max(nblocks, c + 1))
        cls[i] = -1

    rec(0, 0)
    return out


def quotient_with_map(M: BModule, theta: ModCongruence | Sequence[int]) -> tuple[BModule, list[int]]:
    class_of = theta.class_of if isinstance(theta, ModCongruence) else tuple(theta)
    if not is_congruence(M, class_of):
        raise IncompatiblePartition("partition is not a module congruence", tuple(class_of))
    L = M.carrier
    n = len(L)
    k = max(class_of) + 1
    rep = [class_of.index(c) for c in range(k)]
    join = [[class_of[L.join(rep[a], rep[b])] for b in range(k)] for a in range(k)]
    lat, embed = SpanLattice.from_join_table(join)
    action = []
    for s in M.semigroup.elements:
        row = [0] * k
        for c in range(k):
            row[embed[c]] = embed[class_of[M.action[s][rep[c]]]]
        action.append(tuple(row))
    projection = [embed[class_of[m]] for m in range(n)]
    return BModule(lat, M.semigroup, tuple(action)), projection


def quotient(M: BModule, theta: ModCongruence | Sequence[int]) -> BModule:
    return quotient_with_map(M, theta)[0]


# ---------------------------------------------------------------------------
# Minimal / simple / irreducible


def _require_nondegenerate(M: BModule) -> None:
    if not M.nondegenerate:
        raise Degenerate("M.S = 0")


def is_minimal(M: BModule, include_self: bool = False) -> bool:
    """Every nonzero m spans M through the orbit mS (optionally with m itself)."""
    _require_nondegenerate(M)
    n = len(M)
    for m in range(1, n):
        orbit = {M.action[s][m] for s in M.semigroup.elements}
        if include_self:
            orbit.add(m)
        if len(span_of(M.carrier, orbit)) != n:
            return False
    return True


def is_minimal_by_enumeration(M: BModule, cap: int = _CAPS.submodules) -> bool:
    _require_nondegenerate(M)
    return len(submodules(M, cap)) == 2 if len(M) > 1 else True


def is_simple(M: BModule) -> bool:
    """Each principal congruence is trivial or universal."""
    _require_nondegenerate(M)
    n = len(M)
    for a in range(n):
        for b in range(a + 1, n):
            if generated_congruence(M, [(a, b)]).proper:
                return False
    return True


def is_simple_by_enumeration(M: BModule, cap: int = _CAPS.congruences) -> bool:
    _require_nondegenerate(M)
    return all(c.trivial or not c.proper for c in congruences(M, cap))


def is_irreducible(M: BModule, oracle: bool = False, caps: Caps = _CAPS) -> bool:
    if oracle:
        return is_minimal_by_enumeration(M, caps.submodules) and is_simple_by_enumeration(M, caps.congruences)
    return is_minimal(M) and is_simple(M)


# ---------------------------------------------------------------------------
# Annihilator and apex


def annihilator(M: BModule) -> frozenset[int]:
    _require_nondegenerate(M)
    return frozenset(s for s in M.semigroup.elements if all(v == 0 for v in M.action[s]))


def apex(M: BModule, G: GreenStructure) -> int | None:
    """Regular J-class whose ideal I(J) is exactly the annihilator, if any."""
    ann = annihilator(M)
    for j in G.regular_j_classes():
        if apex_ideal(M.semigroup, G, j) == ann:
            return j
    return None


def apex_by_minimality(M: BModule, G: GreenStructure) -> int | None:
    """The unique J-minimal J-class not annihilating M, when it is unique and regular."""
    ann = annihilator(M)
    alive = [j for j in range(G.num_j_classes) if not set(G.j_members(j)) <= ann]
    minimal = [j for j in alive if not any(k != j and G.j_leq(k, j) for k in alive)]
    if len(minimal) == 1 and G.regular[minimal[0]]:
        return minimal[0]
    return None


def is_faithful(M: BModule) -> bool:
    return len(set(M.action)) == M.semigroup.order


def action_kernel(M: BModule) -> tuple[int, ...]:
    return bits.canonical_partition(M.action)


# ---------------------------------------------------------------------------
# Duality


def dualize(M: BModule) -> BModule:
    """The dual lattice of functionals as a right module over the opposite semigroup.

    ``phi_m . s`` is the functional ``x -> phi_m(x s)``, which is ``phi_k`` with
    ``k`` the join of all x such that ``x s <= m``.
    """
    L = M.carrier
    D = dual_lattice(L)
    n = len(L)
    S = M.semigroup
    action = []
    for s in S.elements:
        row = [0] * n
        for m in range(n):
            k = L.join_all(x for x in range(n) if L.leq(M.action[s][x], m))
            row[D.anchor[m]] = D.anchor[k]
        action.append(tuple(row))
    return BModule(D.lattice, S.opposite(), tuple(action))


# ---------------------------------------------------------------------------
# Homomorphisms and isomorphism


def homomorphisms(M: BModule, N: BModule, cap: int = _CAPS.homomorphisms) -> list[tuple[int, ...]]:
    """All module maps M -> N over the same semigroup, via images of sji(M)."""
    A = M.carrier
    B = N.carrier
    k = len(A.sji)
    if len(B) ** k > cap:
        raise CapExceeded("homomorphism candidates", len(B) ** k, cap)
    below = [A.sji_below(m) for m in range(len(A))]
    pos = {x: i for i, x in enumerate(A.sji)}
    S = M.semigroup
    out = []
    for imgs in product(range(len(B)), repeat=k):
        f = tuple(B.join_all(imgs[pos[x]] for x in below[m]) for m in range(len(A)))
        if any(f[x] != imgs[pos[x]] for x in A.sji):
            continue
        if any(f[A.join(a, b)] != B.join(f[a], f[b]) for a in range(len(A)) for b in range(a + 1, len(A))):
            continue
        if all(f[M.action[s][m]] == N.action[s][f[m]] for s in S.elements for m in range(len(A))):
            out.append(f)
    return out


def _module_invariant(M: BModule) -> tuple:
    n = len(M)
    sizes = tuple(sorted(len(set(row)) for row in M.action))
    fixed = tuple(sum(1 for m in range(n) if row[m] == m) for row in M.action)
    return (n, len(M.carrier.sji), fixed, sizes)


def are_isomorphic(M: BModule, N: BModule, cap: int = _CAPS.homomorphisms) -> bool:
    if M.semigroup.order != N.semigroup.order:
        return False
    if _module_invariant(M)[:3] != _module_invariant(N)[:3]:
        return False
    n = len(M)
    return any(len(set(f)) == n for f in homomorphisms(M, N, cap))


# ---------------------------------------------------------------------------
# Exhaustive enumeration of small modules


def enumerate_modules(S: FiniteSemigroup, max_size: int, caps: Caps = _CAPS) -> Iterable[BModule]:
    """Every BS-module with at most ``max_size`` elements, up to carrier isomorphism.

    Actions are found by backtracking over tuples of lattice endomorphisms
    with ``f_s`` then ``f_t`` equal to ``f_st``. Distinct action tuples on the
    same carrier may still be isomorphic modules.
    """
    order = S.order
    for size in range(1, max_size + 1):
        for L in enumerate_lattices(size):
            endos = endomorphisms(L, caps.homomorphisms)
            chosen: list = [None] * order

            def rec(i):
                if i == order:
                    yield BModule(L, S, tuple(chosen))
                    return
                for f in endos:
                    chosen[i] = f
                    if _partial_ok(S, chosen, i):
                        yield from rec(i + 1)
                chosen[i] = None

            yield from rec(0)


def _partial_ok(S: FiniteSemigroup, chosen, i) -> bool:
    for s in range(i + 1):
        fs = chosen[s]
        for t in range(i + 1):
            st = S.mul(s, t)
            if st > i:
                continue
            ft = chosen[t]
            fst = chosen[st]
            if any(ft[fs[m]] != fst[m] for m in range(len(fs))):
                return False
    return True
