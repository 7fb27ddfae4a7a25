"""Irreducible boolean modules of a finite semigroup, one per regular J-class.

For a regular J-class with R-classes ``A`` and L-classes ``B`` the sandwich
matrix ``C`` (rows ``B``, columns ``A``) marks the H-classes containing an
idempotent. The free module on ``B`` with the natural right action of S
collapses, under the annihilation-pattern congruence, onto the row span of
``C``; that row span is the irreducible module ``M_J``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import bits
from .config import Caps
from .errors import (
    CapExceeded,
    EmptyGeneratorList,
    InvariantViolation,
    IsomorphismFailure,
    WellDefinednessViolation,
    WidthMismatch,
)
from .lattice import (
    BoolMatrix,
    canonical_decomposition,
    e_ab,
    endomorphisms,
    free_lattice,
    row_span,
    span_closure,
)
from .modules import (
    BModule,
    ModCongruence,
    action_kernel,
    congruences,
    quotient_with_map,
)
from .semigroup import (
    FiniteSemigroup,
    GreenStructure,
    JClassGeometry,
    _close_under_right_products,
    green_structure,
    j_class_geometry,
)

_CAPS = Caps()


@dataclass(frozen=True)
class SandwichMatrix:
    j_class: int
    matrix: BoolMatrix  # rows: L-classes, columns: R-classes
    geometry: JClassGeometry


def sandwich_matrix(S: FiniteSemigroup, G: GreenStructure, j: int) -> SandwichMatrix:
    geo = j_class_geometry(S, G, j)
    m = BoolMatrix.from_lists([[int(v) for v in row] for row in geo.h_idempotent])
    return SandwichMatrix(j, m, geo)


def l_class_action(S: FiniteSemigroup, G: GreenStructure, j: int, caps: Caps = _CAPS) -> BModule:
    """The free module on the L-classes of J with ``b.s = L(xs)`` if ``xs`` in J, else 0."""
    geo = j_class_geometry(S, G, j)
    rank = len(geo.l_classes)
    if rank > caps.free_rank:
        raise CapExceeded("L-classes in J", rank, caps.free_rank)
    l_of = {x: b for b, cls in enumerate(geo.l_classes) for x in cls}
    basis_image = []
    for s in S.elements:
        row = []
        for b, cls in enumerate(geo.l_classes):
            images = {l_of.get(S.mul(x, s)) for x in cls}
            if len(images) != 1:
                raise WellDefinednessViolation(
                    f"L-class {b} of J-class {j} is not mapped uniformly by {s}", (j, b, s)
                )
            (img,) = images
            row.append(0 if img is None else 1 << img)
        basis_image.append(row)

    def fn(v, s):
        acc = 0
        for b in bits.members(v):
            acc |= basis_image[s][b]
        return acc

    return BModule.from_function(free_lattice(rank), S, fn)


def the_congruence(BB: BModule, G: GreenStructure | None = None, j: int | None = None) -> ModCongruence:
    """Identify m, n when ``ms = 0 iff ns = 0`` for every s.

    With ``G`` and ``j`` given, s ranges over the J-class only.
    """
    S = BB.semigroup
    domain = list(S.elements) if G is None else G.j_members(j)
    patterns = [
        frozenset(s for s in domain if BB.action[s][m] == 0) for m in range(len(BB))
    ]
    return ModCongruence(bits.canonical_partition(patterns))


@dataclass(frozen=True, eq=False)
class IrreducibleModule:
    j_class: int
    module: BModule  # carrier is the row span of the sandwich matrix
    l_class_to_element: tuple[int, ...]
    congruence: ModCongruence  # on the free module
    free_module: BModule
    quotient: BModule  # free module modulo the congruence
    sandwich: SandwichMatrix


def irreducible_module(S: FiniteSemigroup, G: GreenStructure, j: int, caps: Caps = _CAPS) -> IrreducibleModule:
    sw = sandwich_matrix(S, G, j)
    C = sw.matrix
    BB = l_class_action(S, G, j, caps)
    theta = the_congruence(BB)
    Q, proj = quotient_with_map(BB, theta)

    R = row_span(C)
    vec_of = [C.vec_mul(v) for v in BB.carrier.elements]
    lifts: dict[int, list[int]] = {}
    for m, v in enumerate(vec_of):
        lifts.setdefault(R.index_of(v), []).append(m)
    action = []
    for s in S.elements:
        row = []
        for r in range(len(R)):
            images = {vec_of[BB.action[s][m]] for m in lifts[r]}
            if len(images) != 1:
                raise WellDefinednessViolation(f"row-span action of {s} is not well defined", (j, s, r))
            row.append(R.index[images.pop()])
        action.append(tuple(row))
    M = BModule(R, S, tuple(action))

    # the map [m] -> mC must be a module isomorphism Q -> M
    iso: dict[int, int] = {}
    for m in range(len(BB)):
        if iso.setdefault(proj[m], R.index[vec_of[m]]) != R.index[vec_of[m]]:
            raise IsomorphismFailure("congruence classes and row vectors disagree", (j, m))
    if len(set(iso.values())) != len(Q) or len(Q) != len(R):
        raise IsomorphismFailure("quotient and row span differ in size", (j, len(Q), len(R)))
    for s in S.elements:
        for q in range(len(Q)):
            if iso[Q.action[s][q]] != M.action[s][iso[q]]:
                raise IsomorphismFailure("quotient and row span actions differ", (j, s, q))

    l_to_elem = tuple(R.index[row] for row in C.entries)
    return IrreducibleModule(j, M, l_to_elem, theta, BB, Q, sw)


def all_irreducibles(S: FiniteSemigroup, G: GreenStructure, caps: Caps = _CAPS) -> dict[int, IrreducibleModule]:
    return {j: irreducible_module(S, G, j, caps) for j in G.regular_j_classes()}


# ---------------------------------------------------------------------------
# Matrix representations


@dataclass(frozen=True, eq=False)
class MatrixRep:
    semigroup: FiniteSemigroup
    dimension: int
    images: tuple[BoolMatrix, ...]
    basis: tuple[int, ...] = ()  # carrier indices of the coordinate vectors
    lossy: bool = False  # coordinates come from a non-unique decomposition

    def is_multiplicative(self) -> bool:
        S = self.semigroup
        return all(
            self.images[s] @ self.images[t] == self.images[S.mul(s, t)]
            for s in S.elements
            for t in S.elements
        )


def matrix_rep_of(M: BModule | IrreducibleModule, caps: Caps = _CAPS) -> MatrixRep:
    """Matrices in sji coordinates: row x lists the decomposition of ``x.s``.

    For a non-free carrier the smallest, lexicographically least irredundant
    decomposition is used and the result is flagged ``lossy``; it need not be
    multiplicative.
    """
    if isinstance(M, IrreducibleModule):
        M = M.module
    L = M.carrier
    basis = L.sji
    pos = {x: i for i, x in enumerate(basis)}
    free = L.is_free()
    images = []
    for s in M.semigroup.elements:
        rows = []
        for x in basis:
            y = M.action[s][x]
            dec = L.sji_below(y) if free else canonical_decomposition(L, y, caps.decompositions)
            rows.append(bits.from_members(pos[z] for z in dec))
        images.append(BoolMatrix(len(basis), len(basis), tuple(rows)))
    return MatrixRep(M.semigroup, len(basis), tuple(images), tuple(basis), not free)


def matrix_semigroup(generators: Sequence[BoolMatrix]) -> tuple[FiniteSemigroup, MatrixRep]:
    """Semigroup generated by square boolean matrices, with its tautological representation."""
    if not generators:
        raise EmptyGeneratorList("at least one matrix is required")
    n = generators[0].rows
    if any(g.rows != n or g.cols != n for g in generators):
        raise WidthMismatch("generators must be square of equal size")
    elems, index = _close_under_right_products(list(generators), lambda a, b: a @ b)
    table = tuple(tuple(index[a @ b] for b in elems) for a in elems)
    labels = tuple("/".join(m.to_strings()) for m in elems)
    S = FiniteSemigroup(table, labels)
    return S, MatrixRep(S, n, tuple(elems), tuple(range(n)))


# ---------------------------------------------------------------------------
# Kernels and J'-congruences


def rep_kernel(rep: MatrixRep) -> tuple[int, ...]:
    return bits.canonical_partition(rep.images)


def direct_sum_kernel(S: FiniteSemigroup, G: GreenStructure, caps: Caps = _CAPS,
                      irreducibles: dict[int, IrreducibleModule] | None = None) -> tuple[int, ...]:
    irr = irreducibles if irreducibles is not None else all_irreducibles(S, G, caps)
    kernels = [action_kernel(I.module) for I in irr.values()]
    return bits.canonical_partition(zip(*kernels))


def is_semigroup_congruence(S: FiniteSemigroup, theta: Sequence[int]) -> bool:
    n = S.order
    for x in range(n):
        for y in range(x + 1, n):
            if theta[x] != theta[y]:
                continue
            for u in range(n):
                if theta[S.mul(u, x)] != theta[S.mul(u, y)] or theta[S.mul(x, u)] != theta[S.mul(y, u)]:
                    return False
    return True


def semigroup_congruences(S: FiniteSemigroup, cap: int = _CAPS.jprime) -> list[tuple[int, ...]]:
    n = S.order
    if n > cap:
        raise CapExceeded("semigroup order for congruence enumeration", n, cap)
    cls = [-1] * n
    out = []

    def consistent(i):
        for x in range(i + 1):
            for y in range(x + 1, i + 1):
                if cls[x] != cls[y]:
                    continue
                for u in range(n):
                    for a, b in ((S.mul(u, x), S.mul(u, y)), (S.mul(x, u), S.mul(y, u))):
                        if a <= i and b <= i and cls[a] != cls[b]:
                            return False
        return True

    def rec(i, nblocks):
        if i == n:
            if is_semigroup_congruence(S, cls):
                out.append(tuple(cls))
            return
        for c in range(nblocks + 1):
            cls[i] = c
            if consistent(i):
                rec(i + 1, max(nblocks, c + 1))
        cls[i] = -1

    rec(0, 0)
    return out


def is_jprime_congruence(S: FiniteSemigroup, G: GreenStructure, theta: Sequence[int]) -> bool:
    """Related regular elements must be J-equivalent."""
    regular = [s for s in S.elements if G.is_regular_element(s)]
    return all(
        G.j_class[s] == G.j_class[t]
        for s in regular
        for t in regular
        if theta[s] == theta[t]
    )


def largest_jprime_oracle(S: FiniteSemigroup, G: GreenStructure, cap: int = _CAPS.jprime) -> tuple[int, ...]:
    candidates = [c for c in semigroup_congruences(S, cap) if is_jprime_congruence(S, G, c)]
    top = [c for c in candidates if all(bits.refines(d, c) for d in candidates)]
    if len(top) != 1:
        raise InvariantViolation("no unique largest J'-congruence", len(top))
    return top[0]


# ---------------------------------------------------------------------------
# AGGM quotients and generalized group mapping semigroups


@dataclass(frozen=True, eq=False)
class Aggm:
    j_class: int
    semigroup: FiniteSemigroup
    quotient_map: tuple[int, ...]
    actions: tuple[tuple[int, ...], ...]  # action of each image element on M_J
    module: IrreducibleModule


def aggm(S: FiniteSemigroup, G: GreenStructure, j: int, caps: Caps = _CAPS,
         irreducible: IrreducibleModule | None = None) -> Aggm:
    """Image of S in the endomorphisms of M_J, deduplicated by action table."""
    I = irreducible if irreducible is not None else irreducible_module(S, G, j, caps)
    acts = I.module.action
    qmap = bits.canonical_partition(acts)
    k = max(qmap) + 1
    reps = [qmap.index(c) for c in range(k)]
    table = []
    for a in range(k):
        row = []
        for b in range(k):
            prod = qmap[S.mul(reps[a], reps[b])]
            composed = tuple(acts[reps[b]][x] for x in acts[reps[a]])
            if composed != acts[reps[prod]]:
                raise WellDefinednessViolation("image multiplication disagrees with composition", (a, b))
            row.append(prod)
        table.append(row)
    labels = tuple(f"[{S.label(r)}]" for r in reps)
    T = FiniteSemigroup(tuple(tuple(r) for r in table), labels)
    return Aggm(j, T, qmap, tuple(acts[r] for r in reps), I)


def _acts_faithfully_on(S: FiniteSemigroup, ideal: Sequence[int]) -> bool:
    ideal = sorted(ideal)
    right = {tuple(S.mul(i, s) for i in ideal) for s in S.elements}
    left = {tuple(S.mul(s, i) for i in ideal) for s in S.elements}
    return len(right) == S.order and len(left) == S.order


def distinguished_ideal(S: FiniteSemigroup, G: GreenStructure) -> tuple[frozenset[int], int] | None:
    """A (0-)minimal ideal on which S acts faithfully on both sides, with its J-class."""
    k = G.num_j_classes
    minimum = [j for j in range(k) if all(G.j_leq(j, i) for i in range(k))]
    kernel = minimum[0]
    K = G.j_members(kernel)
    if _acts_faithfully_on(S, K):
        return frozenset(K), kernel
    z = S.zero()
    if z is None:
        return None
    jz = G.j_class[z]
    for j in range(k):
        if j == jz:
            continue
        if all(i == j or i == jz or not G.j_leq(i, j) for i in range(k)):
            I = G.j_members(j) + [z]
            if _acts_faithfully_on(S, I):
                return frozenset(I), j
    return None


def is_ggm(S: FiniteSemigroup, G: GreenStructure | None = None) -> bool:
    G = G or green_structure(S)
    return distinguished_ideal(S, G) is not None


def has_aperiodic_distinguished_ideal(S: FiniteSemigroup, G: GreenStructure | None = None) -> bool:
    G = G or green_structure(S)
    found = distinguished_ideal(S, G)
    if found is None:
        return False
    _, j = found
    return G.regular[j] and G.maximal_subgroups[j][0].order == 1


# ---------------------------------------------------------------------------
# Density


def endomorphism_span(M: BModule, cap: int = _CAPS.span) -> set[tuple[int, ...]]:
    L = M.carrier
    return span_closure(set(M.action), L.join, len(L), cap)


def is_dense_span(M: BModule, cap: int = _CAPS.span) -> bool:
    """The span of the action maps contains every elementary map e_{a,b}."""
    span = endomorphism_span(M, cap)
    n = len(M.carrier)
    return all(e_ab(M.carrier, a, b) in span for a in range(n) for b in range(n))


def spans_full_end(M: BModule, caps: Caps = _CAPS) -> bool:
    span = endomorphism_span(M, caps.span)
    return span == set(endomorphisms(M.carrier, caps.homomorphisms))


def has_identity_submatrix(C: BoolMatrix, k: int) -> bool:
    """Some k rows and k columns of C form a permutation matrix."""
    if k == 0:
        return True
    for rows in combinations(range(C.rows), k):
        for cols in combinations(range(C.cols), k):
            sub = [[C[r, c] for c in cols] for r in rows]
            if all(sum(r) == 1 for r in sub) and all(sum(col) == 1 for col in zip(*sub)):
                return True
    return False


def free_row_span_test(C: SandwichMatrix | BoolMatrix) -> bool:
    """Row span of C is free; cross-checked against an identity submatrix of full rank."""
    mat = C.matrix if isinstance(C, SandwichMatrix) else C
    R = row_span(mat)
    free = R.is_free()
    via_submatrix = has_identity_submatrix(mat, len(R.sji))
    if free != via_submatrix:
        raise InvariantViolation("freeness and identity-submatrix criteria disagree", mat.to_strings())
    return free


# ---------------------------------------------------------------------------
# Desk-scale module corpus


def module_corpus(S: FiniteSemigroup, G: GreenStructure, caps: Caps = _CAPS,
                  max_size: int | None = None) -> list[tuple[str, BModule]]:
    """M_J, the free module on B, and every proper nonzero quotient of it, per
    regular J-class."""
    out = []
    for j in G.regular_j_classes():
        I = irreducible_module(S, G, j, caps)
        out.append((f"M_J{j}", I.module))
        BB = I.free_module
        out.append((f"BB_J{j}", BB))
        if len(BB) <= caps.congruences:
            for c in congruences(BB, caps.congruences):
                if c.proper and not c.trivial:
                    Q, _ = quotient_with_map(BB, c)
                    out.append((f"BB_J{j}/{''.join(map(str, c.class_of))}", Q))
    if max_size is not None:
        out = [(name, M) for name, M in out if len(M) <= max_size]
    return out
