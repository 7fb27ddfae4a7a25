"""Boolean characters: matrix traces, min characters over sections, fixed-point
characters, and the comparison with Schützenberger characters."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .config import Caps
from .errors import BadD, CapExceeded, NotFree
from .irreducibles import MatrixRep, aggm, distinguished_ideal, irreducible_module, matrix_rep_of
from .lattice import all_decompositions
from .modules import BModule, is_faithful
from .semigroup import FiniteSemigroup, GreenStructure, green_structure

_CAPS = Caps()


@dataclass(frozen=True)
class CharacterTable:
    values: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.values[s]

    def __len__(self) -> int:
        return len(self.values)


def chi_matrix(rep: MatrixRep) -> CharacterTable:
    """Number of diagonal ones of each image."""
    return CharacterTable(tuple(m.trace() for m in rep.images))


# ---------------------------------------------------------------------------
# Min character


def _decomposition_choices(M: BModule, caps: Caps) -> dict[int, list[frozenset[int]]]:
    """Admissible section values per element: sji elements are pinned to themselves."""
    L = M.carrier
    if len(L.sji) > caps.decompositions:
        raise CapExceeded("sji elements", len(L.sji), caps.decompositions)
    sji = set(L.sji)
    choices = {0: [frozenset()]}
    for m in range(1, len(L)):
        choices[m] = [frozenset({m})] if m in sji else all_decompositions(L, m, caps.decompositions)
    return choices


def min_character(M: BModule, caps: Caps = _CAPS) -> CharacterTable:
    """For each target ``v`` of ``x -> xs`` on sji elements, pick the decomposition of
    ``v`` that contains the fewest of the x mapping onto it. Targets are
    independent, so the per-target minima add up to the global minimum."""
    L = M.carrier
    choices = _decomposition_choices(M, caps)
    values = []
    for s in M.semigroup.elements:
        hits: dict[int, set[int]] = {}
        for x in L.sji:
            hits.setdefault(M.action[s][x], set()).add(x)
        values.append(sum(min(len(X & xs) for X in choices[v]) for v, xs in hits.items()))
    return CharacterTable(tuple(values))


def sections(M: BModule, caps: Caps = _CAPS) -> Iterable[dict[int, frozenset[int]]]:
    """Every set-theoretic section fixing the sji elements (0 goes to the empty set)."""
    choices = _decomposition_choices(M, caps)
    free_elems = [m for m in sorted(choices) if len(choices[m]) > 1]
    count = 1
    for m in free_elems:
        count *= len(choices[m])
    if count > caps.sections:
        raise CapExceeded("sections", count, caps.sections)
    fixed = {m: c[0] for m, c in choices.items() if len(c) == 1}
    for pick in product(*(choices[m] for m in free_elems)):
        sigma = dict(fixed)
        sigma.update(zip(free_elems, pick))
        yield sigma


def section_count(M: BModule, caps: Caps = _CAPS) -> int:
    count = 1
    for c in _decomposition_choices(M, caps).values():
        count *= len(c)
    return count


def section_character(M: BModule, sigma: dict[int, frozenset[int]], s: int) -> int:
    return sum(1 for x in M.carrier.sji if x in sigma[M.action[s][x]])


def min_character_by_sections(M: BModule, caps: Caps = _CAPS) -> CharacterTable:
    """Reference computation: full minimisation over all sections."""
    secs = list(sections(M, caps))
    return CharacterTable(
        tuple(min(section_character(M, sg, s) for sg in secs) for s in M.semigroup.elements)
    )


# ---------------------------------------------------------------------------
# Generalized characters


def _check_d(M: BModule, D: Iterable[int]) -> frozenset[int]:
    D = frozenset(D)
    if 0 in D or not set(M.carrier.sji) <= D or not D <= set(range(len(M))):
        raise BadD("need min M <= D <= M minus zero")
    return D


def generalized_character(M: BModule, D: Iterable[int]) -> CharacterTable:
    """Number of elements of D fixed by each s."""
    D = _check_d(M, D)
    return CharacterTable(tuple(sum(1 for m in D if row[m] == m) for row in M.action))


def spectrum_sufficient(M: BModule, D: Iterable[int]) -> bool:
    """D together with 0 is closed under the action."""
    D = _check_d(M, D)
    return all(row[d] == 0 or row[d] in D for row in M.action for d in D)


def is_unambiguous_rep(rep: MatrixRep) -> bool:
    """Integer products of images equal the images of products (no truncation)."""
    S = rep.semigroup
    for s in S.elements:
        for t in S.elements:
            if rep.images[s].int_product(rep.images[t]) != rep.images[S.mul(s, t)].to_lists():
                return False
    return True


def is_unambiguous(M: BModule) -> bool:
    if not M.carrier.is_free():
        raise NotFree("unambiguity is defined for free modules only")
    return is_unambiguous_rep(matrix_rep_of(M))


# ---------------------------------------------------------------------------
# Schützenberger characters


def schutzenberger_character_of(T: FiniteSemigroup, r_class: Sequence[int]) -> CharacterTable:
    """Fixed points of the partial right action of T on an R-class."""
    R = set(r_class)
    return CharacterTable(tuple(sum(1 for r in R if T.mul(r, t) == r) for t in T.elements))


def schutzenberger_character(S: FiniteSemigroup, G: GreenStructure, j: int, caps: Caps = _CAPS) -> CharacterTable:
    """Schützenberger character of AGGM_J(S) on an R-class of its distinguished
    J-class, pulled back to S."""
    A = aggm(S, G, j, caps)
    T = A.semigroup
    GT = green_structure(T)
    found = distinguished_ideal(T, GT)
    if found is None:
        raise AssertionError("AGGM quotient has no distinguished ideal")
    _, jt = found
    members = GT.j_members(jt)
    first_r = GT.r_class[members[0]]
    R = [t for t in members if GT.r_class[t] == first_r]
    chi = schutzenberger_character_of(T, R)
    return CharacterTable(tuple(chi[A.quotient_map[s]] for s in S.elements))


@dataclass(frozen=True)
class SchutzCheck:
    ok: bool
    d: frozenset[int]
    psi: CharacterTable
    schutzenberger: CharacterTable
    spectrum_sufficient: bool
    faithful: bool
    injective: bool


def schutz_char_theorem_check(S: FiniteSemigroup, G: GreenStructure, j: int, caps: Caps = _CAPS) -> SchutzCheck:
    I = irreducible_module(S, G, j, caps)
    M = I.module
    D = frozenset(I.l_class_to_element)
    suff = spectrum_sufficient(M, D)
    faithful = is_faithful(M)
    injective = len(D) == len(I.l_class_to_element)
    psi = generalized_character(M, D)
    chi = schutzenberger_character(S, G, j, caps)
    ok = suff and (injective or not faithful) and psi == chi
    return SchutzCheck(ok, D, psi, chi, suff, faithful, injective)
