"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the terminal summary
(see ``conftest.py``); run ``pytest tests/test_acceptance.py`` to see them.
"""

import time

from boolrep import characters as ch
from boolrep.config import Caps
from boolrep.irreducibles import (
    aggm,
    direct_sum_kernel,
    distinguished_ideal,
    endomorphism_span,
    free_row_span_test,
    has_aperiodic_distinguished_ideal,
    is_dense_span,
    is_ggm,
    largest_jprime_oracle,
    module_corpus,
    spans_full_end,
)
from boolrep.modules import (
    apex,
    are_isomorphic,
    congruences,
    dualize,
    enumerate_modules,
    is_irreducible,
    is_minimal,
    is_minimal_by_enumeration,
    is_simple,
    is_simple_by_enumeration,
    quotient,
)

from conftest import CORPUS, SMALL, irreducibles_of, structure
from test_modules import example_module

RESULTS: dict[int, str] = {}

ORACLE_CAPS = Caps(congruences=10, submodules=10)


def record(n, ok, detail, elapsed, limit=None):
    within = limit is None or elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    RESULTS[n] = f"criterion {n:2d}: {verdict}  {detail}  [{elapsed:.2f}s{budget}]"
    return ok and within


def test_criterion_01_worked_example():
    t = time.perf_counter()
    M = example_module()
    chi = ch.min_character(M)
    per_section = sorted(ch.section_character(M, sg, 1) for sg in ch.sections(M))
    oracle = ch.min_character_by_sections(M)
    ok = chi[1] == 2 and per_section == [2, 2, 3] and oracle == chi
    assert record(1, ok, f"chi(e)={chi[1]}, sections give {per_section}", time.perf_counter() - t, 1)


def test_criterion_02_irreducibility_oracle():
    t = time.perf_counter()
    bad = []
    count = 0
    for name in CORPUS:
        S, G = structure(name)
        for j, I in irreducibles_of(name).items():
            M = I.module
            count += 1
            assert len(M) <= 10
            good = (is_irreducible(M, oracle=True, caps=ORACLE_CAPS) and is_irreducible(M)
                    and apex(M, G) == j)
            if not good:
                bad.append((name, j))
    ok = not bad
    assert record(2, ok, f"{count} modules M_J irreducible by enumeration with apex J; failures {bad}",
                  time.perf_counter() - t, 300)


def test_criterion_03_count_bijection():
    t = time.perf_counter()
    bad = []
    scanned = 0
    for name in CORPUS:
        S, G = structure(name)
        mods = [I.module for I in irreducibles_of(name).values()]
        distinct = all(not are_isomorphic(mods[a], mods[b]) for a in range(len(mods)) for b in range(a))
        if not distinct or len(mods) != len(G.regular_j_classes()):
            bad.append((name, "count"))
        if S.order > 3:
            continue
        classes = []
        for M in enumerate_modules(S, 5):
            scanned += 1
            if not M.nondegenerate or not (is_minimal(M) and is_simple(M)):
                continue
            if not any(are_isomorphic(M, N) for N in mods):
                bad.append((name, "extra irreducible"))
            if not any(are_isomorphic(M, N) for N in classes):
                classes.append(M)
        if len(classes) != len(mods):
            bad.append((name, "missing irreducible"))
    ok = not bad
    assert record(3, ok, f"counts match on {len(CORPUS)} fixtures; {scanned} small modules scanned; "
                  f"failures {bad}", time.perf_counter() - t, 600)


def test_criterion_04_largest_jprime():
    t = time.perf_counter()
    bad = [n for n in SMALL if largest_jprime_oracle(*structure(n)) != direct_sum_kernel(*structure(n))]
    assert record(4, not bad, f"{len(SMALL)} fixtures with |S| <= 7 agree; failures {bad}",
                  time.perf_counter() - t, 120)


def test_criterion_05_duality():
    t = time.perf_counter()
    bad = []
    count = 0
    for name in CORPUS:
        S, G = structure(name)
        for label, M in module_corpus(S, G, max_size=8):
            count += 1
            D = dualize(M)
            if is_simple_by_enumeration(M) != is_minimal_by_enumeration(D):
                bad.append((name, label, "simple"))
            if is_minimal_by_enumeration(M) != is_simple_by_enumeration(D):
                bad.append((name, label, "minimal"))
    assert record(5, not bad, f"{count} modules; failures {bad}", time.perf_counter() - t, 300)


def test_criterion_06_ggm_structure():
    t = time.perf_counter()
    bad = []
    for name in CORPUS:
        S, G = structure(name)
        for j, I in irreducibles_of(name).items():
            T = aggm(S, G, j, irreducible=I).semigroup
            if not (is_ggm(T) and has_aperiodic_distinguished_ideal(T)):
                bad.append((name, j, "aggm"))
            if len(set(I.module.action)) == S.order:
                found = distinguished_ideal(S, G)
                if found is None or found[1] != j:
                    bad.append((name, j, "faithful but not GGM"))
    assert record(6, not bad, f"failures {bad}", time.perf_counter() - t)


def test_criterion_07_density():
    t = time.perf_counter()
    bad = []
    full = 0
    for name in CORPUS:
        for j, I in irreducibles_of(name).items():
            M = I.module
            if not is_dense_span(M):
                bad.append((name, j, "dense"))
            if free_row_span_test(I.sandwich):
                n = len(M.carrier.sji)
                if n > 3:
                    continue
                full += 1
                if not spans_full_end(M) or len(endomorphism_span(M)) != 2 ** (n * n):
                    bad.append((name, j, "full End"))
    assert record(7, not bad, f"all dense; {full} free cases span all n x n matrices; failures {bad}",
                  time.perf_counter() - t)


def test_criterion_08_schutzenberger():
    t = time.perf_counter()
    bad = []
    for name in CORPUS:
        S, G = structure(name)
        for j in G.regular_j_classes():
            if not ch.schutz_char_theorem_check(S, G, j).ok:
                bad.append((name, j))
    assert record(8, not bad, f"failures {bad}", time.perf_counter() - t)


def _facts_hold(S, G):
    E = sorted(G.idempotents)
    for e in E:
        for f in E:
            iso = any(S.mul(x, y) == e and S.mul(y, x) == f for x in S.elements for y in S.elements)
            if iso != (G.j_class[e] == G.j_class[f]):
                return "idempotents"
    for j in range(G.num_j_classes):
        J = G.j_members(j)
        conds = {
            G.regular[j],
            any(s in G.idempotents for s in J),
            any(S.mul(a, b) in J for a in J for b in J),
        }
        reg = [any(S.mul(S.mul(s, x), s) == s for x in S.elements) for s in J]
        conds |= {any(reg), all(reg)}
        if len(conds) != 1:
            return "regular J-class"
    for j, e in G.transversal.items():
        corner = {x for x in (S.mul(S.mul(e, s), e) for s in S.elements) if G.j_class[x] == j}
        if corner != set(G.maximal_subgroups[j][1]):
            return "eSe"
    return None


def test_criterion_09_structural_facts():
    t = time.perf_counter()
    bad = []
    for name in CORPUS:
        S, G = structure(name)
        fact = _facts_hold(S, G)
        if fact:
            bad.append((name, fact))
        for label, M in module_corpus(S, G, max_size=10):
            if not M.nondegenerate or not is_minimal_by_enumeration(M):
                if label.startswith("BB_J"):
                    bad.append((name, label, "free module or quotient not minimal"))
                continue
            for c in congruences(M):
                Q = quotient(M, c)
                if c.proper and Q.nondegenerate and not is_minimal_by_enumeration(Q):
                    bad.append((name, label, "quotient"))
    assert record(9, not bad, f"failures {bad}", time.perf_counter() - t)


def test_criterion_10_group_collapse():
    t = time.perf_counter()
    bad = []
    for name in ("z2", "z3", "s3"):
        S, G = structure(name)
        for I in irreducibles_of(name).values():
            M = I.module
            if len(M) != 2 or any(row != (0, 1) for row in M.action):
                bad.append((name, "module"))
        if direct_sum_kernel(S, G) != (0,) * S.order:
            bad.append((name, "kernel"))
    assert record(10, not bad, f"failures {bad}", time.perf_counter() - t)
