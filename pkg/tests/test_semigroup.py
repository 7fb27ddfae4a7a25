from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolrep.corpus import full_transformation_monoid, load_corpus, semilattice
from boolrep.errors import EmptyGeneratorList, NonAssociative, NotRegular, OutOfRange, UnknownFixture
from boolrep.semigroup import (
    FiniteSemigroup,
    apex_ideal,
    eggbox,
    find_nonassociative_triple,
    green_structure,
    j_class_geometry,
)

from conftest import CORPUS, structure


def test_trivial_table():
    S = FiniteSemigroup.from_table([[0]])
    G = green_structure(S)
    assert S.order == 1
    assert G.num_j_classes == 1 and G.regular == (True,)
    assert G.maximal_subgroups[0][0].order == 1


def test_semilattice_table():
    S = semilattice()
    assert S.idempotents() == [0, 1]
    G = green_structure(S)
    assert G.regular == (True, True)
    j1, je = G.j_class[0], G.j_class[1]
    assert j1 != je
    assert G.j_leq(je, j1) and not G.j_leq(j1, je)


def test_nonassociative_witness():
    table = [[1, 0], [0, 0]]
    with pytest.raises(NonAssociative) as info:
        FiniteSemigroup.from_table(table)
    s, t, u = info.value.witness
    assert table[table[s][t]][u] != table[s][table[t][u]]
    # brute force agrees that some triple fails
    bad = [(a, b, c) for a, b, c in product(range(2), repeat=3)
           if table[table[a][b]][c] != table[a][table[b][c]]]
    assert bad and find_nonassociative_triple(table) == bad[0]


@pytest.mark.parametrize("table", [[[0, 2], [1, 0]], [[0, 1]], [[0, 1], [1]]])
def test_out_of_range(table):
    with pytest.raises(OutOfRange):
        FiniteSemigroup.from_table(table)


def test_transformations_basic():
    assert FiniteSemigroup.from_transformations(2, [[0, 0]]).order == 1
    Z2 = FiniteSemigroup.from_transformations(2, [[1, 0]])
    assert Z2.order == 2
    assert Z2.identity() is not None
    with pytest.raises(EmptyGeneratorList):
        FiniteSemigroup.from_transformations(2, [])
    with pytest.raises(OutOfRange):
        FiniteSemigroup.from_transformations(2, [[0, 2]])


def test_t3_matches_all_maps():
    T = full_transformation_monoid(3)
    assert T.order == 27
    maps = {T.label(s) for s in T.elements}
    assert maps == {"".join(map(str, f)) for f in product(range(3), repeat=3)}
    # composition is "left map first"
    for s, t in product(T.elements, repeat=2):
        f, g = T.label(s), T.label(t)
        assert T.label(T.mul(s, t)) == "".join(g[int(x)] for x in f)


def test_t3_green():
    S, G = structure("t3")
    assert G.num_j_classes == 3 and all(G.regular)
    by_rank = {}
    for j in range(3):
        rank = len(set(S.label(G.j_members(j)[0])))
        by_rank[rank] = G.maximal_subgroups[j][0].order
    assert by_rank == {1: 1, 2: 2, 3: 6}


def test_t3_green_by_brute_force():
    S, G = structure("t3")
    n = S.order
    ones = [None] + list(S.elements)

    def mul1(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return S.mul(a, b)

    ideal = [frozenset(mul1(mul1(x, s), y) for x in ones for y in ones) for s in range(n)]
    for a, b in product(range(n), repeat=2):
        assert (G.j_class[a] == G.j_class[b]) == (ideal[a] == ideal[b])


def test_apex_ideal():
    S = semilattice()
    G = green_structure(S)
    assert apex_ideal(S, G, G.j_class[0]) == {1}
    S, G = structure("t3")
    kernel = [j for j in range(3) if all(G.j_leq(j, i) for i in range(3))][0]
    assert apex_ideal(S, G, kernel) == frozenset()
    top = G.j_class[S.identity()]
    units = set(G.j_members(top))
    assert apex_ideal(S, G, top) == set(S.elements) - units


def test_apex_ideal_against_definition(fixture_name):
    S, G = structure(fixture_name)
    for j in range(G.num_j_classes):
        J = set(G.j_members(j))
        expected = set()
        for s in S.elements:
            above = {s} | {S.mul(x, s) for x in S.elements} | {S.mul(s, y) for y in S.elements}
            above |= {S.mul(S.mul(x, s), y) for x in S.elements for y in S.elements}
            if not J <= above:
                expected.add(s)
        I = apex_ideal(S, G, j)
        assert I == expected
        assert all(S.mul(a, s) in I and S.mul(s, a) in I for a in I for s in S.elements)


def test_geometry_examples():
    S, G = structure("rect-band-2x2")
    geo = j_class_geometry(S, G, 0)
    assert geo.h_idempotent == ((True, True), (True, True))
    S, G = structure("brandt-b2")
    j = G.j_class[0]
    geo = j_class_geometry(S, G, j)
    assert geo.h_idempotent == ((True, False), (False, True))
    S, G = structure("z3")
    assert j_class_geometry(S, G, 0).h_idempotent == ((True,),)


def test_geometry_not_regular():
    S, G = structure("null-2")
    nonreg = [j for j in range(G.num_j_classes) if not G.regular[j]]
    assert nonreg
    with pytest.raises(NotRegular):
        j_class_geometry(S, G, nonreg[0])


def test_eggbox_marks_idempotents():
    S, G = structure("brandt-b2")
    box = eggbox(S, G, G.j_class[0])
    assert box.count("*") == 2
    assert "e12" in box and "e21" in box


def test_green_invariants(fixture_name):
    S, G = structure(fixture_name)
    for a, b in product(S.elements, repeat=2):
        same_h = G.h_class[a] == G.h_class[b]
        assert same_h == (G.r_class[a] == G.r_class[b] and G.l_class[a] == G.l_class[b])
    for j in G.regular_j_classes():
        geo = j_class_geometry(S, G, j)
        assert all(any(row) for row in geo.h_idempotent)
        assert all(any(col) for col in zip(*geo.h_idempotent))
        sub, emb = G.maximal_subgroups[j]
        e = G.transversal[j]
        assert e in G.idempotents and e == min(x for x in G.j_members(j) if x in G.idempotents)
        ident = emb.index(e)
        for x in sub.elements:
            assert sub.mul(ident, x) == x == sub.mul(x, ident)
            assert any(sub.mul(x, y) == ident for y in sub.elements)


def test_fact_idempotents_iso(fixture_name):
    S, G = structure(fixture_name)
    E = sorted(G.idempotents)
    for e, f in product(E, repeat=2):
        iso = any(S.mul(x, y) == e and S.mul(y, x) == f for x in S.elements for y in S.elements)
        assert iso == (G.j_class[e] == G.j_class[f])


def test_fact_regular_j_class(fixture_name):
    S, G = structure(fixture_name)
    for j in range(G.num_j_classes):
        J = G.j_members(j)
        has_idem = any(s in G.idempotents for s in J)
        square_meets = any(S.mul(a, b) in J for a in J for b in J)
        regular = [any(S.mul(S.mul(s, x), s) == s for x in S.elements) for s in J]
        assert G.regular[j] == has_idem == square_meets == any(regular) == all(regular)


def test_fact_drop_out_of_j(fixture_name):
    S, G = structure(fixture_name)
    for j, e in G.transversal.items():
        eSe = {S.mul(S.mul(e, s), e) for s in S.elements}
        corner = {x for x in eSe if G.j_class[x] == j}
        assert corner == set(G.maximal_subgroups[j][1])


def test_load_corpus():
    assert load_corpus("brandt-b2").order == 5
    assert load_corpus("t3").order == 27
    assert load_corpus("trivial").order == 1
    with pytest.raises(UnknownFixture):
        load_corpus("nope")


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_fixtures_validate(name):
    S = load_corpus(name)
    assert find_nonassociative_triple(S.table) is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([n for n in CORPUS if load_corpus(n).order <= 12]), st.randoms(use_true_random=False))
def test_green_relabel_invariant(name, rnd):
    S, G = structure(name)
    perm = list(S.elements)
    rnd.shuffle(perm)
    H = green_structure(S.relabel(perm))
    for part in ("r_class", "l_class", "j_class", "h_class"):
        p, q = getattr(G, part), getattr(H, part)
        for a, b in product(S.elements, repeat=2):
            assert (p[a] == p[b]) == (q[perm[a]] == q[perm[b]])
    assert sorted(perm[e] for e in G.idempotents) == sorted(H.idempotents)
    assert sum(G.regular) == sum(H.regular)
