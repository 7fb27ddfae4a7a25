import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolrep import characters as ch
from boolrep.errors import BadD, NotFree
from boolrep.irreducibles import irreducible_module, matrix_rep_of, matrix_semigroup, module_corpus
from boolrep.lattice import BoolMatrix
from boolrep.modules import set_action_module

from conftest import CORPUS, SMALL, irreducibles_of, structure
from test_modules import example_module


def test_example_min_character():
    M = example_module()
    assert ch.min_character(M)[1] == 2
    assert sorted(ch.section_character(M, sg, 1) for sg in ch.sections(M)) == [2, 2, 3]
    assert ch.section_count(M) == 3
    assert ch.min_character_by_sections(M) == ch.min_character(M)
    # the identity fixes the three sji elements
    assert ch.min_character(M)[0] == 3


def test_example_generalized_character():
    M = example_module()
    nonzero = range(1, len(M))
    assert ch.generalized_character(M, nonzero)[1] == 1
    assert ch.spectrum_sufficient(M, nonzero)
    assert not ch.spectrum_sufficient(M, M.carrier.sji)
    with pytest.raises(BadD):
        ch.generalized_character(M, [1])
    with pytest.raises(BadD):
        ch.generalized_character(M, range(len(M)))


def test_singleton_top_in_the_rank_one_case():
    S, G = structure("semilattice")
    for I in irreducibles_of("semilattice").values():
        M = I.module
        assert ch.spectrum_sufficient(M, [M.carrier.top])


def test_chi_matrix_basics():
    S, rep = matrix_semigroup([BoolMatrix.identity(3), BoolMatrix.zero(3, 3)])
    assert sorted(ch.chi_matrix(rep).values) == [0, 3]


def test_chi_matrix_brandt():
    S, G = structure("brandt-b2")
    rep = matrix_rep_of(irreducibles_of("brandt-b2")[G.j_class[0]])
    chi = ch.chi_matrix(rep)
    lab = {S.label(s): chi[s] for s in S.elements}
    assert lab == {"e11": 1, "e12": 0, "e21": 0, "e22": 1, "0": 0}


def test_unambiguity():
    a = BoolMatrix.from_lists([[1, 1], [0, 0]])
    b = BoolMatrix.from_lists([[1, 0], [1, 0]])
    assert a.int_product(b) == [[2, 0], [0, 0]]
    S, rep = matrix_semigroup([a, b])
    assert not ch.is_unambiguous_rep(rep)
    S, G = structure("s3")
    M = set_action_module(S, 3, lambda x, s: int(S.label(s)[x]))
    assert ch.is_unambiguous(M)
    S, G = structure("t3")
    M = set_action_module(S, 3, lambda x, s: int(S.label(s)[x]))
    assert ch.is_unambiguous(M)
    (mid,) = [I for I in irreducibles_of("t3").values() if len(I.module) == 5]
    with pytest.raises(NotFree):
        ch.is_unambiguous(mid.module)


def test_set_action_characters():
    for name in ("s3", "t3", "t2"):
        S, G = structure(name)
        deg = len(S.label(0))
        M = set_action_module(S, deg, lambda x, s: int(S.label(s)[x]))
        chi = ch.chi_matrix(matrix_rep_of(M))
        assert ch.generalized_character(M, M.carrier.sji) == chi
        assert ch.min_character(M) == chi
        assert chi.values == tuple(sum(1 for x in range(deg) if S.label(s)[x] == str(x)) for s in S.elements)
        rep = matrix_rep_of(M)
        for s in S.elements:
            for t in S.elements:
                assert rep.images[s].int_product(rep.images[t]) == rep.images[S.mul(s, t)].to_lists()


def corpus_modules():
    for name in SMALL + ["t3"]:
        S, G = structure(name)
        for label, M in module_corpus(S, G):
            if M.nondegenerate:
                yield f"{name}:{label}", S, M


MODULES = list(corpus_modules())


@pytest.mark.parametrize("case", MODULES, ids=[c[0] for c in MODULES])
def test_min_character_against_sections(case):
    _, S, M = case
    assert ch.section_count(M) <= 10**5
    secs = list(ch.sections(M))
    chi = ch.min_character(M)
    for s in S.elements:
        vals = [ch.section_character(M, sg, s) for sg in secs]
        assert chi[s] == min(vals)
    one = S.identity()
    if one is not None and all(M.action[one][m] == m for m in range(len(M))):
        assert chi[one] == len(M.carrier.sji)
    if M.carrier.is_free():
        assert chi == ch.chi_matrix(matrix_rep_of(M))


@pytest.mark.parametrize("name", CORPUS)
def test_schutzenberger_theorem(name):
    S, G = structure(name)
    for j in G.regular_j_classes():
        check = ch.schutz_char_theorem_check(S, G, j)
        assert check.spectrum_sufficient
        assert check.psi == check.schutzenberger
        assert check.ok


def test_schutzenberger_examples():
    S, G = structure("brandt-b2")
    chi = ch.schutzenberger_character(S, G, G.j_class[0])
    assert {S.label(s): chi[s] for s in S.elements} == {"e11": 1, "e12": 0, "e21": 0, "e22": 1, "0": 0}
    S, G = structure("semilattice")
    assert ch.schutzenberger_character(S, G, G.j_class[1]).values == (1, 1)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["s3", "z3", "t2", "brandt-b2"]), st.data())
def test_generalized_character_bounds(name, data):
    S, G = structure(name)
    j = data.draw(st.sampled_from(G.regular_j_classes()))
    M = irreducible_module(S, G, j).module
    extra = data.draw(st.sets(st.integers(1, len(M) - 1)))
    D = set(M.carrier.sji) | extra
    psi = ch.generalized_character(M, D)
    assert all(0 <= v <= len(D) for v in psi.values)
    full = ch.generalized_character(M, range(1, len(M)))
    assert all(a <= b for a, b in zip(psi.values, full.values))
