import pytest
from hypothesis import given, settings, strategies as st

from monodromy import known
from monodromy.exact_linalg import Matrix, bracket, rank
from monodromy.homology import build_model
from monodromy.lie import (
    GroupWord, LieAlgebraBasis, Seed, Verdict, bracket_closure, conjugation_stable,
    cyclic_module, enumerate_words, identify_symplectic, in_sp, is_closed,
    minimal_pf_degree, seed_generators, sp_dimension)
from monodromy.rep import reduce


@pytest.fixture(scope="module")
def rep2():
    return reduce(build_model(2))


@pytest.fixture(scope="module")
def rep1():
    return reduce(build_model(1))


@pytest.fixture(scope="module")
def closure2(rep2):
    return bracket_closure(seed_generators(rep2, 3))


def e0(n):
    return tuple(int(i == 0) for i in range(n))


def test_words():
    words = list(enumerate_words(2))
    assert len(words) == 4 + 12
    assert str(words[0]) == "M1"
    assert GroupWord(("M2", "M2")) in words
    assert GroupWord(("M2", "M2^-1")) not in words
    with pytest.raises(ValueError):
        GroupWord(("M3",))


def test_word_evaluation(rep2):
    w = GroupWord(("M2", "M1", "M2^-1"))
    assert w.evaluate(rep2) == known.M2_M1_M2INV_RED_P2
    assert GroupWord(("M2", "M2")).evaluate(rep2) == known.M2_SQUARED_RED_P2


def test_seeds_p2_contain_abc(rep2):
    seeds = seed_generators(rep2, 3)
    mats = [s.matrix for s in seeds]
    for m in (known.A_P2, known.B_P2, known.C_P2):
        assert m in mats
    labels = {s.label: s.matrix for s in seeds}
    assert labels["log(M1)"] == known.A_P2
    assert labels["log((M2)^2)"] == known.C_P2
    assert labels["log(M2 M1 M2^-1)"] == known.B_P2
    assert all(not s.matrix.is_zero() for s in seeds)


def test_seeds_p1(rep1):
    seeds = seed_generators(rep1, 3)
    assert rank(Matrix.from_rows([s.matrix.flat() for s in seeds])) >= 2


def test_seed_cap_validation(rep2):
    with pytest.raises(ValueError):
        seed_generators(rep2, 0)


def test_closure_p2(rep2, closure2):
    assert closure2.dim == 10
    assert all(in_sp(x, rep2.j_form) for x in closure2.elements)
    assert identify_symplectic(closure2, rep2.j_form) is Verdict.EQUALS_SP


def test_closure_abc():
    assert bracket_closure([known.A_P2, known.B_P2, known.C_P2]).dim == 10


def test_closure_trivial():
    assert bracket_closure([]).dim == 0
    assert bracket_closure([Matrix.zeros(4)]).dim == 0


def test_closure_ab_sl2():
    a, b = known.A_P2, known.B_P2
    basis = bracket_closure([a, b])
    h = bracket(a, b)
    assert basis.dim == 3
    assert basis.contains(h)
    assert bracket(h, a) == a * -2
    assert bracket(h, b) == b * 2


def test_closure_shape_mismatch():
    with pytest.raises(ValueError):
        bracket_closure([Matrix.zeros(2), Matrix.zeros(3)])


def test_closure_idempotent(closure2):
    again = bracket_closure(list(closure2.elements))
    assert again.elements == closure2.elements
    assert is_closed(closure2)


def test_conjugation_stability(rep2, closure2):
    for g in (rep2.m1_red, rep2.m2_red, rep2.m1_red.inverse(), rep2.m2_red.inverse()):
        assert conjugation_stable(closure2, g)


def test_saturation_p2(rep2, closure2):
    c4 = bracket_closure(seed_generators(rep2, 4))
    assert c4.dim == 10
    s = c4.sifter()
    assert all(s.contains(x.flat()) for x in closure2.elements)


def test_deterministic(rep2, closure2):
    again = bracket_closure(seed_generators(rep2, 3))
    assert again.elements == closure2.elements
    assert again.provenance == closure2.provenance


def test_provenance(closure2):
    assert closure2.provenance[0] == "log(M1)"
    assert all(p.startswith("log(") or p.startswith("[#") for p in closure2.provenance)
    assert bracket_closure([known.A_P2], labels=["a"]).provenance == ("a",)
    assert bracket_closure([Seed("s", known.A_P2)]).provenance == ("s",)


def test_identify(rep2):
    j = rep2.j_form
    assert identify_symplectic(bracket_closure([known.A_P2]), j) is \
        Verdict.PROPER_SUBALGEBRA_OF_SP
    sym = Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert identify_symplectic(bracket_closure([sym]), j) is Verdict.NOT_IN_SP
    with pytest.raises(ValueError):
        identify_symplectic(bracket_closure([Matrix.zeros(2) + Matrix.identity(2)]), j)
    assert sp_dimension(4) == 10 and sp_dimension(6) == 21


def test_cyclic_module(rep2, closure2):
    # oracle: apply a, b, c to d0 directly and rank-check the images
    a, b, c = known.A_P2, known.B_P2, known.C_P2
    v = e0(4)
    images = [v, c.apply(v), b.apply(v), a.apply(b.apply(v)), c.apply(b.apply(v))]
    assert rank(Matrix.from_rows(images)) == 4
    assert len(cyclic_module(v, closure2)) == 4
    assert cyclic_module((0, 0, 0, 0), closure2) == []
    assert cyclic_module(v, LieAlgebraBasis((), ())) == [tuple(v)]


def test_minimal_pf_degree(rep1, rep2, closure2):
    assert minimal_pf_degree(rep2, closure2, e0(4)) == 4
    c1 = bracket_closure(seed_generators(rep1, 3))
    assert c1.dim == 3
    assert minimal_pf_degree(rep1, c1, e0(2)) == 2
    with pytest.raises(ValueError):
        minimal_pf_degree(rep2, closure2, (0, 0, 0, 0))


def test_minimal_pf_degree_toy():
    toy = LieAlgebraBasis((Matrix.from_rows([[2, 0], [0, 3]]),), ("h",))

    class Rep:
        dim = 2
    assert minimal_pf_degree(Rep, toy, (1, 0)) == 1


@pytest.mark.parametrize("p", [1, 2, 3])
def test_sp_preserved_by_brackets(p):
    rep = reduce(build_model(p))
    seeds = seed_generators(rep, 2)
    assert all(in_sp(s.matrix, rep.j_form) for s in seeds)
    closure = bracket_closure(seeds)
    assert all(in_sp(x, rep.j_form) for x in closure.elements)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["a", "b", "c"]), min_size=1, max_size=3))
def test_closure_of_subsets_inside_sp(names):
    gens = {"a": known.A_P2, "b": known.B_P2, "c": known.C_P2}
    j = reduce(build_model(2)).j_form
    basis = bracket_closure([gens[n] for n in names])
    assert identify_symplectic(basis, j) is not Verdict.NOT_IN_SP
    assert is_closed(basis)
