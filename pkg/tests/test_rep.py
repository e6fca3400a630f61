import pytest

from monodromy import known
from monodromy.exact_linalg import Matrix, Sifter, rank
from monodromy.homology import build_model
from monodromy.rep import (
    ReductionError, _quotient, block_form, embed_block_diagonal, reduce, zero_cycle_kernel)


@pytest.fixture(scope="module")
def model2():
    return build_model(2)


def test_kernel_p2(model2):
    kernel = zero_cycle_kernel(model2)
    assert len(kernel) == 2
    s = Sifter(6)
    for v in kernel:
        s.add(v)
        assert not any(model2.omega.apply(v))
    for v in known.KERNEL_P2:
        assert s.contains(v)


def test_kernel_p1():
    assert len(zero_cycle_kernel(build_model(1))) == 2


def test_kernel_rejects_broken_model(model2):
    from dataclasses import replace
    broken = replace(model2, m2=model2.m2 @ model2.m2 + Matrix.identity(6))
    with pytest.raises(ReductionError, match="monodromy not trivial on kernel"):
        zero_cycle_kernel(broken)


def test_reduce_p2(model2):
    rep = reduce(model2)
    assert rep.route == "complement"
    assert rep.m1_red == known.M1_RED_P2
    assert rep.m2_red == known.M2_RED_P2
    assert rank(rep.j_form) == 4
    assert (rep.j_form + rep.j_form.T).is_zero()


def test_block_form_p2(model2):
    rep = reduce(model2)
    change, (b1, b2) = block_form(model2, rep, known.KERNEL_P2)
    assert b1 == embed_block_diagonal(known.M1_RED_P2, 6)
    assert b2 == embed_block_diagonal(known.M2_RED_P2, 6)
    assert change @ b2 @ change.inverse() == model2.m2


def test_m2_red_power_p2(model2):
    m = reduce(model2).m2_red
    eye = Matrix.identity(4)
    sq = m @ m - eye
    assert not sq.is_zero()
    assert (sq @ sq).is_zero()


@pytest.mark.parametrize("p", range(1, 7))
def test_reduce_invariants(p):
    model = build_model(p)
    rep = reduce(model, strict=True)
    assert rep.dim == 2 * p
    assert len(rep.kernel_basis) + rep.dim == model.dim
    j = rep.j_form
    assert rank(j) == 2 * p
    for m in (rep.m1_red, rep.m2_red):
        assert m.T @ j @ m == j
    _, (b1, b2) = block_form(model, rep)
    assert b1 == embed_block_diagonal(rep.m1_red, model.dim)
    assert b2 == embed_block_diagonal(rep.m2_red, model.dim)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_quotient_route_agrees_in_dimension(p):
    model = build_model(p)
    kernel = zero_cycle_kernel(model)
    lifts, names, m1, m2 = _quotient(model, kernel)
    assert len(lifts) == 2 * p
    lift = Matrix.from_columns(lifts)
    j = lift.T @ model.omega @ lift
    assert rank(j) == 2 * p
    for m in (m1, m2):
        assert m.T @ j @ m == j


def test_json_shape(model2):
    d = reduce(model2).to_json()
    assert d["dim"] == 4
    assert d["m1_red"] == known.M1_RED_P2.to_json()
    assert d["lift_names"] == ["d0", "d1", "d12^0+d13+d23", "d12^1+d13+d23"]
