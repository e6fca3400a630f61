from fractions import Fraction

import pytest

from monodromy import known
from monodromy.cartan import (
    OPPOSITES, ROOT_ORDER, RootDecompositionError, ad_eigenvalue, build_root_decomposition)
from monodromy.exact_linalg import Matrix, bracket, span_basis
from monodromy.lie import bracket_closure


@pytest.fixture(scope="module")
def dec():
    return build_root_decomposition(known.A_P2, known.B_P2, known.C_P2)


def test_sl2_triple():
    a, b = known.A_P2, known.B_P2
    h = bracket(a, b)
    assert bracket(h, a) == a * -2
    assert bracket(h, b) == b * 2
    assert bracket(a, b) == h


def test_cartan_commutes(dec):
    assert bracket(dec.h1, dec.h2).is_zero()


def test_x12_on_h1(dec):
    assert bracket(dec.h1, dec.root_vectors["X12"]) == dec.root_vectors["X12"]


def test_u2_on_h2(dec):
    u2 = dec.root_vectors["U2"]
    assert bracket(dec.h2, u2) == u2 * 10


def test_root_values(dec):
    l1, l2 = known.LAMBDA1, known.LAMBDA2
    for name in ROOT_ORDER:
        c1, c2 = known.ROOTS[name]
        expected = (c1 * l1[0] + c2 * l2[0], c1 * l1[1] + c2 * l2[1])
        assert dec.root_values[name] == expected


def test_opposite_roots(dec):
    for x, y in OPPOSITES:
        rx, ry = dec.root_values[x], dec.root_values[y]
        assert (rx[0] + ry[0], rx[1] + ry[1]) == (0, 0)


def test_span_equals_closure(dec):
    els = dec.elements()
    assert len(span_basis(els)) == 10
    closure = bracket_closure([known.A_P2, known.B_P2, known.C_P2])
    s_dec = bracket_closure(els).sifter()
    s_cl = closure.sifter()
    assert all(s_cl.contains(x.flat()) for x in els)
    assert all(s_dec.contains(x.flat()) for x in closure.elements)


def test_ad_eigenvalue_errors():
    h = Matrix.from_rows([[1, 0], [0, -1]])
    assert ad_eigenvalue(h, Matrix.from_rows([[0, 1], [0, 0]])) == 2
    with pytest.raises(RootDecompositionError, match="not an ad-eigenvector"):
        ad_eigenvalue(h, Matrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(RootDecompositionError):
        ad_eigenvalue(h, Matrix.zeros(2))


def test_transcription_error_detected():
    c_bad = known.C_P2 * 2
    with pytest.raises(RootDecompositionError):
        build_root_decomposition(known.A_P2, known.B_P2, c_bad)


def test_table_output(dec):
    text = dec.format_table()
    assert "U2   2l2" in text
    d = dec.to_json()
    assert [r["name"] for r in d["roots"]] == list(ROOT_ORDER)
    assert d["roots"][0]["values"] == ["1/1", "-10/1"]
    assert dec.root_values["V2"] == (Fraction(0), Fraction(-10))
