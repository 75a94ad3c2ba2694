import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_algebra
from tpalg import catalog
from tpalg import kantor as K
from tpalg import structure as S
from tpalg.algebra import Product, left_mult_operator, validate
from tpalg.exactmath import FieldSpec, Subspace
from tpalg.identities import check, defect

GF3 = FieldSpec.gf(3)


def test_layout_and_parity():
    P = catalog.get("grassmann1_q")
    J = K.kantor_double(P)
    assert J.dim == 4
    assert J.parity == (0, 1, 1, 0)
    assert J.meta["layout"]["kind"] == "kantor"
    assert validate(J).ok


def test_p10_double():
    P = catalog.get("tp_sl2_gf3")
    J = K.kantor_double(P)
    assert K.is_jordan(J).passed
    ann = S.annihilator(J)
    assert ann.contains(J.basis_vector(2))
    assert ann == Subspace.span(GF3, 6, [J.basis_vector(1), J.basis_vector(2)])
    r = S.is_simple(J, "CIRC")
    assert r.verdict == S.NOT_SIMPLE and r.vectors_checked == 728
    assert r.witness == Subspace.span(GF3, 6, [J.basis_vector(2)])
    ob = K.double_simplicity_obstruction(P, J)
    assert ob.dim == 4 and S.is_ideal(J, ob, "CIRC")


def test_obstruction_absent_when_perfect():
    assert K.double_simplicity_obstruction(catalog.get("solvable3_q")) is None


def test_products_follow_rules():
    P = catalog.get("nonlie_remark_q")
    J = K.kantor_double(P)
    x, y = P.vector((1, 2, 0)), P.vector((0, 1, 3))
    assert J.circ_mul(K.unstarred(P, x), K.unstarred(P, y)) == K.unstarred(P, P.circ_mul(x, y))
    assert J.circ_mul(K.starred(P, x), K.unstarred(P, y)) == K.starred(P, P.circ_mul(x, y))
    assert J.circ_mul(K.starred(P, x), K.starred(P, y)) == K.unstarred(P, P.br(x, y))


def test_lie_double():
    P = catalog.get("nonlie_remark_q")
    L = K.lie_double(P)
    assert L.parity == (0, 0, 0, 1, 1, 1)
    d = defect(L, "JACOBI", (5, 5, 5))
    assert d == K.starred(P, P.vector((-3, -3, 0)))
    assert not check(L, "JACOBI").passed
    with pytest.raises(K.DoubleError):
        K.lie_double(catalog.get("grassmann1_q"))


def test_lie_double_of_poisson_is_lie():
    assert check(K.lie_double(catalog.get("dual_numbers_q")), "JACOBI").passed


@pytest.mark.parametrize("key", catalog.keys())
def test_block_forms(key):
    P = catalog.get(key)
    J = K.kantor_double(P)
    for i in range(P.dim):
        La, Las = K.expected_blocks(P, i)
        assert left_mult_operator(J, Product.CIRC, J.basis_vector(i)) == La
        assert left_mult_operator(J, Product.CIRC, J.basis_vector(P.dim + i)) == Las


@pytest.mark.parametrize("key", [k for k in catalog.keys() if k != "radical_demo_q"])
def test_doubles_of_catalog_are_jordan(key):
    assert K.is_jordan(K.kantor_double(catalog.get(key))).passed


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.booleans())
def test_double_is_valid_and_supercommutative(seed, dim, graded):
    P = random_algebra(random.Random(seed), dim, GF3, 0.4, graded)
    J = K.kantor_double(P)
    assert validate(J).ok
    assert J.dim == 2 * dim
