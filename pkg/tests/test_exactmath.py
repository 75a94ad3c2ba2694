from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tpalg.exactmath import (
    QQ,
    FieldError,
    FieldSpec,
    Matrix,
    Residue,
    Subspace,
    kernel,
    rank,
    rref,
    solve,
    spin,
)

GF3 = FieldSpec.gf(3)
GF5 = FieldSpec.gf(5)


def small_matrix(field, rows=3, cols=4):
    vals = st.integers(-3, 3) if not field.is_finite else st.integers(0, field.p - 1)
    return st.lists(st.lists(vals, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda r: Matrix(field, r, cols)
    )


def test_field_parse_and_format_roundtrip():
    assert QQ.fmt(QQ.parse("-3/4")) == "-3/4"
    assert QQ.fmt(QQ("7")) == "7"
    assert GF5.fmt(GF5.parse("4")) == "4"


@pytest.mark.parametrize("text", ["2/4", "1/0", "1/-2", "x"])
def test_rational_parse_rejects(text):
    with pytest.raises(FieldError):
        QQ.parse(text)


@pytest.mark.parametrize("kind,p", [("GF", 4), ("GF", 2), ("GF", None), ("Q", 3), ("R", None)])
def test_bad_fields(kind, p):
    with pytest.raises(FieldError):
        FieldSpec(kind, p)


def test_gf_scalar_out_of_range():
    with pytest.raises(FieldError):
        GF3.parse("3")


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldError):
        QQ(Residue(1, 3))
    with pytest.raises(FieldError):
        GF5(Residue(1, 3))


def test_residue_arithmetic():
    a, b = GF5(3), GF5(4)
    assert a + b == GF5(2)
    assert a * b == GF5(2)
    assert a / b * b == a
    assert GF5(1) / 2 == GF5(3)
    with pytest.raises(ZeroDivisionError):
        GF5(0).inverse()


def test_fraction_into_gf():
    assert GF5(Fraction(1, 2)) == GF5(3)


def test_kernel_known():
    m = Matrix(QQ, [[1, 2, 3], [2, 4, 6]])
    k = kernel(m)
    assert k.dim == 2
    for v in k.vectors():
        assert not any(m.apply(v))


def test_solve_inconsistent():
    m = Matrix(QQ, [[1, 1], [1, 1]])
    assert solve(m, [1, 2]) is None
    assert solve(m, [2, 2]) is not None


def test_subspace_lattice():
    e = [tuple(QQ(int(i == j)) for j in range(3)) for i in range(3)]
    a = Subspace.span(QQ, 3, [e[0], e[1]])
    b = Subspace.span(QQ, 3, [e[1], e[2]])
    assert (a & b).dim == 1
    assert (a + b).is_full()
    assert Subspace.span(QQ, 3, [e[1]]) <= a
    assert Subspace.span(QQ, 3, [(1, 1, 0), (1, -1, 0)]) == a


def test_spin_cyclic_shift():
    shift = Matrix(GF3, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert spin(GF3, 3, [(1, 0, 0)], [shift]).is_full()
    assert spin(GF3, 3, [(1, 1, 1)], [shift]).dim == 1


@settings(max_examples=60, deadline=None)
@given(small_matrix(QQ))
def test_rank_nullity_q(m):
    assert rank(m) + kernel(m).dim == m.ncols


@settings(max_examples=60, deadline=None)
@given(small_matrix(GF5, 4, 5))
def test_rank_nullity_gf(m):
    assert rank(m) + kernel(m).dim == m.ncols


@settings(max_examples=40, deadline=None)
@given(small_matrix(GF3, 3, 3), small_matrix(GF3, 3, 3))
def test_rref_idempotent_and_row_space(a, b):
    r = rref(a)
    assert rref(r) == r
    assert Subspace.from_matrix(a) == Subspace.from_matrix(r)
    # intersection is contained in both and dims obey the modular law
    sa, sb = Subspace.from_matrix(a), Subspace.from_matrix(b)
    assert (sa & sb) <= sa and (sa & sb) <= sb
    assert (sa + sb).dim + (sa & sb).dim == sa.dim + sb.dim


@settings(max_examples=40, deadline=None)
@given(small_matrix(QQ, 3, 3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_solve_round_trip(m, x):
    b = m.apply([QQ(v) for v in x])
    sol = solve(m, b)
    assert sol is not None
    assert m.apply(sol) == b


@settings(max_examples=40, deadline=None)
@given(small_matrix(GF5, 3, 3), st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_spin_is_invariant(op, g):
    s = spin(GF5, 3, [g], [op])
    for v in s.vectors():
        assert s.contains(op @ v)
    assert s.contains([GF5(x) for x in g])
