import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_algebra
from tpalg import catalog
from tpalg.algebra import SuperAlgebra
from tpalg.exactmath import QQ, FieldSpec
from tpalg.identities import (
    DERIVED_IDENTITIES,
    OPERATOR_RELATIONS,
    Identity,
    arity,
    check,
    check_tp_axioms,
    defect,
    defect_at,
    is_tp,
)

GF3 = FieldSpec.gf(3)


def tp_superalgebras(count=12, seed=7):
    """Seeded search for TP superalgebras of dim 3 with both products nonzero."""
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        A = random_algebra(rng, 3, GF3, 0.15, graded=True)
        if A.circ and A.bracket and A.is_graded and is_tp(A):
            found.append(A)
    return found


def test_parse_aliases():
    assert Identity.parse("jacobi") is Identity.JACOBI_SUPER
    assert Identity.parse("Leibniz") is Identity.TP_LEIBNIZ_SUPER
    with pytest.raises(ValueError):
        Identity.parse("FOO")


def test_arities():
    assert arity("ASSOC_CIRC") == 3
    assert arity("PROPEQ2") == 4
    assert arity("REL_PQ1") == 2


def test_sl2_is_lie():
    assert check(catalog.get("sl2"), "JACOBI_SUPER").passed


def test_leibniz_counterexample_is_reported():
    # sl2 with a unital circ fails the Leibniz law
    L = catalog.get("sl2")
    circ = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1)]
    A = SuperAlgebra("bad", QQ, 3, None, circ, L.bracket)
    rep = check(A, "TP_LEIBNIZ_SUPER")
    assert rep.verdict == "FAIL"
    assert defect(A, "TP_LEIBNIZ_SUPER", rep.counterexample) == rep.defect
    assert rep.tuples_checked >= 1


def test_defect_arity_checked():
    with pytest.raises(ValueError):
        defect(catalog.get("sl2"), "JACOBI", (0, 1))


def test_inhomogeneous_arguments_rejected():
    A = catalog.get("grassmann1_q")
    with pytest.raises(ValueError):
        defect_at(A, "ASSOC", [(1, 1), (1, 0), (1, 0)])


def test_super_signs_are_observable():
    # the same tables read as ungraded break Jacobi and Leibniz
    for t in (0, 1):
        A = catalog.get("grassmann_derivation_q", with_t=t)
        assert is_tp(A)
        U = SuperAlgebra("ungraded", A.field, A.dim, None, A.circ, A.bracket)
        verdicts = [r.verdict for r in check_tp_axioms(U)]
        assert verdicts == ["PASS", "FAIL", "FAIL"]


@pytest.mark.parametrize("A", tp_superalgebras(), ids=lambda A: "rand")
def test_consequences_on_random_tp_superalgebras(A):
    for ident in DERIVED_IDENTITIES + OPERATOR_RELATIONS:
        assert check(A, ident).passed, ident


def test_jordan_on_associative_supercommutative():
    # a supercommutative associative algebra is Jordan
    A = catalog.get("grassmann_derivation_q", with_t=1)
    B = SuperAlgebra("circ-only", A.field, A.dim, A.parity, A.circ, ())
    assert check(B, "JORDAN_SUPER").passed


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(-2, 2), st.integers(-2, 2))
def test_scaling_preserves_tp(seed, lam, mu):
    rng = random.Random(seed)
    L = catalog.get("solvable3_q")
    A = SuperAlgebra(
        "scaled", QQ, 3, None,
        [(i, j, k, lam * c) for i, j, k, c in L.circ],
        [(i, j, k, mu * c) for i, j, k, c in L.bracket],
    )
    assert is_tp(A)
    # zero circ on any Lie bracket is TP; zero bracket on any commutative associative circ is TP
    R = random_algebra(rng, 3, GF3, 0.3)
    assert check(SuperAlgebra("l", GF3, 3, None, (), R.bracket), "TP_LEIBNIZ").passed
    assert check(SuperAlgebra("c", GF3, 3, None, R.circ, ()), "TP_LEIBNIZ").passed


@settings(max_examples=30, deadline=None)
@given(
    st.integers(0, 10**6),
    st.lists(st.integers(0, 2), min_size=3, max_size=3),
    st.lists(st.integers(0, 2), min_size=3, max_size=3),
    st.lists(st.integers(0, 2), min_size=3, max_size=3),
    st.lists(st.integers(0, 2), min_size=3, max_size=3),
)
def test_defects_are_multilinear(seed, x, x2, y, z):
    A = random_algebra(random.Random(seed), 3, GF3, 0.5)
    xs = [a + b for a, b in zip(x, x2)]
    for ident in ("ASSOC", "JACOBI", "LEIBNIZ"):
        lhs = defect_at(A, ident, [xs, y, z])
        r1 = defect_at(A, ident, [x, y, z])
        r2 = defect_at(A, ident, [x2, y, z])
        assert lhs == tuple(a + b for a, b in zip(r1, r2))


def slow_jordan_first_failure(A):
    import itertools

    for tup in itertools.product(range(A.dim), repeat=3):
        d = defect(A, "JORDAN", tup)
        if not d.is_zero():
            return tup
    return None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4), st.booleans(), st.sampled_from(["GF3", "Q"]))
def test_vectorised_jordan_matches_loop(seed, dim, graded, field):
    f = GF3 if field == "GF3" else QQ
    R = random_algebra(random.Random(seed), dim, f, 0.3, graded)
    A = SuperAlgebra("one-product", f, dim, R.parity, R.circ, ())
    rep = check(A, "JORDAN")
    assert rep.counterexample == slow_jordan_first_failure(A)
    if not rep.passed:
        assert not rep.defect.is_zero()
