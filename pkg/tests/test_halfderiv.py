import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_algebra
from tpalg import catalog
from tpalg import halfderiv as H
from tpalg.algebra import Product
from tpalg.exactmath import FieldSpec, Matrix, UnsupportedFieldError

GF3 = FieldSpec.gf(3)


def tensor(A, which):
    n = A.dim
    T = np.zeros((n, n, n), dtype=np.int64)
    for i, j, k, c in A.table(which):
        T[i, j, k] = int(c)
    return T


def brute_force_count(A, which="bracket"):
    """Count half-derivations of an ungraded algebra over GF(p) by trying every matrix."""
    p, n = A.field.p, A.dim
    T = tensor(A, which)
    mats = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    # D columns are images: D(e_i) = D[:, :, i]
    lhs = 2 * np.einsum("ijk,mrk->mijr", T, mats)
    r1 = np.einsum("mri,rjk->mijk", mats, T)
    r2 = np.einsum("mrj,irk->mijk", mats, T)
    ok = ((lhs - r1 - r2) % p == 0).all(axis=(1, 2, 3))
    return int(ok.sum())


def test_sl2_gf3_solver_matches_brute_force():
    A = catalog.get("sl2", field="GF3")
    space = H.half_derivations(A)
    assert 3**space.dim == brute_force_count(A)
    assert space.dim == 5


def test_sl2_gf3_family_is_a_subspace():
    A = catalog.get("sl2", field="GF3")
    space = H.half_derivations(A)
    fam = H.family_space(A, H.sl2_gf3_family(A))
    assert fam.dim == 3
    assert space.space.contains_subspace(fam)
    extra = Matrix(GF3, [[0, 0, 1], [0, 0, 0], [0, 2, 0]])
    assert space.contains(extra) and not fam.contains(extra.vectorize())


def test_sl2_q_only_scalars():
    A = catalog.get("sl2")
    space = H.half_derivations(A)
    assert space.dim == 1
    assert space.contains(Matrix.identity(A.field, 3))


def test_basis_elements_satisfy_law():
    for key in ("sl2", "solvable3_q", "nonlie_remark_q"):
        A = catalog.get(key)
        for D in H.half_derivations(A).basis:
            assert H.is_half_derivation(A, "bracket", D)


def test_odd_half_superderivations():
    A = catalog.get("grassmann_derivation_q")
    for d in (0, 1):
        space = H.half_derivations(A, "bracket", d)
        for D in space.basis:
            assert H.is_half_derivation(A, "bracket", D, d)
            # parity respected
            for c in range(A.dim):
                for r in range(A.dim):
                    if D.rows[r][c]:
                        assert A.parity[r] == (A.parity[c] + d) % 2


def test_circ_multiplications_are_half_derivations():
    for key in catalog.keys():
        A = catalog.get(key)
        assert H.scalar_half_derivations_check(A), key
    # Leibniz does not involve associativity: P^{1,1} still passes
    assert H.scalar_half_derivations_check(catalog.get("tp_sl2_gf3", alpha=1, beta=1))


def test_brute_force_family():
    L = catalog.get("sl2", field="GF3")
    found = H.brute_force_tp_family(L, [(0, 0, 1), (1, 1, 0)])
    assert len(found) == 5
    assert all(int(a) * int(b) == 0 for a, b in found)


def test_brute_force_limits():
    L = catalog.get("sl2", field="GF3")
    with pytest.raises(ValueError):
        H.brute_force_tp_family(L, [(0, 0, 0)] * 7)
    with pytest.raises(UnsupportedFieldError):
        H.brute_force_tp_family(catalog.get("sl2"), [(0, 0, 1)])
    with pytest.raises(ValueError):
        H.brute_force_tp_family(catalog.get("tp_sl2_gf3"), [(0, 0, 1)])


def test_bad_parity():
    with pytest.raises(ValueError):
        H.half_derivations(catalog.get("sl2"), parity=2)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2), st.sampled_from(["bracket", "circ"]))
def test_solver_matches_brute_force_random(seed, dim, which):
    A = random_algebra(random.Random(seed), dim, GF3, 0.5)
    assert 3 ** H.half_derivations(A, which).dim == brute_force_count(A, which)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_identity_always_present(seed, dim):
    A = random_algebra(random.Random(seed), dim, GF3, 0.4, graded=True)
    for which in (Product.CIRC, Product.BRACKET):
        assert H.half_derivations(A, which).contains(Matrix.identity(GF3, dim))
