"""Half-derivations (and half-superderivations) as the kernel of a linear
system, plus brute-force search for compatible commutative products.

A linear map D of parity d is a half-superderivation of a product . when

    2 D(x . y) = D(x) . y + (-1)^{d|x|} x . D(y)

for homogeneous x, y.  Unknowns are the entries of D flattened row-major.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Product, SuperAlgebra, left_mult_operator
from .exactmath import Matrix, Subspace, UnsupportedFieldError, kernel
from .identities import check_tp_axioms

DEFAULT_SLOT_LIMIT = 6


def _system(A: SuperAlgebra, which, parity: int) -> Matrix:
    """Rows of the n^3 x n^2 system; equation (i, j, k) is component k at basis pair (i, j)."""
    f = A.field
    n = A.dim
    par = A.parity
    zero = f.zero
    two = f(2)
    rows = []
    prods = [[A.mul(which, A.basis_vector(i), A.basis_vector(j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            sign = f(-1 if (parity * par[i]) % 2 else 1)
            block = [[zero] * (n * n) for _ in range(n)]
            # 2 D(e_i e_j)
            for c, v in enumerate(prods[i][j]):
                if v:
                    for k in range(n):
                        block[k][k * n + c] += two * v
            # - D(e_i) e_j
            for r in range(n):
                for k, v in enumerate(prods[r][j]):
                    if v:
                        block[k][r * n + i] -= v
            # - sign e_i D(e_j)
            for r in range(n):
                for k, v in enumerate(prods[i][r]):
                    if v:
                        block[k][r * n + j] -= sign * v
            rows.extend(block)
    # parity constraint: D maps parity c to parity c + d
    if A.is_graded:
        for r in range(n):
            for c in range(n):
                if par[r] != (par[c] + parity) % 2:
                    row = [zero] * (n * n)
                    row[r * n + c] = f.one
                    rows.append(row)
    return Matrix(f, rows, n * n)


def unvectorize(A: SuperAlgebra, v) -> Matrix:
    n = A.dim
    return Matrix(A.field, [v[r * n:(r + 1) * n] for r in range(n)], n)


@dataclass
class HalfDerivationSpace:
    algebra: SuperAlgebra
    which: Product
    parity: int
    space: Subspace  # vectorized operators, canonical RREF basis

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> list:
        return [unvectorize(self.algebra, v) for v in self.space.vectors()]

    def contains(self, D: Matrix) -> bool:
        return self.space.contains(D.vectorize())

    __contains__ = contains

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "product": self.which.value,
            "parity": self.parity,
            "dim": self.dim,
            "basis": [D.to_strings() for D in self.basis],
        }


def half_derivations(A: SuperAlgebra, which=Product.BRACKET, parity=0) -> HalfDerivationSpace:
    which = Product.parse(which)
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    n = A.dim
    if n == 0:
        return HalfDerivationSpace(A, which, parity, Subspace.zero(A.field, 0))
    return HalfDerivationSpace(A, which, parity, kernel(_system(A, which, parity)))


def is_half_derivation(A: SuperAlgebra, which, D: Matrix, parity=0) -> bool:
    """Direct check of the defining law on all basis pairs."""
    f = A.field
    for i in range(A.dim):
        for j in range(A.dim):
            x, y = A.basis_vector(i), A.basis_vector(j)
            sign = -1 if (parity * A.parity[i]) % 2 else 1
            lhs = D.apply(A.mul(which, x, y))
            r1 = A.mul(which, D.apply(x), y)
            r2 = A.mul(which, x, D.apply(y))
            if any(f(2) * a - b - sign * c for a, b, c in zip(lhs, r1, r2)):
                return False
    return True


def family_space(A: SuperAlgebra, generators) -> Subspace:
    """Span of explicitly given operators, vectorized like the solver output."""
    return Subspace.span(A.field, A.dim * A.dim, [D.vectorize() for D in generators])


def sl2_gf3_family(A: SuperAlgebra) -> list:
    """Generators of the family D(e1) = l e1 + m e2, D(e2) = n e1 + l e2,
    D(e3) = l e3 (coefficients l, m, n)."""
    f = A.field
    ident = Matrix.identity(f, 3)
    mu = Matrix(f, [[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    nu = Matrix(f, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    return [ident, mu, nu]


def scalar_half_derivations_check(A: SuperAlgebra) -> bool:
    """Every left multiplication of the circ product is a half-(super)derivation
    of the bracket."""
    spaces = {}
    for i in range(A.dim):
        d = A.parity[i]
        if d not in spaces:
            spaces[d] = half_derivations(A, Product.BRACKET, d)
        if not spaces[d].contains(left_mult_operator(A, Product.CIRC, A.basis_vector(i))):
            return False
    return True


def _template_table(A: SuperAlgebra, template, values):
    table = {}
    for (i, j, k), c in zip(template, values):
        if not c:
            continue
        sign = -1 if A.parity[i] and A.parity[j] else 1
        for key, val in (((i, j, k), c), ((j, i, k), sign * c)):
            if key in table and table[key] != val:
                raise ValueError(f"template slot {key} conflicts with another slot")
            table[key] = val
    return [(i, j, k, c) for (i, j, k), c in sorted(table.items())]


def brute_force_tp_family(L: SuperAlgebra, template, limit=DEFAULT_SLOT_LIMIT) -> list:
    """All assignments to the circ slots ``template`` (a list of (i, j, k),
    each an independent unknown coefficient of e_i o e_j in e_k; the mirrored
    entry is filled in by supercommutativity) for which L becomes a transposed
    Poisson (super)algebra.  Returns tuples of field elements in the order
    of enumeration."""
    if not L.field.is_finite:
        raise UnsupportedFieldError("brute force needs a finite field")
    template = [tuple(int(t) for t in s) for s in template]
    if len(template) > limit:
        raise ValueError(f"{len(template)} slots exceed the budget of {limit}")
    if L.circ:
        raise ValueError("the base algebra must have an empty circ table")
    found = []
    for values in itertools.product(L.field.elements(), repeat=len(template)):
        A = SuperAlgebra(L.name, L.field, L.dim, L.parity, _template_table(L, template, values), L.bracket)
        if all(r.passed for r in check_tp_axioms(A)):
            found.append(values)
    return found
