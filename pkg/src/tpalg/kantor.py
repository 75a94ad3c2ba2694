"""Kantor double and Lie double of a dot-bracket (super)algebra.

Basis of a double: the source basis e_0..e_{n-1} first, then the starred
copies e_0^s..e_{n-1}^s at indices n..2n-1.  A starred copy has the opposite
parity of its source.
"""

from __future__ import annotations

from .algebra import AlgebraError, Product, SuperAlgebra, left_mult_operator
from .exactmath import Matrix, Subspace
from .identities import Identity, check
from .structure import IdealKind, is_ideal, product_space, full_space


class DoubleError(AlgebraError):
    pass


def layout(P: SuperAlgebra) -> dict:
    n = P.dim
    return {
        "source_dim": n,
        "even_copy": list(range(n)),
        "star_copy": list(range(n, 2 * n)),
        "parity": list(P.parity) + [(x + 1) % 2 for x in P.parity],
    }


def star(i: int, n: int) -> int:
    return n + i


def kantor_double(P: SuperAlgebra, name=None) -> SuperAlgebra:
    """The double J(P) with its single product * stored as the circ table."""
    n = P.dim
    par = P.parity
    star_table = []
    for i, j, k, c in P.circ:
        star_table.append((i, j, k, c))
        star_table.append((n + i, j, n + k, c))
        star_table.append((i, n + j, n + k, -c if par[i] else c))
    for i, j, k, c in P.bracket:
        star_table.append((n + i, n + j, k, -c if par[i] else c))
    lay = layout(P)
    return SuperAlgebra(
        name or f"kantor({P.name})",
        P.field,
        2 * n,
        lay["parity"],
        star_table,
        (),
        meta={"layout": {"kind": "kantor", **lay}},
    )


def lie_double(P: SuperAlgebra, name=None) -> SuperAlgebra:
    """Bracket [a,b] = {a,b}, [a^s,b] = [a,b^s] = {a,b}^s, [a^s,b^s] = a o b.

    Only defined for ungraded input.
    """
    if P.is_graded:
        raise DoubleError("the Lie double is only defined for ungraded algebras")
    n = P.dim
    table = []
    for i, j, k, c in P.bracket:
        table.append((i, j, k, c))
        table.append((n + i, j, n + k, c))
        table.append((i, n + j, n + k, c))
    for i, j, k, c in P.circ:
        table.append((n + i, n + j, k, c))
    lay = layout(P)
    return SuperAlgebra(
        name or f"lie_double({P.name})",
        P.field,
        2 * n,
        lay["parity"],
        (),
        table,
        meta={"layout": {"kind": "lie", **lay}},
    )


def starred(P: SuperAlgebra, v) -> tuple:
    """Coordinates of v^s in the double."""
    v = P.vector(v)
    return (P.field.zero,) * P.dim + v


def unstarred(P: SuperAlgebra, v) -> tuple:
    """Coordinates of v (even copy) in the double."""
    v = P.vector(v)
    return v + (P.field.zero,) * P.dim


def expected_blocks(P: SuperAlgebra, i: int):
    """Block matrices (L_a, L_{a^s}) for a = e_i predicted from P_a and Q_a."""
    f = P.field
    n = P.dim
    a = P.basis_vector(i)
    Pa = left_mult_operator(P, Product.CIRC, a)
    Qa = left_mult_operator(P, Product.BRACKET, a)
    Z = Matrix.zeros(f, n, n)
    sgn = -1 if P.parity[i] else 1
    La = Matrix.block([[Pa, Z], [Z, Pa.scale(f(sgn))]])
    Las = Matrix.block([[Z, Qa.scale(f(sgn))], [Pa, Z]])
    return La, Las


def double_simplicity_obstruction(P: SuperAlgebra, J: SuperAlgebra | None = None):
    """P + (P o P)^s when P o P != P (None otherwise), checked to be an ideal
    of the Kantor double."""
    full = full_space(P)
    PP = product_space(P, Product.CIRC, full, full)
    if PP == full:
        return None
    J = kantor_double(P) if J is None else J
    vecs = [unstarred(P, P.basis_vector(i)) for i in range(P.dim)]
    vecs += [starred(P, v) for v in PP.vectors()]
    ideal = Subspace.span(P.field, J.dim, vecs)
    if not is_ideal(J, ideal, IdealKind.CIRC_IDEAL):
        raise DoubleError("P + (PP)^s failed the ideal check; is P transposed Poisson?")
    return ideal


def is_jordan(J: SuperAlgebra):
    """JORDAN_SUPER report for a one-product superalgebra."""
    return check(J, Identity.JORDAN_SUPER)
