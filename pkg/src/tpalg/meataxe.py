"""Norton's irreducibility test (Holt-Rees variant) for a finite set of
matrices acting on F^n.

A subspace invariant under every generator is a submodule of F^n over the
unital matrix algebra they generate.  The test either returns a proper
nonzero submodule (a certificate of reducibility), certifies irreducibility,
or gives up after the retry budget.
"""

from __future__ import annotations

import random
from fractions import Fraction

import sympy
from sympy.polys.domains import GF as SymGF, QQ as SymQQ
from sympy.polys.matrices import DomainMatrix

from .exactmath import FieldSpec, Matrix, Residue, Subspace, kernel, spin

IRREDUCIBLE = "IRREDUCIBLE"
REDUCIBLE = "REDUCIBLE"
UNKNOWN = "UNKNOWN"

_X = sympy.Symbol("x")


def _domain(field: FieldSpec):
    return SymGF(field.p) if field.is_finite else SymQQ


def _to_domain(field, dom, x):
    if field.is_finite:
        return dom(int(x))
    return dom(x.numerator, x.denominator)


def _from_sympy(field, c):
    if field.is_finite:
        return Residue(int(c), field.p)
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def charpoly_factors(m: Matrix) -> list:
    """Irreducible factors of the characteristic polynomial as
    ``(coefficients high-to-low in the field, multiplicity)``."""
    field = m.field
    dom = _domain(field)
    dm = DomainMatrix([[_to_domain(field, dom, x) for x in row] for row in m.rows], m.shape, dom)
    coeffs = dm.charpoly()
    if field.is_finite:
        poly = sympy.Poly([int(c) for c in coeffs], _X, modulus=field.p)
    else:
        poly = sympy.Poly([dom.to_sympy(c) for c in coeffs], _X, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, mult in factors:
        out.append(([_from_sympy(field, c) for c in f.all_coeffs()], mult))
    out.sort(key=lambda t: len(t[0]))
    return out


def poly_at(coeffs, m: Matrix) -> Matrix:
    """Horner evaluation of a polynomial (high-to-low coefficients) at ``m``."""
    n = m.nrows
    field = m.field
    ident = Matrix.identity(field, n)
    out = Matrix.zeros(field, n, n)
    for c in coeffs:
        out = out @ m + ident.scale(c)
    return out


def _common_kernel(field, n, ops):
    if not ops:
        return Subspace.full(field, n)
    rows = [row for g in ops for row in g.rows]
    return kernel(Matrix(field, rows, n))


def _annihilator(field, n, sub: Subspace) -> Subspace:
    """Vectors orthogonal (standard pairing) to every vector of ``sub``."""
    if sub.is_zero():
        return Subspace.full(field, n)
    return kernel(Matrix(field, sub.vectors(), n))


def _proper(sub: Subspace) -> bool:
    return not sub.is_zero() and not sub.is_full()


class MeatAxeResult:
    __slots__ = ("status", "submodule", "tries")

    def __init__(self, status, submodule=None, tries=0):
        self.status = status
        self.submodule = submodule
        self.tries = tries

    def __repr__(self):
        return f"MeatAxeResult({self.status}, tries={self.tries})"


def _random_scalar(field, rng):
    if field.is_finite:
        return Residue(rng.randrange(field.p), field.p)
    return Fraction(rng.randint(-2, 2))


def irreducibility_test(field: FieldSpec, n: int, ops, seed=0, budget=64) -> MeatAxeResult:
    """Decide whether F^n is irreducible under ``ops`` (list of n x n matrices)."""
    ops = [g for g in ops if not g.is_zero()]
    if n <= 1:
        return MeatAxeResult(IRREDUCIBLE)
    if not ops:
        return MeatAxeResult(REDUCIBLE, Subspace.span(field, n, [Matrix.identity(field, n).rows[0]]))
    opsT = [g.T for g in ops]

    # cheap certificates first: common kernels, then the standard basis vectors
    ker = _common_kernel(field, n, ops)
    if not ker.is_zero():
        return MeatAxeResult(REDUCIBLE, Subspace.span(field, n, ker.vectors()[:1]))
    kerT = _common_kernel(field, n, opsT)
    if not kerT.is_zero():
        return MeatAxeResult(REDUCIBLE, _annihilator(field, n, Subspace.span(field, n, kerT.vectors()[:1])))
    for row in Matrix.identity(field, n).rows:
        s = spin(field, n, [row], ops)
        if _proper(s):
            return MeatAxeResult(REDUCIBLE, s)

    rng = random.Random(seed)
    pool = list(ops)
    cap = 2 * len(ops) + 8
    for attempt in range(1, budget + 1):
        a, b = rng.choice(pool), rng.choice(pool)
        word = a @ b
        if len(pool) < cap:
            pool.append(word)
        else:
            pool[len(ops) + rng.randrange(cap - len(ops))] = word
        theta = Matrix.zeros(field, n, n)
        for g in pool:
            theta = theta + g.scale(_random_scalar(field, rng))
        for coeffs, _mult in charpoly_factors(theta):
            deg = len(coeffs) - 1
            ft = poly_at(coeffs, theta)
            null = kernel(ft)
            # any kernel vector with a proper closure is a certificate
            for v in null.vectors()[:1] if null.dim == deg else null.vectors():
                s = spin(field, n, [v], ops)
                if _proper(s):
                    return MeatAxeResult(REDUCIBLE, s, attempt)
            nullT = kernel(ft.T)
            for w in nullT.vectors()[:1] if nullT.dim == deg else nullT.vectors():
                s = spin(field, n, [w], opsT)
                if _proper(s):
                    return MeatAxeResult(REDUCIBLE, _annihilator(field, n, s), attempt)
            if null.dim == deg:
                # Norton: a good factor whose kernel and dual kernel both
                # generate everything proves irreducibility
                return MeatAxeResult(IRREDUCIBLE, None, attempt)
    return MeatAxeResult(UNKNOWN, None, budget)
