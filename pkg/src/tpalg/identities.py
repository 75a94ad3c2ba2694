"""Multilinear identities of transposed Poisson (super)algebras and Jordan
superalgebras, checked exhaustively on homogeneous basis tuples.

Every identity is multilinear, so vanishing on all basis tuples proves it for
all elements.  Element-valued identities return a coordinate tuple as their
defect; operator-valued ones (the Jordan identity in operator form and the
``REL_*`` relations between left multiplications) return a :class:`Matrix`.

Signs: ``(-1)^{xy}`` means ``(-1)^{|x||y|}``; graded commutators of operators
are ``[A, B] = AB - (-1)^{|A||B|} BA``.
"""

from __future__ import annotations

import enum
import itertools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .algebra import Product, SuperAlgebra, basis_operators
from .exactmath import Matrix


class Identity(enum.Enum):
    ASSOC_CIRC = "ASSOC_CIRC"
    JACOBI_SUPER = "JACOBI_SUPER"
    TP_LEIBNIZ_SUPER = "TP_LEIBNIZ_SUPER"
    PROPEQ1 = "PROPEQ1"
    PROPEQ2 = "PROPEQ2"
    PROPEQ3 = "PROPEQ3"
    PROPEQ4 = "PROPEQ4"
    PROPEQ5 = "PROPEQ5"
    PROPEQ6 = "PROPEQ6"
    JORDAN_SUPER = "JORDAN_SUPER"
    REL_PQ1 = "REL_PQ1"
    REL_PQ2 = "REL_PQ2"
    REL_PQ3 = "REL_PQ3"
    REL_PQ4 = "REL_PQ4"
    REL2_1 = "REL2_1"
    REL2_2 = "REL2_2"
    REL2_3 = "REL2_3"
    REL2_4 = "REL2_4"
    REL2_5 = "REL2_5"
    REL2_6 = "REL2_6"

    @classmethod
    def parse(cls, s) -> "Identity":
        if isinstance(s, cls):
            return s
        key = s.strip().upper()
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown identity {s!r}") from None


_ALIASES = {
    "ASSOC": "ASSOC_CIRC",
    "JACOBI": "JACOBI_SUPER",
    "LEIBNIZ": "TP_LEIBNIZ_SUPER",
    "TP_LEIBNIZ": "TP_LEIBNIZ_SUPER",
    "JORDAN": "JORDAN_SUPER",
}

TP_AXIOMS = (Identity.ASSOC_CIRC, Identity.JACOBI_SUPER, Identity.TP_LEIBNIZ_SUPER)
DERIVED_IDENTITIES = tuple(Identity(f"PROPEQ{i}") for i in range(1, 7))
OPERATOR_RELATIONS = (
    Identity.REL_PQ1,
    Identity.REL_PQ2,
    Identity.REL_PQ3,
    Identity.REL_PQ4,
    Identity.REL2_1,
    Identity.REL2_2,
    Identity.REL2_3,
    Identity.REL2_4,
    Identity.REL2_5,
    Identity.REL2_6,
)


def _sg(*pairs):
    """(-1) raised to sum of products of the given parity pairs."""
    e = 0
    for a, b in pairs:
        e += a * b
    return -1 if e % 2 else 1


def _lin(field, n, terms):
    out = [field.zero] * n
    for c, v in terms:
        if c == 0:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] = out[k] + c * x
    return tuple(out)


class _Ctx:
    """Per-algebra cache of products and multiplication operators."""

    def __init__(self, A: SuperAlgebra):
        self.A = A
        self.f = A.field
        self.n = A.dim
        self._P = None
        self._Q = None
        self._cache = {}

    def m(self, x, y):
        return self.A.mul(Product.CIRC, x, y)

    def b(self, x, y):
        return self.A.mul(Product.BRACKET, x, y)

    def lin(self, *terms):
        return _lin(self.f, self.n, terms)

    def _ops(self, which):
        return basis_operators(self.A, which)

    def P(self, v):
        key = (Product.CIRC, v)
        if key not in self._cache:
            if self._P is None:
                self._P = self._ops(Product.CIRC)
            self._cache[key] = self._combine(self._P, v)
        return self._cache[key]

    def Q(self, v):
        key = (Product.BRACKET, v)
        if key not in self._cache:
            if self._Q is None:
                self._Q = self._ops(Product.BRACKET)
            self._cache[key] = self._combine(self._Q, v)
        return self._cache[key]

    def _combine(self, ops, v):
        out = Matrix.zeros(self.f, self.n)
        for c, op in zip(v, ops):
            if c:
                out = out + op.scale(c)
        return out

    def comm(self, X, px, Y, py):
        out = X @ Y
        YX = Y @ X
        return out + YX if px * py % 2 else out - YX

    def msum(self, *terms):
        out = Matrix.zeros(self.f, self.n)
        for c, M in terms:
            if c == 1:
                out = out + M
            elif c == -1:
                out = out - M
            elif c:
                out = out + M.scale(c)
        return out


# Each defect function takes the context and a list of (vector, parity) pairs
# and returns left side minus right side.


def _assoc(c, x, y, z):
    (x, _), (y, _), (z, _) = x, y, z
    return c.lin((1, c.m(c.m(x, y), z)), (-1, c.m(x, c.m(y, z))))


def _jacobi(c, x, y, z):
    (x, px), (y, py), (z, pz) = x, y, z
    return c.lin(
        (_sg((px, pz)), c.b(c.b(x, y), z)),
        (_sg((py, px)), c.b(c.b(y, z), x)),
        (_sg((pz, py)), c.b(c.b(z, x), y)),
    )


def _leibniz(c, x, y, z):
    (x, px), (y, py), (z, pz) = x, y, z
    return c.lin(
        (2, c.m(x, c.b(y, z))),
        (-1, c.b(c.m(x, y), z)),
        (-_sg((px, py)), c.b(y, c.m(x, z))),
    )


def _propeq1(c, x, y, z):
    (x, px), (y, py), (z, pz) = x, y, z
    return c.lin(
        (_sg((px, pz)), c.m(x, c.b(y, z))),
        (_sg((py, px)), c.m(y, c.b(z, x))),
        (_sg((pz, py)), c.m(z, c.b(x, y))),
    )


def _propeq2(c, h, x, y, z):
    (h, _), (x, px), (y, py), (z, pz) = h, x, y, z
    return c.lin(
        (_sg((px, pz)), c.b(c.m(h, c.b(x, y)), z)),
        (_sg((py, px)), c.b(c.m(h, c.b(y, z)), x)),
        (_sg((pz, py)), c.b(c.m(h, c.b(z, x)), y)),
    )


def _propeq3(c, h, x, y, z):
    (h, _), (x, px), (y, py), (z, pz) = h, x, y, z
    return c.lin(
        (_sg((px, pz)), c.b(c.m(h, x), c.b(y, z))),
        (_sg((py, px)), c.b(c.m(h, y), c.b(z, x))),
        (_sg((pz, py)), c.b(c.m(h, z), c.b(x, y))),
    )


def _propeq4(c, h, x, y, z):
    (h, _), (x, px), (y, py), (z, pz) = h, x, y, z
    return c.lin(
        (_sg((px, pz)), c.m(c.b(h, x), c.b(y, z))),
        (_sg((py, px)), c.m(c.b(h, y), c.b(z, x))),
        (_sg((pz, py)), c.m(c.b(h, z), c.b(x, y))),
    )


def _propeq5(c, x, u, v, y):
    # {xu, vy} + (-1)^{uv} {xv, uy} = 2 (-1)^{ux+vx} uv{x, y}
    (x, px), (u, pu), (v, pv), (y, _) = x, u, v, y
    return c.lin(
        (1, c.b(c.m(x, u), c.m(v, y))),
        (_sg((pu, pv)), c.b(c.m(x, v), c.m(u, y))),
        (-2 * _sg((pu, px), (pv, px)), c.m(c.m(u, v), c.b(x, y))),
    )


def _propeq6(c, x, u, y, v):
    # (-1)^{vx+yu} x{u, yv} + (-1)^{vu+vy} v{xy, u} + (-1)^{xu+xy} yu{v, x}
    (x, px), (u, pu), (y, py), (v, pv) = x, u, y, v
    return c.lin(
        (_sg((pv, px), (py, pu)), c.m(x, c.b(u, c.m(y, v)))),
        (_sg((pv, pu), (pv, py)), c.m(v, c.b(c.m(x, y), u))),
        (_sg((px, pu), (px, py)), c.m(c.m(y, u), c.b(v, x))),
    )


def _jordan(c, x, y, z):
    # one-product superalgebra: the product is the circ table
    (x, px), (y, py), (z, pz) = x, y, z
    L = c.P
    xy, yz, zx = c.m(x, y), c.m(y, z), c.m(z, x)
    return c.msum(
        (_sg((px, pz)), c.comm(L(xy), px + py, L(z), pz)),
        (_sg((py, px)), c.comm(L(yz), py + pz, L(x), px)),
        (_sg((pz, py)), c.comm(L(zx), pz + px, L(y), py)),
    )


def _rel_pq1(c, x, y):
    (x, px), (y, py) = x, y
    return c.comm(c.P(x), px, c.P(y), py)


def _rel_pq2(c, x, y):
    (x, px), (y, py) = x, y
    return c.msum((1, c.comm(c.Q(x), px, c.Q(y), py)), (-1, c.Q(c.b(x, y))))


def _rel_pq3(c, x, y):
    # Q_{xy} + (-1)^{xy} Q_y P_x = 2 P_x Q_y
    (x, px), (y, py) = x, y
    return c.msum(
        (1, c.Q(c.m(x, y))),
        (_sg((px, py)), c.Q(y) @ c.P(x)),
        (-2, c.P(x) @ c.Q(y)),
    )


def _rel_pq4(c, x, y, z):
    (x, px), (y, py), (z, pz) = x, y, z
    return c.msum(
        (_sg((px, pz)), c.Q(c.m(c.b(x, y), z))),
        (_sg((py, px)), c.Q(c.m(c.b(y, z), x))),
        (_sg((pz, py)), c.Q(c.m(c.b(z, x), y))),
    )


def _rel2_1(c, x, y):
    # P_x Q_y - (-1)^{xy} P_y Q_x = -P_{{x,y}}
    (x, px), (y, py) = x, y
    return c.msum(
        (1, c.P(x) @ c.Q(y)),
        (-_sg((px, py)), c.P(y) @ c.Q(x)),
        (1, c.P(c.b(x, y))),
    )


def _rel2_2(c, x, y, z):
    (x, px), (y, py), (z, pz) = x, y, z
    return c.msum(
        (_sg((pz, py)), c.Q(z) @ c.P(c.b(x, y))),
        (_sg((px, pz)), c.Q(x) @ c.P(c.b(y, z))),
        (_sg((py, px)), c.Q(y) @ c.P(c.b(z, x))),
    )


def _rel2_3(c, x, y, z):
    (x, px), (y, py), (z, pz) = x, y, z
    return c.msum(
        (_sg((px, pz)), c.Q(c.b(x, y)) @ c.P(z)),
        (_sg((py, px)), c.Q(c.b(y, z)) @ c.P(x)),
        (_sg((pz, py)), c.Q(c.b(z, x)) @ c.P(y)),
    )


def _rel2_4(c, x, y, z):
    (x, px), (y, py), (z, pz) = x, y, z
    return c.msum(
        (_sg((px, pz)), c.P(c.b(x, y)) @ c.Q(z)),
        (_sg((py, px)), c.P(c.b(y, z)) @ c.Q(x)),
        (_sg((pz, py)), c.P(c.b(z, x)) @ c.Q(y)),
    )


def _rel2_5(c, x, y, z):
    # two relations; the defect is the first one that does not vanish
    (x, px), (y, py), (z, pz) = x, y, z
    first = c.msum(
        (1, c.Q(c.m(x, y)) @ c.P(z)),
        (-_sg((pz, px), (pz, py)), c.Q(c.m(z, x)) @ c.P(y)),
        (-2, c.P(c.m(x, c.b(y, z)))),
    )
    if not first.is_zero():
        return first
    return c.msum(
        (_sg((py, px)), c.Q(c.m(y, z)) @ c.P(x)),
        (_sg((pz, py)), c.Q(c.m(z, x)) @ c.P(y)),
        (-2 * _sg((px, pz)), c.P(c.m(x, y)) @ c.Q(z)),
    )


def _rel2_6(c, x, y, z):
    # (-1)^{zy+zx} P_z Q_{xy} - (-1)^{yx} P_y Q_{xz} = P_{x{y,z}}
    (x, px), (y, py), (z, pz) = x, y, z
    return c.msum(
        (_sg((pz, py), (pz, px)), c.P(z) @ c.Q(c.m(x, y))),
        (-_sg((py, px)), c.P(y) @ c.Q(c.m(x, z))),
        (-1, c.P(c.m(x, c.b(y, z)))),
    )


_TABLE = {
    Identity.ASSOC_CIRC: (3, _assoc),
    Identity.JACOBI_SUPER: (3, _jacobi),
    Identity.TP_LEIBNIZ_SUPER: (3, _leibniz),
    Identity.PROPEQ1: (3, _propeq1),
    Identity.PROPEQ2: (4, _propeq2),
    Identity.PROPEQ3: (4, _propeq3),
    Identity.PROPEQ4: (4, _propeq4),
    Identity.PROPEQ5: (4, _propeq5),
    Identity.PROPEQ6: (4, _propeq6),
    Identity.JORDAN_SUPER: (3, _jordan),
    Identity.REL_PQ1: (2, _rel_pq1),
    Identity.REL_PQ2: (2, _rel_pq2),
    Identity.REL_PQ3: (2, _rel_pq3),
    Identity.REL_PQ4: (3, _rel_pq4),
    Identity.REL2_1: (2, _rel2_1),
    Identity.REL2_2: (3, _rel2_2),
    Identity.REL2_3: (3, _rel2_3),
    Identity.REL2_4: (3, _rel2_4),
    Identity.REL2_5: (3, _rel2_5),
    Identity.REL2_6: (3, _rel2_6),
}


def arity(identity) -> int:
    return _TABLE[Identity.parse(identity)][0]


def _is_zero(d):
    return d.is_zero() if isinstance(d, Matrix) else not any(d)


@dataclass
class IdentityReport:
    identity: Identity
    verdict: str  # "PASS" | "FAIL"
    counterexample: tuple | None = None
    defect: object = None  # coordinate tuple or Matrix
    tuples_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_json(self, field) -> dict:
        doc = {
            "identity": self.identity.value,
            "verdict": self.verdict,
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "tuples_checked": self.tuples_checked,
        }
        if self.defect is None:
            doc["defect"] = None
        elif isinstance(self.defect, Matrix):
            doc["defect"] = {"matrix": self.defect.to_strings()}
        else:
            doc["defect"] = {"coords": [field.fmt(x) for x in self.defect]}
        return doc


def defect_at(A: SuperAlgebra, identity, elements, parities=None, _ctx=None):
    """Defect at arbitrary homogeneous elements (parities inferred if omitted)."""
    identity = Identity.parse(identity)
    k, fn = _TABLE[identity]
    if len(elements) != k:
        raise ValueError(f"{identity.value} takes {k} arguments, got {len(elements)}")
    elements = [A.vector(e) for e in elements]
    if parities is None:
        parities = [A.parity_of(e) for e in elements]
        if any(p is None for p in parities):
            raise ValueError("identity arguments must be homogeneous")
    ctx = _ctx or _Ctx(A)
    return fn(ctx, *zip(elements, parities))


def defect(A: SuperAlgebra, identity, tup):
    """Exact defect at the basis tuple ``tup`` (0-based indices)."""
    identity = Identity.parse(identity)
    k, _ = _TABLE[identity]
    if len(tup) != k:
        raise ValueError(f"{identity.value} takes {k} basis indices, got {len(tup)}")
    return defect_at(A, identity, [A.basis_vector(i) for i in tup], [A.parity[i] for i in tup])


def _integer_table(A: SuperAlgebra):
    """Circ structure constants as an integer array (scaled by a common
    denominator over Q, residues over GF(p))."""
    n = A.dim
    if A.field.is_finite:
        vals = {(i, j, k): int(c) for i, j, k, c in A.circ}
    else:
        den = math.lcm(*(c.denominator for *_, c in A.circ)) if A.circ else 1
        vals = {(i, j, k): int(c * den) for i, j, k, c in A.circ}
    big = max((abs(v) for v in vals.values()), default=0)
    # every defect entry is a sum of at most 6 n^2 products of three constants
    exact = 6 * n * n * big**3 < 2**62
    T = np.zeros((n, n, n), dtype=np.int64 if exact else object)
    for key, v in vals.items():
        T[key] = v
    return T


def _jordan_first_failure(A: SuperAlgebra):
    """Lexicographically first basis triple with nonzero Jordan defect, or
    None.  Vectorised over all triples; the defect is recomputed exactly by
    the caller."""
    n = A.dim
    if n == 0:
        return None
    T = _integer_table(A)
    L = T.transpose(0, 2, 1)  # L[c][k, j] = coefficient of e_k in e_c e_j
    M = np.einsum("abk,kij->abij", T, L)  # left multiplication by e_a e_b
    if A.field.is_finite:
        M %= A.field.p
    MxL = np.einsum("abij,cjl->abcil", M, L)
    LxM = np.einsum("cij,abjl->abcil", L, M)
    par = np.array(A.parity)
    x, y, z = np.ix_(par, par, par)
    sigma = np.where(((x + y) * z) % 2, -1, 1)[..., None, None]
    K = MxL - sigma * LxM
    s1 = np.where((x * z) % 2, -1, 1)[..., None, None]
    s2 = np.where((y * x) % 2, -1, 1)[..., None, None]
    s3 = np.where((z * y) % 2, -1, 1)[..., None, None]
    D = s1 * K + s2 * K.transpose(2, 0, 1, 3, 4) + s3 * K.transpose(1, 2, 0, 3, 4)
    if A.field.is_finite:
        D %= A.field.p
    bad = np.argwhere((D != 0).any(axis=(3, 4)))
    if len(bad) == 0:
        return None
    return tuple(int(t) for t in bad[0])  # argwhere is in C (lexicographic) order


def check(A: SuperAlgebra, identity) -> IdentityReport:
    """Evaluate the identity on every basis tuple in lexicographic order."""
    identity = Identity.parse(identity)
    k, fn = _TABLE[identity]
    if identity is Identity.JORDAN_SUPER:
        if A.bracket:
            warnings.warn("JORDAN_SUPER reads the circ table only; the bracket table is ignored", stacklevel=2)
        tup = _jordan_first_failure(A)
        if tup is None:
            return IdentityReport(identity, "PASS", None, None, A.dim**3)
        count = (tup[0] * A.dim + tup[1]) * A.dim + tup[2] + 1
        return IdentityReport(identity, "FAIL", tup, defect(A, identity, tup), count)
    ctx = _Ctx(A)
    basis = [(A.basis_vector(i), A.parity[i]) for i in range(A.dim)]
    count = 0
    for tup in itertools.product(range(A.dim), repeat=k):
        count += 1
        d = fn(ctx, *(basis[i] for i in tup))
        if not _is_zero(d):
            return IdentityReport(identity, "FAIL", tup, d, count)
    return IdentityReport(identity, "PASS", None, None, count)


def check_many(A: SuperAlgebra, identities) -> list:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return [check(A, i) for i in identities]


def check_tp_axioms(A: SuperAlgebra) -> list:
    return [check(A, i) for i in TP_AXIOMS]


def is_tp(A: SuperAlgebra) -> bool:
    return all(r.passed for r in check_tp_axioms(A))


def check_derived_identities(A: SuperAlgebra) -> list:
    return [check(A, i) for i in DERIVED_IDENTITIES]


def check_operator_relations(A: SuperAlgebra) -> list:
    return [check(A, i) for i in OPERATOR_RELATIONS]


def jordan_element_defect(A: SuperAlgebra, x, y, z, w):
    """Jordan superidentity applied to ``e_w``, computed from products only.

    Independent of the operator path in :func:`check`; used to cross-check it.
    """
    f, n = A.field, A.dim
    m = A.circ_mul
    e = A.basis_vector
    px, py, pz, pw = (A.parity[i] for i in (x, y, z, w))
    X, Y, Z, W = e(x), e(y), e(z), e(w)

    def bracket_applied(a, pa, b, pb):
        # [L_a, L_b](W) = a(bW) - (-1)^{ab} b(aW)
        return _lin(f, n, [(1, m(a, m(b, W))), (-_sg((pa, pb)), m(b, m(a, W)))])

    return _lin(
        f,
        n,
        [
            (_sg((px, pz)), bracket_applied(m(X, Y), px + py, Z, pz)),
            (_sg((py, px)), bracket_applied(m(Y, Z), py + pz, X, px)),
            (_sg((pz, py)), bracket_applied(m(Z, X), pz + px, Y, py)),
        ],
    )
