"""Ideals, quasi-ideals, series, radical, simplicity and related invariants.

Every closure is computed by spinning under a finite set of operators: a
subspace closed under all of them is exactly an ideal of the requested kind.
For graded algebras the projections onto the even and odd parts are added,
which restricts the closures to graded subspaces.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field

from . import _kernels
from .algebra import (
    Product,
    SuperAlgebra,
    basis_operators,
    parity_projections,
)
from .exactmath import (
    Matrix,
    Subspace,
    UnsupportedFieldError,
    kernel,
    solve,
    spin,
)
from .meataxe import IRREDUCIBLE, REDUCIBLE, irreducibility_test

C, B = Product.CIRC, Product.BRACKET

SIMPLE = "SIMPLE"
NOT_SIMPLE = "NOT_SIMPLE"
INDETERMINATE = "INDETERMINATE"

DEFAULT_BOUND = 10**6
DEFAULT_BUDGET = 64


class IdealKind(enum.Enum):
    TP_IDEAL = "TP_IDEAL"
    CIRC_IDEAL = "CIRC_IDEAL"
    BRACKET_IDEAL = "BRACKET_IDEAL"
    QUASI_IDEAL = "QUASI_IDEAL"
    TRANSPOSED_QUASI_IDEAL = "TRANSPOSED_QUASI_IDEAL"

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        key = s.strip().upper()
        if key in ("TP", "CIRC", "BRACKET"):
            key += "_IDEAL"
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown ideal kind {s!r}") from None


class Strategy(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    MEATAXE = "meataxe"
    AUTO = "auto"

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        try:
            return cls(s.strip().lower())
        except ValueError:
            raise ValueError(f"unknown strategy {s!r}; use exhaustive, meataxe or auto") from None


def _products_for(which):
    """Products whose multiplications define an ideal of the given flavour."""
    which = str(getattr(which, "value", which)).upper()
    if which in ("TP", "TP_IDEAL"):
        return (C, B)
    if which in ("CIRC", "CIRC_IDEAL"):
        return (C,)
    if which in ("BRACKET", "BRACKET_IDEAL"):
        return (B,)
    raise ValueError(f"unknown product selection {which!r}")


def _mult_ops(A: SuperAlgebra, products) -> list:
    ops = []
    for prod in products:
        ops += basis_operators(A, prod, "left")
        ops += basis_operators(A, prod, "right")
    return ops


def closure_operators(A: SuperAlgebra, kind) -> list:
    """Operators whose common invariant subspaces are the ideals of ``kind``."""
    kind = IdealKind.parse(kind)
    if kind is IdealKind.QUASI_IDEAL:
        # P I and {P, I} P
        Lc = basis_operators(A, C, "left")
        Lb = basis_operators(A, B, "left")
        Rc = basis_operators(A, C, "right")
        ops = Lc + [rc @ lb for lb in Lb for rc in Rc]
    elif kind is IdealKind.TRANSPOSED_QUASI_IDEAL:
        # {P, I} and {P I, P}
        Lc = basis_operators(A, C, "left")
        Lb = basis_operators(A, B, "left")
        Rb = basis_operators(A, B, "right")
        ops = Lb + [rb @ lc for lc in Lc for rb in Rb]
    else:
        ops = _mult_ops(A, _products_for(kind))
    return ops + parity_projections(A)


def _as_subspace(A: SuperAlgebra, S) -> Subspace:
    if isinstance(S, Subspace):
        return S
    return Subspace.span(A.field, A.dim, [A.vector(v) for v in S])


def ideal_closure(A: SuperAlgebra, S, kind=IdealKind.TP_IDEAL) -> Subspace:
    """Least subspace containing ``S`` that is closed in the sense of ``kind``."""
    S = _as_subspace(A, S)
    return spin(A.field, A.dim, S.vectors(), closure_operators(A, kind))


def is_closed(A: SuperAlgebra, S, kind) -> bool:
    """Closure test without the properness requirement."""
    S = _as_subspace(A, S)
    for op in closure_operators(A, kind):
        for v in S.vectors():
            if not S.contains(op.apply(v)):
                return False
    return True


def is_ideal(A: SuperAlgebra, S, kind=IdealKind.TP_IDEAL) -> bool:
    """Proper subspace closed under the multiplications of ``kind``."""
    S = _as_subspace(A, S)
    return not S.is_full() and is_closed(A, S, kind)


def is_quasi_ideal(A: SuperAlgebra, S) -> bool:
    return is_ideal(A, S, IdealKind.QUASI_IDEAL)


def is_transposed_quasi_ideal(A: SuperAlgebra, S) -> bool:
    return is_ideal(A, S, IdealKind.TRANSPOSED_QUASI_IDEAL)


# -- products of subspaces -----------------------------------------------------


def product_space(A: SuperAlgebra, which, S, T) -> Subspace:
    """span{ s.t : s in S, t in T } for the chosen product."""
    S, T = _as_subspace(A, S), _as_subspace(A, T)
    vecs = [A.mul(which, s, t) for s in S.vectors() for t in T.vectors()]
    return Subspace.span(A.field, A.dim, vecs)


def full_space(A: SuperAlgebra) -> Subspace:
    return Subspace.full(A.field, A.dim)


def derived_series(A: SuperAlgebra, start=None) -> list:
    """I, {I,I}, ... until zero or stable (repeats are not listed)."""
    cur = full_space(A) if start is None else _as_subspace(A, start)
    out = [cur]
    while not cur.is_zero():
        nxt = product_space(A, B, cur, cur)
        if nxt == cur:
            break
        out.append(nxt)
        cur = nxt
    return out


def lower_central_series(A: SuperAlgebra) -> list:
    P = full_space(A)
    cur = P
    out = [cur]
    while not cur.is_zero():
        nxt = product_space(A, B, P, cur)
        if nxt == cur:
            break
        out.append(nxt)
        cur = nxt
    return out


def circ_powers(A: SuperAlgebra) -> list:
    """P^1 = P, P^k = P^{k-1} o P, until zero or stable."""
    P = full_space(A)
    cur = P
    out = [cur]
    while not cur.is_zero():
        nxt = product_space(A, C, cur, P)
        if nxt == cur:
            break
        out.append(nxt)
        cur = nxt
    return out


def circ_power(A: SuperAlgebra, k: int) -> Subspace:
    """P^k for any k >= 1 (the stable value past the end of the series)."""
    if k < 1:
        raise ValueError("powers start at 1")
    powers = circ_powers(A)
    return powers[min(k, len(powers)) - 1]


def _stacked_kernel(A: SuperAlgebra, mats) -> Subspace:
    rows = [row for m in mats for row in m.rows]
    if not rows:
        return full_space(A)
    return kernel(Matrix(A.field, rows, A.dim))


def center(A: SuperAlgebra, which) -> Subspace:
    """{x : x.e_i = 0 for all i}."""
    return _stacked_kernel(A, basis_operators(A, which, "right"))


def annihilator(A: SuperAlgebra) -> Subspace:
    """Elements killed on both sides by both products."""
    mats = []
    for prod in (C, B):
        if A.has_product(prod):
            mats += basis_operators(A, prod, "right") + basis_operators(A, prod, "left")
    return _stacked_kernel(A, mats)


def unit(A: SuperAlgebra):
    """The element e with e o x = x for every x, or None."""
    n = A.dim
    if n == 0:
        return None
    R = basis_operators(A, C, "right")
    rows = [row for m in R for row in m.rows]
    rhs = [x for i in range(n) for x in A.basis_vector(i)]
    return solve(Matrix(A.field, rows, n), rhs)


def killing_form(A: SuperAlgebra) -> Matrix:
    """Gram matrix tr(Q_{e_i} Q_{e_j})."""
    Q = basis_operators(A, B, "left")
    return Matrix(A.field, [[(qi @ qj).trace() for qj in Q] for qi in Q], A.dim)


def radical(A: SuperAlgebra):
    """Solvable radical of the bracket: the Killing-orthogonal complement of
    the derived algebra.  Characteristic 0 only; None for graded input."""
    if A.field.is_finite:
        raise UnsupportedFieldError("the Killing-form radical needs characteristic 0")
    if A.is_graded:
        return None
    K = killing_form(A)
    D = product_space(A, B, full_space(A), full_space(A))
    rows = [K @ d for d in D.vectors()]
    return _stacked_kernel(A, [Matrix(A.field, rows, A.dim)]) if rows else full_space(A)


@dataclass
class StructureSummary:
    center_circ: Subspace
    center_bracket: Subspace
    derived_series: list
    lower_central_series: list
    circ_powers: list
    radical: Subspace | None
    radical_derived_series: list | None
    unit: tuple | None
    perfect_circ: bool
    perfect_bracket: bool
    extra: dict = dc_field(default_factory=dict)

    @property
    def solvable_bracket(self) -> bool:
        return self.derived_series[-1].is_zero()

    @property
    def nilpotent_bracket(self) -> bool:
        return self.lower_central_series[-1].is_zero()

    @property
    def nilpotent_circ(self) -> bool:
        return self.circ_powers[-1].is_zero()

    def to_json(self, field) -> dict:
        def sub(s):
            return None if s is None else s.to_strings()

        return {
            "center_circ": sub(self.center_circ),
            "center_bracket": sub(self.center_bracket),
            "derived_series": [sub(s) for s in self.derived_series],
            "derived_series_dims": [s.dim for s in self.derived_series],
            "lower_central_series_dims": [s.dim for s in self.lower_central_series],
            "circ_powers": [sub(s) for s in self.circ_powers],
            "circ_powers_dims": [s.dim for s in self.circ_powers],
            "radical": sub(self.radical),
            "radical_derived_series_dims": (
                None if self.radical_derived_series is None else [s.dim for s in self.radical_derived_series]
            ),
            "unit": None if self.unit is None else [field.fmt(x) for x in self.unit],
            "perfect_circ": self.perfect_circ,
            "perfect_bracket": self.perfect_bracket,
            "solvable_bracket": self.solvable_bracket,
            "nilpotent_bracket": self.nilpotent_bracket,
            "nilpotent_circ": self.nilpotent_circ,
            **self.extra,
        }


def series(A: SuperAlgebra) -> StructureSummary:
    """All series and distinguished subspaces in one pass.  The radical is
    only computed over Q (it is None over GF(p) and for graded algebras)."""
    P = full_space(A)
    rad = None
    rad_series = None
    extra = {}
    if A.field.is_finite:
        extra["radical_note"] = "unsupported over GF(p)"
    else:
        rad = radical(A)
        if rad is None:
            extra["radical_note"] = "not computed for graded algebras"
        else:
            rad_series = derived_series(A, rad)
    return StructureSummary(
        center_circ=center(A, C),
        center_bracket=center(A, B),
        derived_series=derived_series(A),
        lower_central_series=lower_central_series(A),
        circ_powers=circ_powers(A),
        radical=rad,
        radical_derived_series=rad_series,
        unit=unit(A),
        perfect_circ=product_space(A, C, P, P) == P,
        perfect_bracket=product_space(A, B, P, P) == P,
        extra=extra,
    )


# -- simplicity ----------------------------------------------------------------


@dataclass
class SimplicityResult:
    verdict: str
    which: str
    strategy: str
    witness: Subspace | None = None
    vectors_checked: int = 0
    tries: int = 0
    reason: str = ""

    @property
    def simple(self) -> bool:
        return self.verdict == SIMPLE

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "which": self.which,
            "strategy": self.strategy,
            "witness": None if self.witness is None else self.witness.to_strings(),
            "vectors_checked": self.vectors_checked,
            "tries": self.tries,
            "reason": self.reason,
        }


def _which_label(which) -> str:
    w = str(getattr(which, "value", which)).upper()
    return {"TP_IDEAL": "TP", "CIRC_IDEAL": "CIRC", "BRACKET_IDEAL": "BRACKET"}.get(w, w)


def _zero_product_witness(A: SuperAlgebra):
    # with zero products every graded subspace is an ideal; pick span{e_0}
    if A.dim >= 2:
        return Subspace.span(A.field, A.dim, [A.basis_vector(0)])
    return Subspace.zero(A.field, A.dim)


def is_simple(A: SuperAlgebra, which="TP", strategy=Strategy.AUTO, bound=DEFAULT_BOUND,
              seed=0, budget=DEFAULT_BUDGET) -> SimplicityResult:
    """Simplicity of ``A`` with respect to the products in ``which``.

    Requires dim >= 1 and at least one nonzero selected product.  NOT_SIMPLE
    verdicts carry a proper ideal as witness.
    """
    label = _which_label(which)
    products = _products_for(label)
    strategy = Strategy.parse(strategy)
    if A.dim == 0:
        return SimplicityResult(NOT_SIMPLE, label, strategy.value, None, reason="zero-dimensional")
    if not any(A.has_product(p) for p in products):
        return SimplicityResult(NOT_SIMPLE, label, strategy.value, _zero_product_witness(A),
                                reason="selected products vanish")
    ops = _mult_ops(A, products) + parity_projections(A)
    enumerable = A.field.is_finite and A.field.p ** A.dim - 1 <= bound
    if strategy is Strategy.AUTO:
        strategy = Strategy.EXHAUSTIVE if enumerable else Strategy.MEATAXE
    if strategy is Strategy.EXHAUSTIVE:
        if not A.field.is_finite:
            raise UnsupportedFieldError("exhaustive simplicity needs a finite field")
        if not enumerable:
            raise ValueError(f"{A.field.p}^{A.dim} - 1 vectors exceed the bound {bound}")
        return _exhaustive(A, ops, label)
    res = irreducibility_test(A.field, A.dim, ops, seed=seed, budget=budget)
    if res.status == IRREDUCIBLE:
        return SimplicityResult(SIMPLE, label, "meataxe", tries=res.tries)
    if res.status == REDUCIBLE:
        return SimplicityResult(NOT_SIMPLE, label, "meataxe", res.submodule, tries=res.tries)
    return SimplicityResult(INDETERMINATE, label, "meataxe", tries=res.tries,
                            reason=f"no certificate after {budget} tries")


def _exhaustive(A: SuperAlgebra, ops, label) -> SimplicityResult:
    p, n = A.field.p, A.dim
    arr = [m.to_ints() for m in ops]
    checked, best_dim, best_code = _kernels.exhaustive_min_closure(arr, p, n, p**n)
    if best_dim == n:
        return SimplicityResult(SIMPLE, label, "exhaustive", vectors_checked=checked)
    v = _kernels.decode_vector(best_code, p, n)
    witness = spin(A.field, n, [A.vector(v)], ops)
    return SimplicityResult(NOT_SIMPLE, label, "exhaustive", witness, vectors_checked=checked)


def minimal_closures(A: SuperAlgebra, kind, homogeneous=True) -> list:
    """Distinct proper closures of single vectors (finite fields only).

    Used to search for small (transposed) quasi-ideals.
    """
    if not A.field.is_finite:
        raise UnsupportedFieldError("vector enumeration needs a finite field")
    ops = closure_operators(A, kind)
    found = set()
    for coords in itertools.product(A.field.elements(), repeat=A.dim):
        if not any(coords):
            continue
        if homogeneous and A.is_graded and A.parity_of(coords) is None:
            continue
        s = spin(A.field, A.dim, [coords], ops)
        if not s.is_full():
            found.add(s)
    return sorted(found, key=lambda s: (s.dim, s.to_strings()))


# -- derivations -------------------------------------------------------------------


def distinguished_derivation(A: SuperAlgebra, x, y) -> Matrix:
    """Matrix of a -> {a o x, y} - a o {x, y}."""
    x, y = A.vector(x), A.vector(y)
    xy = A.br(x, y)
    cols = []
    for j in range(A.dim):
        a = A.basis_vector(j)
        u = A.br(A.circ_mul(a, x), y)
        w = A.circ_mul(a, xy)
        cols.append(tuple(s - t for s, t in zip(u, w)))
    return Matrix.from_columns(A.field, cols, A.dim)


distinguished_derivations = distinguished_derivation


def derivation_defect(A: SuperAlgebra, which, D: Matrix, parity=0, side="left"):
    """First basis pair (i, j) violating the (super)derivation law, or None.

    side="left":  D(e_i e_j) = D(e_i) e_j + (-1)^{d|e_i|} e_i D(e_j)
    side="right": D(e_i e_j) = (-1)^{d|e_j|} D(e_i) e_j + e_i D(e_j)
    with d = ``parity``.  The two agree on ungraded algebras.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    for i in range(A.dim):
        for j in range(A.dim):
            odd = parity * (A.parity[i] if side == "left" else A.parity[j]) % 2
            s1, s2 = (1, -1 if odd else 1) if side == "left" else (-1 if odd else 1, 1)
            ei, ej = A.basis_vector(i), A.basis_vector(j)
            lhs = D.apply(A.mul(which, ei, ej))
            r1 = A.mul(which, D.apply(ei), ej)
            r2 = A.mul(which, ei, D.apply(ej))
            if any(a - s1 * b - s2 * c for a, b, c in zip(lhs, r1, r2)):
                return (i, j)
    return None


def is_derivation(A: SuperAlgebra, which, D: Matrix, parity=0, side="left") -> bool:
    return derivation_defect(A, which, D, parity, side) is None
