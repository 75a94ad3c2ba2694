"""Z-indexed algebras over Q: the Witt bracket {e_i, e_j} = (i - j) e_{i+j},
the Laurent product e_i o e_j = e_{i+j}, and its mutations x o q o y.

Elements are finitely supported dicts ``{k: Fraction}``.  Identity checks run
on basis triples taken from a window of indices; products may leave the
window, and equality is tested on the full (finite) support.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import QQ, Matrix, solve
from .identities import Identity, IdentityReport

INDEX_LIMIT = 2**62

WINDOW_IDENTITIES = (Identity.ASSOC_CIRC, Identity.JACOBI_SUPER, Identity.TP_LEIBNIZ_SUPER)


class ZElement(dict):
    """Finitely supported Z-indexed vector; zero coefficients are never stored."""

    def __init__(self, items=()):
        super().__init__()
        pairs = items.items() if isinstance(items, dict) else items
        for k, c in pairs:
            self._add(int(k), Fraction(c))

    def _add(self, k, c):
        if abs(k) >= INDEX_LIMIT:
            raise OverflowError(f"index {k} out of range")
        if not c:
            return
        v = self.get(k, 0) + c
        if v:
            self[k] = v
        else:
            self.pop(k, None)

    @classmethod
    def basis(cls, k):
        return cls({k: 1})

    def __add__(self, other):
        out = ZElement(self)
        for k, c in other.items():
            out._add(k, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return ZElement({k: v * c for k, v in self.items()}) if c else ZElement()

    def support(self):
        return sorted(self)

    def to_strings(self) -> dict:
        return {str(k): QQ.fmt(self[k]) for k in sorted(self)}

    def __repr__(self):
        return "ZElement(" + ", ".join(f"{k}:{QQ.fmt(self[k])}" for k in sorted(self)) + ")"


def _idx(i, j):
    s = i + j
    if abs(s) >= INDEX_LIMIT:
        raise OverflowError(f"index {i} + {j} out of range")
    return s


def parse_element(text: str) -> ZElement:
    """Parse ``"k:coeff,k:coeff"`` (e.g. ``"0:1,1:2"`` for e_0 + 2 e_1)."""
    out = ZElement()
    text = text.strip()
    if not text:
        raise ValueError("empty element")
    for part in text.split(","):
        k, sep, c = part.partition(":")
        if not sep:
            raise ValueError(f"bad term {part!r}; expected k:coeff")
        try:
            out._add(int(k), QQ.parse(c))
        except ValueError as exc:
            raise ValueError(f"bad term {part!r}: {exc}") from None
    return out


BRACKET_RULES = {
    "witt": lambda i, j: i - j,
    # test hook: skew-symmetric but violates the Jacobi identity
    "cubic": lambda i, j: i**3 - j**3,
}


def z_bracket(x: ZElement, y: ZElement, shift=0, rule="witt") -> ZElement:
    """{e_i, e_j} = c(i, j) e_{i+j+shift} with c(i, j) = i - j by default.

    A nonzero ``shift`` is only a relabelling (e_k -> e_{k-shift} turns it back
    into the Witt bracket), so it still satisfies Jacobi; ``rule="cubic"``
    does not.
    """
    coeff = BRACKET_RULES[rule]
    out = ZElement()
    for i, a in x.items():
        for j, b in y.items():
            if i != j:
                out._add(_idx(_idx(i, j), shift), coeff(i, j) * a * b)
    return out


def laurent(x: ZElement, y: ZElement) -> ZElement:
    out = ZElement()
    for i, a in x.items():
        for j, b in y.items():
            out._add(_idx(i, j), a * b)
    return out


@dataclass(frozen=True)
class ZAlgebraSpec:
    """Witt bracket plus the Laurent product mutated by ``q`` (q = e_0 is the
    plain Laurent product)."""

    q: ZElement
    bracket_shift: int = 0
    bracket_rule: str = "witt"

    def __post_init__(self):
        if not self.q:
            raise ValueError("mutation element q must be nonzero")
        if self.bracket_rule not in BRACKET_RULES:
            raise ValueError(f"unknown bracket rule {self.bracket_rule!r}")

    @classmethod
    def laurent(cls):
        return cls(ZElement.basis(0))

    def __hash__(self):
        return hash((tuple(sorted(self.q.items())), self.bracket_shift, self.bracket_rule))


def z_product(spec: ZAlgebraSpec, x: ZElement, y: ZElement) -> ZElement:
    return laurent(laurent(x, spec.q), y)


def z_br(spec: ZAlgebraSpec, x: ZElement, y: ZElement) -> ZElement:
    return z_bracket(x, y, spec.bracket_shift, spec.bracket_rule)


def _defect(spec, identity, x, y, z):
    m = lambda a, b: z_product(spec, a, b)  # noqa: E731
    b = lambda a, c: z_br(spec, a, c)  # noqa: E731
    if identity is Identity.ASSOC_CIRC:
        return m(m(x, y), z) - m(x, m(y, z))
    if identity is Identity.JACOBI_SUPER:
        return b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y)
    if identity is Identity.TP_LEIBNIZ_SUPER:
        return m(x, b(y, z)).scale(2) - b(m(x, y), z) - b(y, m(x, z))
    raise ValueError(f"{identity.value} is not checked on Z-indexed algebras")


@dataclass
class WindowReport:
    identity: Identity
    verdict: str
    window: tuple
    counterexample: tuple | None
    defect: ZElement | None
    tuples_checked: int

    @property
    def passed(self):
        return self.verdict == "PASS"

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "verdict": self.verdict,
            "window": list(self.window),
            "counterexample": None if self.counterexample is None else list(self.counterexample),
            "defect": None if self.defect is None else self.defect.to_strings(),
            "tuples_checked": self.tuples_checked,
            "evidence_only": True,
        }

    def as_identity_report(self) -> IdentityReport:
        return IdentityReport(self.identity, self.verdict, self.counterexample, self.defect, self.tuples_checked)


def window_check(spec: ZAlgebraSpec, identity, window) -> WindowReport:
    """Check an identity on every basis triple with indices in [lo, hi]."""
    identity = Identity.parse(identity)
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {lo}..{hi}")
    count = 0
    for t in itertools.product(range(lo, hi + 1), repeat=3):
        count += 1
        d = _defect(spec, identity, *(ZElement.basis(k) for k in t))
        if d:
            return WindowReport(identity, "FAIL", (lo, hi), t, d, count)
    return WindowReport(identity, "PASS", (lo, hi), None, None, count)


def laurent_invertible(q: ZElement):
    """q^{-1} when q = c e_k (Laurent units are monomials), else None."""
    if not q:
        raise ValueError("q must be nonzero")
    if len(q) != 1:
        return None
    (k, c), = q.items()
    return ZElement({-k: 1 / c})


def window_unit(spec: ZAlgebraSpec, window):
    """Solve u o_q e_k = e_k for all k in the window with u supported in the
    window; returns u or None.  Independent of :func:`laurent_invertible`."""
    lo, hi = window
    idx = list(range(lo, hi + 1))
    # unknown coefficients u_m for m in the window; equations per (k, output index)
    rows, rhs = [], []
    for k in idx:
        images = [z_product(spec, ZElement.basis(m), ZElement.basis(k)) for m in idx]
        outs = sorted(set().union(*images) | {k})
        for o in outs:
            rows.append([img.get(o, Fraction(0)) for img in images])
            rhs.append(Fraction(1 if o == k else 0))
    sol = solve(Matrix(QQ, rows, len(idx)), rhs)
    if sol is None:
        return None
    return ZElement(dict(zip(idx, sol)))


def window_double_products(spec: ZAlgebraSpec, window) -> dict:
    """Kantor-double products of basis elements of the window span, keyed by
    (i, starred_i, j, starred_j).  Only the plain Laurent product (q = e_0) is
    covered by the displayed rules, but any q works here."""
    lo, hi = window
    out = {}
    for i in range(lo, hi + 1):
        for j in range(lo, hi + 1):
            ei, ej = ZElement.basis(i), ZElement.basis(j)
            prod = z_product(spec, ei, ej)
            out[(i, False, j, False)] = (prod, False)
            out[(i, True, j, False)] = (prod, True)
            out[(i, False, j, True)] = (prod, True)
            out[(i, True, j, True)] = (z_br(spec, ei, ej), False)
    return out
