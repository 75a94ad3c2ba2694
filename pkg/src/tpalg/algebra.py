"""Finite-dimensional Z2-graded algebras with two products, by structure constants.

Basis vectors are ``e_0 .. e_{n-1}``.  The commutative product ``circ`` and
the bracket are sparse tables of ``(i, j, k, c)`` meaning that ``e_i * e_j``
has coefficient ``c`` on ``e_k``.  Both orientations ``(i, j)`` and ``(j, i)``
are stored explicitly; :func:`validate` checks the (super)symmetry instead of
filling it in.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

from .exactmath import FieldError, FieldSpec, Matrix, Subspace, unit_vector, zero_vector


class AlgebraError(ValueError):
    pass


class ParityError(AlgebraError):
    pass


class Product(enum.Enum):
    CIRC = "circ"
    BRACKET = "bracket"

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        try:
            return cls(s.lower())
        except ValueError:
            raise AlgebraError(f"unknown product {s!r}; use circ or bracket") from None


def _build_lookup(table):
    look = {}
    for i, j, k, c in table:
        look.setdefault((i, j), []).append((k, c))
    return look


class SuperAlgebra:
    """Structure-constant algebra; immutable once built.

    ``circ`` and ``bracket`` are iterables of ``(i, j, k, coeff)``; coefficients
    are coerced into ``field`` and zero entries dropped.
    """

    def __init__(self, name, field: FieldSpec, dim, parity=None, circ=(), bracket=(), meta=None):
        self.name = name
        self.field = field
        self.dim = int(dim)
        parity = (0,) * self.dim if parity is None else tuple(int(x) for x in parity)
        if len(parity) != self.dim:
            raise AlgebraError(f"parity vector has length {len(parity)}, expected {self.dim}")
        if any(x not in (0, 1) for x in parity):
            raise AlgebraError("parities must be 0 or 1")
        self.parity = parity
        self.circ = self._table(circ, "circ")
        self.bracket = self._table(bracket, "bracket")
        self.meta = dict(meta) if meta else {}
        self._look = {
            Product.CIRC: _build_lookup(self.circ),
            Product.BRACKET: _build_lookup(self.bracket),
        }

    def _table(self, entries, label):
        seen = {}
        for entry in entries:
            if len(entry) != 4:
                raise AlgebraError(f"{label} entry {entry!r} is not (i, j, k, coeff)")
            i, j, k, c = entry
            key = (int(i), int(j), int(k))
            if key in seen:
                raise AlgebraError(f"{label} lists {key} twice")
            c = self.field(c)
            if c:
                seen[key] = c
        return tuple((i, j, k, c) for (i, j, k), c in sorted(seen.items()))

    def table(self, which) -> tuple:
        return self.circ if Product.parse(which) is Product.CIRC else self.bracket

    @property
    def is_graded(self) -> bool:
        return any(self.parity)

    def basis_vector(self, i) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def zero(self) -> tuple:
        return zero_vector(self.field, self.dim)

    def vector(self, coords) -> tuple:
        v = tuple(self.field(x) for x in coords)
        if len(v) != self.dim:
            raise AlgebraError(f"element has {len(v)} coordinates, algebra dimension is {self.dim}")
        return v

    def product_of_basis(self, which, i, j) -> list:
        """Sparse ``[(k, c)]`` for the product of ``e_i`` and ``e_j``."""
        return self._look[Product.parse(which)].get((i, j), [])

    def mul(self, which, x, y) -> tuple:
        look = self._look[Product.parse(which)]
        out = [self.field.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                terms = look.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def circ_mul(self, x, y):
        return self.mul(Product.CIRC, x, y)

    def br(self, x, y):
        return self.mul(Product.BRACKET, x, y)

    def parity_of(self, v):
        """Parity of a homogeneous element; None if ``v`` mixes parities."""
        ps = {self.parity[i] for i, x in enumerate(v) if x}
        if not ps:
            return 0
        if len(ps) > 1:
            return None
        return ps.pop()

    def has_product(self, which=None) -> bool:
        if which is None:
            return bool(self.circ or self.bracket)
        return bool(self.table(which))

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (
            self.name == other.name
            and self.field == other.field
            and self.parity == other.parity
            and self.circ == other.circ
            and self.bracket == other.bracket
        )

    def __hash__(self):
        return hash((self.name, self.field, self.parity, self.circ, self.bracket))

    def __repr__(self):
        return f"SuperAlgebra({self.name!r}, {self.field}, dim={self.dim})"

    # -- file format ---------------------------------------------------------

    def to_json(self) -> dict:
        fmt = self.field.fmt
        doc = {
            "name": self.name,
            "field": self.field.to_json(),
            "dim": self.dim,
            "parity": list(self.parity),
            "circ": [[i, j, k, fmt(c)] for i, j, k, c in self.circ],
            "bracket": [[i, j, k, fmt(c)] for i, j, k, c in self.bracket],
        }
        if self.meta:
            doc.update(self.meta)
        return doc


def multiply(A: SuperAlgebra, which, x, y) -> tuple:
    if len(x) != A.dim or len(y) != A.dim:
        raise AlgebraError(f"elements must have {A.dim} coordinates")
    return A.mul(which, A.vector(x), A.vector(y))


@dataclass
class ValidationReport:
    ok: bool
    kind: str | None = None  # "index" | "parity" | "symmetry"
    table: str | None = None
    entry: tuple | None = None
    message: str = ""

    def to_json(self):
        return {
            "ok": self.ok,
            "kind": self.kind,
            "table": self.table,
            "entry": list(self.entry) if self.entry is not None else None,
            "message": self.message,
        }


def validate(A: SuperAlgebra) -> ValidationReport:
    """Index ranges, parity homogeneity and (super)symmetry of both tables."""
    n = A.dim
    for label, table in (("circ", A.circ), ("bracket", A.bracket)):
        for i, j, k, _ in table:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                return ValidationReport(False, "index", label, (i, j, k), f"index out of range 0..{n - 1}")
    for label, table in (("circ", A.circ), ("bracket", A.bracket)):
        for i, j, k, _ in table:
            if A.parity[k] != (A.parity[i] + A.parity[j]) % 2:
                return ValidationReport(
                    False, "parity", label, (i, j, k), "product lands outside the expected parity"
                )
    for label, table, skew in (("circ", A.circ, False), ("bracket", A.bracket, True)):
        coeffs = {(i, j, k): c for i, j, k, c in table}
        keys = sorted(set(coeffs) | {(j, i, k) for i, j, k in coeffs})
        zero = A.field.zero
        for i, j, k in keys:
            sign = -1 if A.parity[i] and A.parity[j] else 1
            if skew:
                sign = -sign
            if coeffs.get((i, j, k), zero) != sign * coeffs.get((j, i, k), zero):
                return ValidationReport(
                    False,
                    "symmetry",
                    label,
                    (i, j, k),
                    "entry breaks super skew-symmetry" if skew else "entry breaks supercommutativity",
                )
    return ValidationReport(True)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra, name=None) -> SuperAlgebra:
    if A.field != B.field:
        raise FieldError(f"direct sum over different fields {A.field} and {B.field}")
    s = A.dim

    def shift(table):
        return [(i + s, j + s, k + s, c) for i, j, k, c in table]

    return SuperAlgebra(
        name or f"{A.name}+{B.name}",
        A.field,
        A.dim + B.dim,
        A.parity + B.parity,
        list(A.circ) + shift(B.circ),
        list(A.bracket) + shift(B.bracket),
    )


def embed(sub: Subspace, offset: int, total: int) -> Subspace:
    """Place a subspace of F^m into F^total starting at coordinate ``offset``."""
    vecs = []
    for v in sub.vectors():
        w = [sub.field.zero] * total
        w[offset:offset + len(v)] = v
        vecs.append(w)
    return Subspace.span(sub.field, total, vecs)


def _operator(A: SuperAlgebra, which, a, left: bool) -> Matrix:
    a = A.vector(a)
    cols = []
    for j in range(A.dim):
        e = A.basis_vector(j)
        cols.append(A.mul(which, a, e) if left else A.mul(which, e, a))
    return Matrix.from_columns(A.field, cols, A.dim)


def left_mult_operator(A: SuperAlgebra, which, a) -> Matrix:
    """Matrix of ``x -> a.x`` for the chosen product (``P_a`` or ``Q_a``)."""
    a = A.vector(a)
    if A.is_graded and A.parity_of(a) is None:
        raise ParityError("left multiplication needs a homogeneous element on a graded algebra")
    return _operator(A, which, a, left=True)


def right_mult_operator(A: SuperAlgebra, which, a) -> Matrix:
    a = A.vector(a)
    if A.is_graded and A.parity_of(a) is None:
        raise ParityError("right multiplication needs a homogeneous element on a graded algebra")
    return _operator(A, which, a, left=False)


def basis_operators(A: SuperAlgebra, which, side="left") -> list:
    """Left (or right) multiplication matrices of every basis vector."""
    fn = left_mult_operator if side == "left" else right_mult_operator
    return [fn(A, which, A.basis_vector(i)) for i in range(A.dim)]


def parity_projections(A: SuperAlgebra) -> list:
    """Projections onto the even and odd parts (empty for ungraded algebras)."""
    if not A.is_graded:
        return []
    f = A.field
    out = []
    for par in (0, 1):
        rows = [[f.one if (i == j and A.parity[i] == par) else f.zero for j in range(A.dim)] for i in range(A.dim)]
        out.append(Matrix(f, rows, A.dim))
    return out


# -- serialisation -------------------------------------------------------------


def _dump_table(rows):
    if not rows:
        return "[]"
    inner = ",\n".join("    " + json.dumps(r, ensure_ascii=False) for r in rows)
    return "[\n" + inner + "\n  ]"


def dumps(A: SuperAlgebra) -> str:
    """Canonical text: sorted top-level keys, one table row per line."""
    doc = A.to_json()
    parts = []
    for key in sorted(doc):
        if key in ("circ", "bracket"):
            val = _dump_table(doc[key])
        else:
            val = json.dumps(doc[key], sort_keys=True, ensure_ascii=False)
        parts.append(f"  {json.dumps(key)}: {val}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def from_json(doc, check=True) -> SuperAlgebra:
    if not isinstance(doc, dict):
        raise AlgebraError("algebra file must hold a JSON object")
    missing = [k for k in ("name", "field", "dim", "parity", "circ", "bracket") if k not in doc]
    if missing:
        raise AlgebraError(f"algebra file lacks keys {missing}")
    field = FieldSpec.from_json(doc["field"])

    def rows(key):
        out = []
        for r in doc[key]:
            if not (isinstance(r, list) and len(r) == 4 and isinstance(r[3], str)):
                raise AlgebraError(f"bad {key} row {r!r}; expected [i, j, k, \"coeff\"]")
            out.append((r[0], r[1], r[2], field.parse(r[3])))
        return out

    meta = {k: v for k, v in doc.items() if k not in ("name", "field", "dim", "parity", "circ", "bracket")}
    A = SuperAlgebra(doc["name"], field, doc["dim"], doc["parity"], rows("circ"), rows("bracket"), meta)
    if check:
        rep = validate(A)
        if not rep.ok:
            raise AlgebraError(f"invalid algebra: {rep.kind} violation in {rep.table} at {rep.entry}: {rep.message}")
    return A


def loads(text: str, check=True) -> SuperAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"not valid JSON: {exc}") from None
    return from_json(doc, check=check)


def load(path, check=True) -> SuperAlgebra:
    return loads(Path(path).read_text(encoding="utf-8"), check=check)


def save(A: SuperAlgebra, path) -> None:
    Path(path).write_text(dumps(A), encoding="utf-8")
