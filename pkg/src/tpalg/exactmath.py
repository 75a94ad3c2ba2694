"""Exact scalars over Q and GF(p), dense matrices, and subspaces.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms with a positive denominator).  Prime-field elements are
:class:`Residue`.  Row reduction over GF(p) runs through the int64 kernels in
:mod:`tpalg._kernels`; over Q it is plain Python on fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels


class FieldError(ValueError):
    pass


class UnsupportedFieldError(FieldError):
    """Operation is only defined over some fields (e.g. characteristic 0)."""


class DimensionError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Residue:
    """Element of GF(p), stored as its representative in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def inverse(self) -> "Residue":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class FieldSpec:
    """``FieldSpec("Q")`` or ``FieldSpec("GF", p)`` with p an odd prime."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise FieldError("the rational field takes no modulus")
        elif self.kind == "GF":
            if self.p is None or not _is_prime(self.p):
                raise FieldError(f"GF modulus must be prime, got {self.p!r}")
            if self.p == 2:
                raise FieldError("characteristic 2 is not supported")
            if self.p >= _kernels.MAX_MODULUS:
                raise FieldError(f"modulus {self.p} too large for int64 kernels")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls("GF", p)

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "GF" else 0

    @property
    def zero(self):
        return Residue(0, self.p) if self.kind == "GF" else Fraction(0)

    @property
    def one(self):
        return Residue(1, self.p) if self.kind == "GF" else Fraction(1)

    def __call__(self, x):
        """Coerce an int, Fraction, Residue or canonical string into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "GF":
            if isinstance(x, Residue):
                if x.p != self.p:
                    raise FieldError(f"GF({x.p}) element given to GF({self.p})")
                return x
            if isinstance(x, Fraction):
                return Residue(x.numerator, self.p) / x.denominator
            if isinstance(x, (int, np.integer)):
                return Residue(int(x), self.p)
        else:
            if isinstance(x, Residue):
                raise FieldError("GF element given to the rational field")
            if isinstance(x, (int, np.integer, Fraction)):
                return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def parse(self, s: str):
        s = s.strip()
        if self.kind == "GF":
            try:
                v = int(s)
            except ValueError:
                raise FieldError(f"bad GF({self.p}) scalar {s!r}") from None
            if not 0 <= v < self.p:
                raise FieldError(f"GF({self.p}) scalar {s!r} not in [0, {self.p})")
            return Residue(v, self.p)
        num, sep, den = s.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise FieldError(f"bad rational scalar {s!r}") from None
        if d <= 0:
            raise FieldError(f"denominator must be positive in {s!r}")
        q = Fraction(n, d)
        if (q.numerator, q.denominator) != (n, d):
            raise FieldError(f"rational {s!r} not in lowest terms")
        return q

    def fmt(self, x) -> str:
        if self.kind == "GF":
            return str(x.v)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def elements(self):
        if not self.is_finite:
            raise FieldError("cannot enumerate an infinite field")
        return [Residue(v, self.p) for v in range(self.p)]

    def to_json(self) -> dict:
        return {"kind": "Q"} if self.kind == "Q" else {"kind": "GF", "p": self.p}

    @classmethod
    def from_json(cls, doc) -> "FieldSpec":
        if not isinstance(doc, dict) or "kind" not in doc:
            raise FieldError(f"bad field block {doc!r}")
        if doc["kind"] == "Q":
            return cls("Q")
        return cls(doc["kind"], doc.get("p"))

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"


QQ = FieldSpec.rationals()


def zero_vector(field: FieldSpec, n: int) -> tuple:
    z = field.zero
    return (z,) * n


def unit_vector(field: FieldSpec, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def add_vectors(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def is_zero_vector(v: Iterable) -> bool:
    return not any(v)


class Matrix:
    """Immutable dense matrix over a :class:`FieldSpec`.

    As a linear operator it acts on column vectors: entry ``[i][j]`` is the
    coefficient of ``e_i`` in the image of ``e_j``.
    """

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise DimensionError("ragged matrix rows")
        self._set(field, rows, ncols)

    def _set(self, field, rows, ncols):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, field, rows, ncols):
        m = object.__new__(cls)
        m._set(field, rows, ncols)
        return m

    @classmethod
    def zeros(cls, field, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = field.zero
        return cls._raw(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field, n):
        return cls._raw(field, tuple(unit_vector(field, n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, field, columns, nrows):
        cols = [tuple(field(x) for x in c) for c in columns]
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls._raw(field, rows, len(cols))

    @classmethod
    def from_ints(cls, field, array):
        array = np.asarray(array, dtype=np.int64)
        if array.ndim != 2:
            raise DimensionError("expected a 2-d array")
        return cls._raw(
            field,
            tuple(tuple(Residue(int(x), field.p) for x in row) for row in array),
            array.shape[1],
        )

    def to_ints(self) -> np.ndarray:
        if not self.field.is_finite:
            raise FieldError("integer view only exists over GF(p)")
        out = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                out[i, j] = x.v
        return out

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        if not self.nrows:
            return Matrix._raw(self.field, tuple(() for _ in range(self.ncols)), 0)
        return Matrix._raw(self.field, tuple(zip(*self.rows)), self.nrows)

    def _check_same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(f"field mismatch {self.field} vs {other.field}")

    def __add__(self, other):
        self._check_same(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(
            self.field,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other):
        self._check_same(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(
            self.field,
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check_same(other)
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            # row-by-row accumulation skips zero entries (operators are sparse)
            zero = self.field.zero
            m = other.ncols
            out = []
            for r in self.rows:
                acc = [zero] * m
                for a, orow in zip(r, other.rows):
                    if a:
                        for j, b in enumerate(orow):
                            if b:
                                acc[j] = acc[j] + a * b
                out.append(tuple(acc))
            return Matrix._raw(self.field, tuple(out), m)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(_dot(r, v, self.field) for r in self.rows)

    def apply(self, v) -> tuple:
        return self @ v

    def trace(self):
        t = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            t = t + self.rows[i][i]
        return t

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def vectorize(self) -> tuple:
        """Row-major flattening."""
        return tuple(x for r in self.rows for x in r)

    def hstack(self, other) -> "Matrix":
        self._check_same(other)
        if self.nrows != other.nrows:
            raise DimensionError("hstack needs equal row counts")
        return Matrix._raw(
            self.field, tuple(r + s for r, s in zip(self.rows, other.rows)), self.ncols + other.ncols
        )

    def vstack(self, other) -> "Matrix":
        self._check_same(other)
        if self.ncols != other.ncols:
            raise DimensionError("vstack needs equal column counts")
        return Matrix._raw(self.field, self.rows + other.rows, self.ncols)

    @classmethod
    def block(cls, blocks) -> "Matrix":
        """Assemble a matrix from a 2-d list of equally sized blocks."""
        out = None
        for brow in blocks:
            row = brow[0]
            for b in brow[1:]:
                row = row.hstack(b)
            out = row if out is None else out.vstack(row)
        return out

    def to_strings(self) -> list:
        return [[self.field.fmt(x) for x in r] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_strings()})"


def _dot(r, c, field):
    s = field.zero
    for a, b in zip(r, c):
        if a and b:
            s = s + a * b
    return s


def _rref_rows(field: FieldSpec, rows: list, ncols: int):
    """Reduce a list of rows; returns (nonzero reduced rows, pivot columns)."""
    if not rows:
        return [], []
    if field.is_finite:
        arr = np.array([[x.v for x in r] for r in rows], dtype=np.int64).reshape(len(rows), ncols)
        red, pivots = _kernels.rref_mod(arr, field.p)
        p = field.p
        return [tuple(Residue(int(x), p) for x in r) for r in red], pivots
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in a[:r]], pivots


def rref(m: Matrix) -> Matrix:
    """Canonical reduced row-echelon form with zero rows dropped."""
    rows, _ = _rref_rows(m.field, list(m.rows), m.ncols)
    return Matrix._raw(m.field, tuple(rows), m.ncols)


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.field, list(m.rows), m.ncols)[0])


def _nullspace_rows(field, rows, ncols):
    red, pivots = _rref_rows(field, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def kernel(m: Matrix) -> "Subspace":
    """Null space ``{v : m v = 0}`` as a canonical subspace."""
    return Subspace.span(m.field, m.ncols, _nullspace_rows(m.field, list(m.rows), m.ncols))


def solve(m: Matrix, b: Sequence):
    """One solution of ``m x = b`` (free variables zero), or None."""
    if len(b) != m.nrows:
        raise DimensionError("right-hand side length does not match row count")
    field = m.field
    aug = [tuple(r) + (field(x),) for r, x in zip(m.rows, b)]
    red, pivots = _rref_rows(field, aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [field.zero] * m.ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return tuple(x)


class Subspace:
    """Subspace of F^n held as a canonical RREF basis.

    Two subspaces are equal exactly when their basis matrices coincide.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis_rows, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = Matrix._raw(field, tuple(basis_rows), ambient_dim)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field: FieldSpec, n: int, vectors: Iterable) -> "Subspace":
        rows = []
        for v in vectors:
            v = tuple(v)
            if len(v) != n:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {n}")
            rows.append(tuple(field(x) for x in v))
        red, pivots = _rref_rows(field, rows, n)
        return cls(field, n, red, pivots)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field, n):
        return cls(field, n, [unit_vector(field, n, i) for i in range(n)], range(n))

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Subspace":
        return cls.span(m.field, m.ncols, m.rows)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> list:
        return list(self.basis.rows)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other):
        if not isinstance(other, Subspace):
            raise TypeError(f"expected Subspace, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(f"field mismatch {self.field} vs {other.field}")
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError(
                f"ambient dimension mismatch {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains(self, v) -> bool:
        v = tuple(self.field(x) for x in v)
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        w = list(v)
        for row, pc in zip(self.basis.rows, self.pivots):
            f = w[pc]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return not any(w)

    __contains__ = contains

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.vectors())

    def __le__(self, other):
        return other.contains_subspace(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        a, b = self.vectors(), other.vectors()
        if not a or not b:
            return Subspace.zero(self.field, self.ambient_dim)
        # columns are the basis vectors of both spaces: sum a_i A_i - sum b_j B_j = 0
        cols = a + [tuple(-x for x in v) for v in b]
        m = Matrix.from_columns(self.field, cols, self.ambient_dim)
        coeffs = kernel(m).vectors()
        vecs = []
        for c in coeffs:
            w = zero_vector(self.field, self.ambient_dim)
            for ci, ai in zip(c[: len(a)], a):
                if ci:
                    w = add_vectors(w, scale_vector(ci, ai))
            vecs.append(w)
        return Subspace.span(self.field, self.ambient_dim, vecs)

    sum = __add__
    intersect = __and__

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.rows == other.basis.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.rows))

    def to_strings(self) -> list:
        return self.basis.to_strings()

    def __repr__(self):
        return f"Subspace({self.field}, n={self.ambient_dim}, basis={self.to_strings()})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def contains(a: Subspace, v) -> bool:
    return a.contains(v)


def spin(field: FieldSpec, n: int, gens: Iterable, ops: Sequence[Matrix]) -> Subspace:
    """Smallest subspace containing ``gens`` and invariant under every operator."""
    gens = [tuple(field(x) for x in g) for g in gens]
    if not gens:
        return Subspace.zero(field, n)
    if field.is_finite:
        g = np.array([[x.v for x in v] for v in gens], dtype=np.int64)
        o = np.array([m.to_ints() for m in ops], dtype=np.int64).reshape(len(ops), n, n)
        red = _kernels.spin_mod(g, o, field.p)
        p = field.p
        return Subspace.span(field, n, [[Residue(int(x), p) for x in row] for row in red])
    # echelon basis with unit pivots; each row zero at the pivots of earlier rows
    basis: list = []
    pivots: list = []

    def reduce(w):
        for row, pc in zip(basis, pivots):
            f = w[pc]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def add(w):
        w = reduce(list(w))
        for k, x in enumerate(w):
            if x:
                inv = 1 / x
                basis.append([y * inv for y in w])
                pivots.append(k)
                return True
        return False

    for g in gens:
        add(g)
    q = 0
    while q < len(basis) < n:
        v = tuple(basis[q])
        for op in ops:
            add(op @ v)
            if len(basis) == n:
                break
        q += 1
    return Subspace.span(field, n, basis)
