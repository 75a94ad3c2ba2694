"""Hot GF(p) kernels on int64 arrays.

Two interchangeable backends are provided: explicit loops compiled with
numba, and a vectorised numpy path.  ``TPALG_NUMBA=0`` in the environment
selects the numpy path at import time; :func:`set_backend` switches at run
time (used by the benchmark and by the backend-agreement tests).

All arrays hold residues in ``[0, p)``; ``p`` must stay below ``2**31`` so
that products fit in int64.
"""

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
    _jit = njit(cache=True)
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def _jit(fn):
        return fn

MAX_MODULUS = 2**31


# ---------------------------------------------------------------------------
# loop kernels (compiled by numba; plain Python without it)


@_jit
def _inv_mod(a, p):
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


@_jit
def _rref_loops(a, p):
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(cols):
                t = a[r, k]
                a[r, k] = a[piv, k]
                a[piv, k] = t
        inv = _inv_mod(a[r, c], p)
        for k in range(cols):
            a[r, k] = a[r, k] * inv % p
        for i in range(rows):
            if i != r:
                f = a[i, c]
                if f != 0:
                    for k in range(cols):
                        a[i, k] = (a[i, k] - f * a[r, k]) % p
        r += 1
    return r


@_jit
def _spin_into(basis, pivots, r, ops, p, queue_start):
    # Closes span(basis[:r]) under ops; rows are kept in echelon form with
    # unit pivots, each row zero at the pivots of all earlier rows.
    n = basis.shape[1]
    m = ops.shape[0]
    w = np.zeros(n, dtype=np.int64)
    q = queue_start
    while q < r:
        for o in range(m):
            for i in range(n):
                s = 0
                for j in range(n):
                    s += ops[o, i, j] * basis[q, j]
                w[i] = s % p
            for t in range(r):
                f = w[pivots[t]]
                if f != 0:
                    for k in range(n):
                        w[k] = (w[k] - f * basis[t, k]) % p
            lead = -1
            for k in range(n):
                if w[k] != 0:
                    lead = k
                    break
            if lead >= 0:
                inv = _inv_mod(w[lead], p)
                for k in range(n):
                    basis[r, k] = w[k] * inv % p
                pivots[r] = lead
                r += 1
                if r == n:
                    return r
        q += 1
    return r


@_jit
def _add_vector(basis, pivots, r, v, p):
    n = basis.shape[1]
    w = v.copy()
    for t in range(r):
        f = w[pivots[t]]
        if f != 0:
            for k in range(n):
                w[k] = (w[k] - f * basis[t, k]) % p
    for k in range(n):
        if w[k] != 0:
            inv = _inv_mod(w[k], p)
            for kk in range(n):
                basis[r, kk] = w[kk] * inv % p
            pivots[r] = k
            return r + 1
    return r


@_jit
def _spin_loops(gens, ops, p):
    n = gens.shape[1]
    basis = np.zeros((n, n), dtype=np.int64)
    pivots = np.zeros(n, dtype=np.int64)
    r = 0
    for g in range(gens.shape[0]):
        if r == n:
            break
        r = _add_vector(basis, pivots, r, gens[g], p)
    r = _spin_into(basis, pivots, r, ops, p, 0)
    out = basis[:r].copy()
    _rref_loops(out, p)
    return out


@_jit
def _exhaustive_loops(ops, p, n, limit):
    # Walks every nonzero vector of F_p^n in lexicographic order (the last
    # coordinate is the least significant digit).
    # Returns (checked, best_dim, best_code); best_dim == n means every
    # vector generated the whole space.
    basis = np.zeros((n, n), dtype=np.int64)
    pivots = np.zeros(n, dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)
    best_dim = n
    best_code = 0
    checked = 0
    code = 0
    while checked < limit:
        # increment the counter, last coordinate fastest
        i = n - 1
        while i >= 0:
            v[i] += 1
            if v[i] < p:
                break
            v[i] = 0
            i -= 1
        if i < 0:
            break
        code += 1
        checked += 1
        r = _add_vector(basis, pivots, 0, v, p)
        r = _spin_into(basis, pivots, r, ops, p, 0)
        if r < best_dim:
            best_dim = r
            best_code = code
    return checked, best_dim, best_code


# ---------------------------------------------------------------------------
# numpy kernels


def _rref_numpy(a, p):
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        col = a[:, c].copy()
        col[r] = 0
        a -= np.outer(col, a[r])
        a %= p
        r += 1
    return r


class _NumpySpan:
    """Fully reduced echelon basis, grown one vector at a time."""

    def __init__(self, n, p):
        self.p = p
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots = []

    def reduce(self, w):
        if self.pivots:
            w = (w - w[..., self.pivots] @ self.rows) % self.p
        return w

    def add(self, w):
        w = self.reduce(w)
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        w = w * pow(int(w[c]), self.p - 2, self.p) % self.p
        if self.pivots:
            self.rows = (self.rows - np.outer(self.rows[:, c], w)) % self.p
        self.rows = np.vstack([self.rows, w])
        self.pivots.append(c)
        return True


def _spin_numpy_span(span, ops, n, q=0):
    while q < len(span.pivots) < n:
        images = ops @ span.rows[q] % span.p
        for w in span.reduce(images):
            if w.any():
                span.add(w)
                if len(span.pivots) == n:
                    break
        q += 1
    return span


def _spin_numpy(gens, ops, p):
    n = gens.shape[1]
    span = _NumpySpan(n, p)
    for g in gens:
        span.add(g)
    _spin_numpy_span(span, ops, n)
    out = span.rows.copy()
    _rref_numpy(out, p)
    return out


def _exhaustive_numpy(ops, p, n, limit):
    best_dim, best_code, checked = n, 0, 0
    total = p**n - 1
    for code in range(1, min(total, limit) + 1):
        v = np.array(decode_vector(code, p, n), dtype=np.int64)
        span = _NumpySpan(n, p)
        span.add(v)
        d = len(_spin_numpy_span(span, ops, n).pivots)
        checked += 1
        if d < best_dim:
            best_dim, best_code = d, code
    return checked, best_dim, best_code


# ---------------------------------------------------------------------------
# backend selection

_BACKENDS = {
    "numpy": (_rref_numpy, _spin_numpy, _exhaustive_numpy),
}

if HAVE_NUMBA:
    _BACKENDS["numba"] = (_rref_loops, _spin_loops, _exhaustive_loops)

_backend = "numba" if HAVE_NUMBA and os.environ.get("TPALG_NUMBA", "1") != "0" else "numpy"


def backend():
    return _backend


def set_backend(name):
    global _backend
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(_BACKENDS)}")
    _backend = name


def rref_mod(a, p):
    """Return (reduced matrix without zero rows, pivot columns)."""
    a = np.array(a, dtype=np.int64) % p
    rank = _BACKENDS[_backend][0](a, p)
    out = a[:rank]
    pivots = [int(np.nonzero(row)[0][0]) for row in out]
    return out, pivots


def spin_mod(gens, ops, p):
    """Reduced basis of the smallest subspace containing ``gens`` and
    invariant under every matrix in ``ops`` (shape ``(m, n, n)``)."""
    gens = np.ascontiguousarray(np.asarray(gens, dtype=np.int64) % p)
    ops = np.ascontiguousarray(np.asarray(ops, dtype=np.int64) % p)
    n = gens.shape[1]
    if ops.shape[0] == 0:
        ops = np.zeros((1, n, n), dtype=np.int64)
    return _BACKENDS[_backend][1](gens, ops, p)


def exhaustive_min_closure(ops, p, n, limit):
    """Spin every nonzero vector of F_p^n under ``ops``.

    Returns ``(checked, best_dim, best_code)`` where ``best_code`` encodes the
    first vector, in lexicographic order, reaching the minimal closure
    dimension (base-p digits, last coordinate least significant).
    """
    ops = np.ascontiguousarray(np.asarray(ops, dtype=np.int64) % p)
    if ops.shape[0] == 0:
        ops = np.zeros((1, n, n), dtype=np.int64)
    checked, best_dim, best_code = _BACKENDS[_backend][2](ops, p, n, limit)
    return int(checked), int(best_dim), int(best_code)


def decode_vector(code, p, n):
    return [(code // p ** (n - 1 - i)) % p for i in range(n)]
