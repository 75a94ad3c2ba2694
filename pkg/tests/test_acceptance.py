"""Acceptance suite: twelve criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
Criteria that cannot be met are left failing; the analysis lives in the
project decisions ledger, not here.
"""

from __future__ import annotations

import random
import sys
import time

import pytest

from helpers import random_algebra
from tpalg import catalog, kantor, witt
from tpalg import halfderiv as H
from tpalg import identities as I
from tpalg import structure as S
from tpalg.exactmath import FieldSpec, Matrix, Subspace

GF3 = FieldSpec.gf(3)


def span(A, *idx):
    return Subspace.span(A.field, A.dim, [A.basis_vector(i) for i in idx])


def dims(series):
    return [s.dim for s in series]


def c1():
    A = catalog.get("sl2", field="GF3")
    space = H.half_derivations(A)
    fam = H.family_space(A, H.sl2_gf3_family(A))
    ok = space.dim == 3 and space.space == fam
    return ok, f"dim {space.dim}, family dim {fam.dim}, family inside space: {space.space.contains_subspace(fam)}"


def c2():
    A = catalog.get("sl2")
    space = H.half_derivations(A)
    ok = space.dim == 1 and space.contains(Matrix.identity(A.field, 3))
    return ok, f"dim {space.dim}"


def c3():
    passing = [
        (a, b)
        for a in range(3)
        for b in range(3)
        if I.is_tp(catalog.get("tp_sl2_gf3", alpha=a, beta=b))
    ]
    ok = sorted(passing) == sorted((a, b) for a in range(3) for b in range(3) if a * b == 0)
    return ok, f"TP pairs {passing}"


def c4():
    P = catalog.get("tp_sl2_gf3")
    t = time.perf_counter()
    tp = S.is_simple(P, "TP", "exhaustive")
    br = S.is_simple(P, "BRACKET", "exhaustive")
    elapsed = time.perf_counter() - t
    ok = tp.verdict == br.verdict == S.SIMPLE and tp.vectors_checked == 26 and elapsed < 1
    return ok, f"TP {tp.verdict} over {tp.vectors_checked} vectors, bracket {br.verdict}, {elapsed:.2f}s"


def c5():
    t = time.perf_counter()
    P = catalog.get("tp_sl2_gf3")
    J = kantor.kantor_double(P)
    jordan = kantor.is_jordan(J).passed
    ann = S.annihilator(J)
    e3 = span(J, 2)
    simple = S.is_simple(J, "CIRC", "exhaustive")
    witness_ok = (
        simple.verdict == S.NOT_SIMPLE
        and simple.vectors_checked == 728
        and S.is_ideal(J, simple.witness, "CIRC")
    )
    ob = kantor.double_simplicity_obstruction(P, J)
    ob_ok = ob is not None and S.is_ideal(J, ob, "CIRC")
    elapsed = time.perf_counter() - t
    ok = jordan and ann == e3 and witness_ok and ob_ok and elapsed < 5
    detail = (
        f"Jordan {jordan}; annihilator dim {ann.dim} (e3 inside: {ann.contains(J.basis_vector(2))}); "
        f"{simple.verdict} after {simple.vectors_checked} vectors, witness {simple.witness.to_strings()}; "
        f"obstruction ideal dim {ob.dim} verified {ob_ok}; {elapsed:.2f}s"
    )
    return ok, detail


def c6():
    P = catalog.get("nonlie_remark_q")
    L = kantor.lie_double(P)
    d = I.defect(L, "JACOBI_SUPER", (5, 5, 5))
    expected = kantor.starred(P, P.vector((-3, -3, 0)))
    ok = d == expected and not I.check(L, "JACOBI_SUPER").passed
    return ok, f"defect at (e3^s,e3^s,e3^s) = {[L.field.fmt(x) for x in d]}"


def c7():
    A = catalog.get("solvable3_q")
    summary = S.series(A)
    ok = (
        I.is_tp(A)
        and dims(summary.derived_series) == [3, 2, 0]
        and summary.unit == A.basis_vector(2)
        and summary.perfect_circ
        and not summary.lower_central_series[-1].is_zero()
    )
    return ok, (
        f"derived {dims(summary.derived_series)}, lower central {dims(summary.lower_central_series)}, "
        f"unit {summary.unit is not None}"
    )


def c8():
    R = catalog.get("radical_demo_q")
    rad = S.radical(R)
    ds = S.derived_series(R, rad)
    full = S.full_space(R)
    PP = S.product_space(R, "circ", full, full)
    ok = (
        rad == span(R, 3, 4, 5)
        and len(ds) == 3
        and all(S.is_ideal(R, d, "TP") for d in ds[:2])
        and ds[2].is_zero()
        and rad.contains_subspace(PP)
    )
    return ok, f"radical dim {rad.dim}, derived dims {dims(ds)}, PP inside R: {rad.contains_subspace(PP)}"


def c9():
    t = time.perf_counter()
    lines = []
    ok = True
    for q in ("0:1", "0:1,1:1", "1:2"):
        qq = witt.parse_element(q)
        spec = witt.ZAlgebraSpec(qq)
        reps = [witt.window_check(spec, i, (-3, 3)) for i in witt.WINDOW_IDENTITIES]
        inv = witt.laurent_invertible(qq) is not None
        unit = witt.window_unit(spec, (-3, 3)) is not None
        ok &= all(r.passed and r.tuples_checked == 343 for r in reps) and inv == unit
        lines.append(f"q={q}: {'/'.join(r.verdict for r in reps)}, invertible {inv}, unit {unit}")
    elapsed = time.perf_counter() - t
    return ok and elapsed < 2, "; ".join(lines) + f"; {elapsed:.2f}s"


def c10():
    checked = 0
    failures = []
    instances = [(k, {}) for k in catalog.keys()] + [("grassmann_derivation_q", {"with_t": 1})]
    for key, params in instances:
        A = catalog.get(key, **params)
        if not I.is_tp(A):
            continue
        checked += 1
        for r in I.check_derived_identities(A) + I.check_operator_relations(A):
            if not r.passed:
                failures.append(f"{key}:{r.identity.value}")
        # on graded input the family is a right superderivation (ledger)
        side = "right" if A.is_graded else "left"
        for i in range(A.dim):
            for j in range(A.dim):
                D = S.distinguished_derivation(A, A.basis_vector(i), A.basis_vector(j))
                if not S.is_derivation(A, "circ", D, (A.parity[i] + A.parity[j]) % 2, side):
                    failures.append(f"{key}:D({i},{j})")
    return not failures, f"{checked} TP algebras checked, failures {failures[:5]}"


def c11():
    rng = random.Random(2024)
    agree = inconclusive = 0
    disagree = []
    for n in range(200):
        A = random_algebra(rng, rng.randint(1, 4), GF3, rng.choice([0.1, 0.25, 0.5]), rng.random() < 0.25)
        which = rng.choice(["TP", "CIRC", "BRACKET"])
        e = S.is_simple(A, which, "exhaustive")
        m = S.is_simple(A, which, "meataxe", seed=n)
        if m.verdict == S.INDETERMINATE:
            inconclusive += 1
        elif m.verdict == e.verdict:
            agree += 1
        else:
            disagree.append(n)
    rate = inconclusive / 200
    return not disagree and rate < 0.05, f"agree {agree}, disagree {len(disagree)}, inconclusive rate {rate:.1%}"


def c12():
    P = catalog.get("tp_sl2_gf3")
    powers = dims(S.circ_powers(P))
    first = powers == [3, 1, 0] and S.series(P).perfect_bracket
    R = catalog.get("radical_demo_q")
    ds = S.derived_series(R, S.radical(R))
    contain = []
    for n in range(len(ds)):
        contain.append(ds[n].contains_subspace(S.circ_power(R, 2**n + 1)))
    return first and all(contain), f"P^(1,0) circ powers {powers}; containments for n=0..{len(ds) - 1}: {contain}"


CRITERIA = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12]


def evaluate(k):
    ok, detail = CRITERIA[k - 1]()
    return ok, f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, 13))
def test_criterion(k, capsys):
    ok, line = evaluate(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(k) for k in range(1, 13)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
