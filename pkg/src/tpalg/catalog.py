"""Built-in algebras: every concrete example worked in the source material plus
a few controls.

Basis index ``i`` corresponds to ``e_{i+1}`` in the usual 1-based notation,
so for instance ``sl2`` has ``{e_0, e_1} = e_2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Product, SuperAlgebra, direct_sum, validate
from .exactmath import QQ, FieldSpec


class CatalogError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


def _sym(entries, parity=None, skew=False):
    """Both orientations of each (i, j, k, c); (super)symmetry supplied here."""
    out = {}
    for i, j, k, c in entries:
        out[(i, j, k)] = c
        if i != j or skew:
            sign = -1 if parity and parity[i] and parity[j] else 1
            if skew:
                sign = -sign
            if (j, i, k) not in out:
                out[(j, i, k)] = sign * c
    return [(i, j, k, c) for (i, j, k), c in out.items()]


def _field(spec) -> FieldSpec:
    if isinstance(spec, FieldSpec):
        return spec
    if spec in (None, "Q", "q"):
        return QQ
    s = str(spec).upper()
    if s.startswith("GF"):
        return FieldSpec.gf(int(s[2:].strip("()")))
    raise CatalogError(f"unknown field {spec!r}; use Q or GF<p>")


SL2_BRACKET = [(0, 1, 2, 1), (2, 1, 1, -2), (2, 0, 0, 2)]


def sl2(field="Q") -> SuperAlgebra:
    """{e1,e2}=e3, {e3,e2}=-2e2, {e3,e1}=2e1 with zero circ."""
    f = _field(field)
    return SuperAlgebra(f"sl2_{f}", f, 3, None, (), _sym(SL2_BRACKET, skew=True))


def tp_sl2_gf3(alpha=1, beta=0) -> SuperAlgebra:
    """sl2 over GF(3) with e1 o e1 = alpha e2, e2 o e2 = beta e1."""
    f = FieldSpec.gf(3)
    for name, v in (("alpha", alpha), ("beta", beta)):
        if not isinstance(v, int) or not 0 <= v < 3:
            raise CatalogError(f"{name} must be an integer in [0, 3), got {v!r}")
    circ = [(0, 0, 1, alpha), (1, 1, 0, beta)]
    return SuperAlgebra(f"tp_sl2_gf3_{alpha}_{beta}", f, 3, None, circ, _sym(SL2_BRACKET, skew=True))


def solvable3_q() -> SuperAlgebra:
    """{e1,e3}=e1, {e2,e3}=e2; e1e3=e1, e2e3=e2, e3e3=e3 (unit e3)."""
    bracket = _sym([(0, 2, 0, 1), (1, 2, 1, 1)], skew=True)
    circ = _sym([(0, 2, 0, 1), (1, 2, 1, 1), (2, 2, 2, 1)])
    return SuperAlgebra("solvable3_q", QQ, 3, None, circ, bracket)


def nonlie_remark_q() -> SuperAlgebra:
    """e3 o e3 = e1, {e1, e3} = e1 + e2."""
    bracket = _sym([(0, 2, 0, 1), (0, 2, 1, 1)], skew=True)
    return SuperAlgebra("nonlie_remark_q", QQ, 3, None, [(2, 2, 0, 1)], bracket)


def grassmann1_q() -> SuperAlgebra:
    """Grassmann algebra on one odd generator: basis 1 (even), xi (odd)."""
    circ = _sym([(0, 0, 0, 1), (0, 1, 1, 1)], parity=(0, 1))
    return SuperAlgebra("grassmann1_q", QQ, 2, (0, 1), circ, ())


def _sorted_sign(seq):
    seq = list(seq)
    sign = 1
    for a in range(len(seq)):
        for b in range(len(seq) - 1 - a):
            if seq[b] > seq[b + 1]:
                seq[b], seq[b + 1] = seq[b + 1], seq[b]
                sign = -sign
    return sign, tuple(seq)


def grassmann_derivation_q(with_t=0) -> SuperAlgebra:
    """Superalgebra from a derivation: Lambda(x1, x2), optionally tensored with
    Q[t]/(t^2), with bracket {a, b} = d(a) b - a d(b) for the even derivation
    d(x1) = x1 + t x2, d(x2) = 0, d(t) = t (the t x2 term only when t is present).

    Basis order: monomials t^a x^S with a in (0, 1) outer and
    S in ((), (1,), (2,), (1, 2)) inner.
    """
    ts = (0, 1) if with_t else (0,)
    mons = [(a, S) for a in ts for S in ((), (1,), (2,), (1, 2))]
    idx = {m: i for i, m in enumerate(mons)}
    n = len(mons)
    parity = [len(S) % 2 for _, S in mons]

    def mono_mul(m1, m2):
        (a, S), (b, T) = m1, m2
        if a + b > max(ts) or set(S) & set(T):
            return None
        sign, seq = _sorted_sign(S + T)
        return sign, (a + b, seq)

    circ = []
    for i, m1 in enumerate(mons):
        for j, m2 in enumerate(mons):
            r = mono_mul(m1, m2)
            if r:
                circ.append((i, j, idx[r[1]], r[0]))
    base = SuperAlgebra("tmp", QQ, n, parity, circ, ())

    gen_images = {"t": {idx[(1, ())]: 1} if with_t else {}, 1: {idx[(0, (1,))]: 1}, 2: {}}
    if with_t:
        gen_images[1][idx[(1, (2,))]] = 1

    def vec(d):
        v = [0] * n
        for k, c in d.items():
            v[k] += c
        return base.vector(v)

    def d_of(m):
        # Leibniz over the factors t^a, x_s1, x_s2, ... (d is even: no signs)
        a, S = m
        factors = (["t"] if a else []) + list(S)
        total = base.zero()
        for pos, g in enumerate(factors):
            term = base.basis_vector(idx[(0, ())])
            for q, h in enumerate(factors):
                if q == pos:
                    piece = vec(gen_images[g])
                else:
                    piece = base.basis_vector(idx[(1, ())] if h == "t" else idx[(0, (h,))])
                term = base.circ_mul(term, piece)
            total = tuple(x + y for x, y in zip(total, term))
        return total

    D = [d_of(m) for m in mons]
    bracket = []
    for i in range(n):
        for j in range(n):
            u = base.circ_mul(D[i], base.basis_vector(j))
            w = base.circ_mul(base.basis_vector(i), D[j])
            for k in range(n):
                if u[k] - w[k]:
                    bracket.append((i, j, k, u[k] - w[k]))
    return SuperAlgebra(f"grassmann_derivation_q{'_t' if with_t else ''}", QQ, n, parity, circ, bracket)


def radical_demo_q() -> SuperAlgebra:
    """sl2(Q) with zero circ, direct sum with solvable3_q."""
    return direct_sum(sl2("Q"), solvable3_q(), name="radical_demo_q")


def zero(dim=2, field="Q") -> SuperAlgebra:
    f = _field(field)
    return SuperAlgebra(f"zero{dim}_{f}", f, int(dim))


def unital1_q() -> SuperAlgebra:
    """The field itself: e o e = e, zero bracket."""
    return SuperAlgebra("unital1_q", QQ, 1, None, [(0, 0, 0, 1)], ())


def dual_numbers_q() -> SuperAlgebra:
    """Q[t]/(t^2) with zero bracket: a Poisson algebra."""
    circ = _sym([(0, 0, 0, 1), (0, 1, 1, 1)])
    return SuperAlgebra("dual_numbers_q", QQ, 2, None, circ, ())


def abelian_sl2_circ_gf3() -> SuperAlgebra:
    """Abelian bracket with the nilpotent circ e1 o e1 = e2 over GF(3)."""
    return SuperAlgebra("abelian_nil3_gf3", FieldSpec.gf(3), 3, None, [(0, 0, 1, 1)], ())


@dataclass
class Claim:
    """A machine-checkable property of a catalog entry.

    ``when`` restricts the claim to builder parameters with those values.
    """

    name: str
    value: object
    validator: str  # operation that establishes it
    provenance: str  # "PAPER" | "DERIVED" | "TRIVIAL"
    note: str = ""
    when: dict = dc_field(default_factory=dict)

    def applies(self, params) -> bool:
        return all(params.get(k) == v for k, v in self.when.items())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "validator": self.validator,
            "provenance": self.provenance,
            "note": self.note,
            "when": self.when,
        }


@dataclass
class CatalogEntry:
    key: str
    builder: object
    params: dict = dc_field(default_factory=dict)
    description: str = ""
    claims: list = dc_field(default_factory=list)


_TP_PAIRS = [{"alpha": a, "beta": b} for a in range(3) for b in range(3)]


def _entries():
    E = CatalogEntry
    C = Claim
    q = {"field": "Q"}
    p10 = {"alpha": 1, "beta": 0}
    tp_pairs = [
        C("is_tp", a * b == 0, "identities.check_tp_axioms", "PAPER", "exactly when alpha*beta = 0", w)
        for w in _TP_PAIRS
        for a, b in [(w["alpha"], w["beta"])]
    ]
    return {
        "sl2": E(
            "sl2",
            sl2,
            {"field": "Q"},
            "sl2 with zero circ; field Q or GF<p>",
            [
                C("validates", True, "algebra.validate", "PAPER"),
                C("is_tp", True, "identities.check_tp_axioms", "TRIVIAL", "zero circ"),
                C("bracket_simple", True, "structure.is_simple", "TRIVIAL"),
                C("halfder_bracket_dim", 1, "halfderiv.half_derivations", "PAPER",
                  "over Q every half-derivation is scalar", q),
                C("halfder_bracket_dim", 5, "halfderiv.half_derivations", "DERIVED",
                  "the printed 3-parameter family is a proper subspace", {"field": "GF3"}),
                C("radical_dim", 0, "structure.series", "TRIVIAL", "", q),
            ],
        ),
        "tp_sl2_gf3": E(
            "tp_sl2_gf3",
            tp_sl2_gf3,
            {"alpha": 1, "beta": 0},
            "P^{alpha,beta}: sl2 over GF(3) with e1 o e1 = alpha e2, e2 o e2 = beta e1",
            [
                C("validates", True, "algebra.validate", "PAPER"),
                *tp_pairs,
                C("tp_simple", True, "structure.is_simple", "PAPER", "", p10),
                C("bracket_simple", True, "structure.is_simple", "PAPER"),
                C("circ_powers_dims", [3, 1, 0], "structure.series", "DERIVED", "", p10),
                C("perfect_bracket", True, "structure.series", "TRIVIAL"),
                C("quasi_ideal_e2", True, "structure.is_quasi_ideal", "PAPER", "span{e2}", p10),
                C("kantor_jordan", True, "identities.check", "PAPER", "", p10),
                C("kantor_e3_annihilated", True, "structure.annihilator", "PAPER", "e3 J = J e3 = 0", p10),
                C("kantor_annihilator_dim", 2, "structure.annihilator", "DERIVED",
                  "span{e2, e3}: e2 o P = 0 as well when beta = 0", p10),
                C("kantor_simple", False, "structure.is_simple", "PAPER", "", p10),
                C("kantor_obstruction_dim", 4, "kantor.double_simplicity_obstruction", "DERIVED",
                  "P + (span{e2})^s", p10),
            ],
        ),
        "solvable3_q": E(
            "solvable3_q",
            solvable3_q,
            {},
            "non-nilpotent solvable Lie algebra with a unital circ",
            [
                C("validates", True, "algebra.validate", "PAPER"),
                C("is_tp", True, "identities.check_tp_axioms", "PAPER"),
                C("derived_series_dims", [3, 2, 0], "structure.series", "DERIVED"),
                C("unit", ["0", "0", "1"], "structure.series", "PAPER", "e3 is the unit"),
                C("nilpotent_bracket", False, "structure.series", "PAPER"),
                C("nilpotent_circ", False, "structure.series", "DERIVED"),
                C("perfect_circ", True, "structure.series", "DERIVED"),
                C("tp_simple", False, "structure.is_simple", "DERIVED"),
            ],
        ),
        "nonlie_remark_q": E(
            "nonlie_remark_q",
            nonlie_remark_q,
            {},
            "e3 o e3 = e1, {e1,e3} = e1+e2; its Lie double is not Lie",
            [
                C("validates", True, "algebra.validate", "PAPER"),
                C("is_tp", True, "identities.check_tp_axioms", "DERIVED"),
                C("lie_double_jacobi_defect_at_e3s", ["0", "0", "0", "-3", "-3", "0"], "identities.defect",
                  "PAPER", "-3(e1+e2)^s at (e3^s, e3^s, e3^s)"),
            ],
        ),
        "grassmann1_q": E(
            "grassmann1_q",
            grassmann1_q,
            {},
            "Grassmann superalgebra on one odd generator, zero bracket",
            [
                C("validates", True, "algebra.validate", "TRIVIAL"),
                C("is_tp", True, "identities.check_tp_axioms", "TRIVIAL"),
            ],
        ),
        "grassmann_derivation_q": E(
            "grassmann_derivation_q",
            grassmann_derivation_q,
            {"with_t": 0},
            "Lambda(x1,x2) (optionally with t, t^2=0), bracket d(a)b - a d(b) for an even derivation d",
            [
                C("validates", True, "algebra.validate", "DERIVED"),
                C("is_tp", True, "identities.check_tp_axioms", "DERIVED"),
                C("derived_identities", True, "identities.check", "DERIVED", "PROPEQ1-6 with super signs"),
                C("operator_relations", True, "identities.check", "DERIVED", "REL_PQ1-4, REL2_1-6"),
                C("kantor_jordan", True, "identities.check", "DERIVED"),
            ],
        ),
        "radical_demo_q": E(
            "radical_demo_q",
            radical_demo_q,
            {},
            "sl2(Q, zero circ) + solvable3_q",
            [
                C("validates", True, "algebra.validate", "DERIVED"),
                C("is_tp", True, "identities.check_tp_axioms", "DERIVED"),
                C("radical_dim", 3, "structure.series", "DERIVED"),
                C("radical_derived_dims", [3, 2, 0], "structure.series", "DERIVED"),
                C("circ_square_in_radical", True, "structure.series", "PAPER"),
            ],
        ),
        "zero": E(
            "zero",
            zero,
            {"dim": 2, "field": "Q"},
            "both products zero",
            [
                C("validates", True, "algebra.validate", "TRIVIAL"),
                C("is_tp", True, "identities.check_tp_axioms", "TRIVIAL"),
                C("annihilator_dim", 2, "structure.annihilator", "TRIVIAL", "", {"dim": 2}),
            ],
        ),
        "unital1_q": E(
            "unital1_q",
            unital1_q,
            {},
            "one-dimensional unital circ, zero bracket",
            [
                C("validates", True, "algebra.validate", "TRIVIAL"),
                C("is_tp", True, "identities.check_tp_axioms", "TRIVIAL"),
                C("unit", ["1"], "structure.series", "TRIVIAL"),
            ],
        ),
        "dual_numbers_q": E(
            "dual_numbers_q",
            dual_numbers_q,
            {},
            "Q[t]/(t^2), zero bracket (Poisson)",
            [
                C("validates", True, "algebra.validate", "TRIVIAL"),
                C("is_tp", True, "identities.check_tp_axioms", "TRIVIAL"),
                C("lie_double_is_lie", True, "identities.check", "DERIVED"),
            ],
        ),
        "abelian_nil3_gf3": E(
            "abelian_nil3_gf3",
            abelian_sl2_circ_gf3,
            {},
            "abelian bracket, e1 o e1 = e2 over GF(3)",
            [
                C("validates", True, "algebra.validate", "TRIVIAL"),
                C("is_tp", True, "identities.check_tp_axioms", "TRIVIAL"),
            ],
        ),
    }


CATALOG = _entries()


def keys() -> list:
    return sorted(CATALOG)


def entry(key) -> CatalogEntry:
    try:
        return CATALOG[key]
    except KeyError:
        raise CatalogError(f"unknown catalog key {key!r}; known: {', '.join(keys())}") from None


def _merged(key, params):
    e = entry(key)
    unknown = set(params) - set(e.params)
    if unknown:
        raise CatalogError(f"{key} takes parameters {sorted(e.params)}, got {sorted(unknown)}")
    return e, {**e.params, **params}


def get(key, **params) -> SuperAlgebra:
    e, merged = _merged(key, params)
    return e.builder(**merged)


def expected(key, **params) -> list:
    """Claims that apply to ``key`` with these parameters."""
    e, merged = _merged(key, params)
    get(key, **params)  # parameter check
    norm = {k: (str(v).replace("(", "").replace(")", "").upper() if k == "field" else v) for k, v in merged.items()}
    return [c for c in e.claims if c.applies(norm)]


# -- claim evaluation --------------------------------------------------------------


def _evaluate(name, A):
    # imported here: these modules are heavier and only needed for verification
    from . import halfderiv, identities, kantor, structure

    if name == "validates":
        return validate(A).ok
    if name == "is_tp":
        return identities.is_tp(A)
    if name == "derived_identities":
        return all(r.passed for r in identities.check_derived_identities(A))
    if name == "operator_relations":
        return all(r.passed for r in identities.check_operator_relations(A))
    if name.endswith("_simple") and not name.startswith("kantor"):
        which = name[: -len("_simple")].upper()
        return structure.is_simple(A, which).verdict == structure.SIMPLE
    if name == "halfder_bracket_dim":
        return half_dim(A)
    if name in ("circ_powers_dims", "derived_series_dims"):
        return [s.dim for s in getattr(structure, name[: -len("_dims")])(A)]
    if name in ("nilpotent_bracket", "nilpotent_circ", "perfect_circ", "perfect_bracket"):
        return getattr(structure.series(A), name)
    if name == "unit":
        u = structure.unit(A)
        return None if u is None else [A.field.fmt(x) for x in u]
    if name == "radical_dim":
        return structure.radical(A).dim
    if name == "radical_derived_dims":
        return [s.dim for s in structure.derived_series(A, structure.radical(A))]
    if name == "circ_square_in_radical":
        full = structure.full_space(A)
        return structure.radical(A).contains_subspace(structure.product_space(A, Product.CIRC, full, full))
    if name == "annihilator_dim":
        return structure.annihilator(A).dim
    if name == "quasi_ideal_e2":
        return structure.is_quasi_ideal(A, [A.basis_vector(1)])
    if name.startswith("kantor_"):
        J = kantor.kantor_double(A)
        if name == "kantor_jordan":
            return identities.check(J, identities.Identity.JORDAN_SUPER).passed
        if name == "kantor_e3_annihilated":
            return structure.annihilator(J).contains(J.basis_vector(2))
        if name == "kantor_annihilator_dim":
            return structure.annihilator(J).dim
        if name == "kantor_simple":
            return structure.is_simple(J, "CIRC").verdict == structure.SIMPLE
        if name == "kantor_obstruction_dim":
            ob = kantor.double_simplicity_obstruction(A, J)
            return None if ob is None else ob.dim
    if name == "lie_double_jacobi_defect_at_e3s":
        L = kantor.lie_double(A)
        d = identities.defect(L, identities.Identity.JACOBI_SUPER, (5, 5, 5))
        return [A.field.fmt(x) for x in d]
    if name == "lie_double_is_lie":
        return identities.check(kantor.lie_double(A), identities.Identity.JACOBI_SUPER).passed
    raise CatalogError(f"no evaluator for claim {name!r}")


def half_dim(A):
    from . import halfderiv

    return halfderiv.half_derivations(A, Product.BRACKET, 0).dim


def verify(key, **params) -> list:
    """Evaluate every applicable claim: list of (claim, actual value, ok)."""
    A = get(key, **params)
    out = []
    for c in expected(key, **params):
        actual = _evaluate(c.name, A)
        out.append((c, actual, actual == c.value))
    return out
