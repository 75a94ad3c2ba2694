"""Command-line front end.  Every command prints one JSON document (sorted
keys) to stdout; diagnostics go to stderr.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import catalog, halfderiv, identities, kantor, structure, witt
from .algebra import AlgebraError, dumps, load, save
from .exactmath import FieldError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(doc, out=None):
    text = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    (out or sys.stdout).write(text)


def _identity_list(text):
    if text.strip().lower() == "all":
        return list(identities.Identity)
    return [identities.Identity.parse(t) for t in text.split(",") if t.strip()]


def _tuple(text):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad index tuple {text!r}") from None


def _window(text):
    m = re.fullmatch(r"\s*(-?\d+)\.\.(-?\d+)\s*", text)
    if not m:
        raise UsageError(f"bad window {text!r}; expected lo..hi")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError(f"empty window {text!r}")
    return lo, hi


def _params(pairs):
    out = {}
    for p in pairs or ():
        key, sep, val = p.partition("=")
        if not sep:
            raise UsageError(f"bad parameter {p!r}; expected name=value")
        out[key] = int(val) if re.fullmatch(r"-?\d+", val) else val
    return out


# -- commands --------------------------------------------------------------------


def cmd_check(args):
    A = load(args.file)
    ids = _identity_list(args.identities)
    reports = identities.check_many(A, ids)
    doc = {"algebra": A.name, "reports": [r.to_json(A.field) for r in reports]}
    if args.at:
        tup = _tuple(args.at)
        doc["defects_at"] = {
            i.value: _defect_json(A, identities.defect(A, i, tup))
            for i in ids
            if identities.arity(i) == len(tup)
        }
        doc["at"] = list(tup)
    _emit(doc)
    return 0 if all(r.passed for r in reports) else 1


def _defect_json(A, d):
    if hasattr(d, "to_strings"):
        return {"matrix": d.to_strings()}
    return {"coords": [A.field.fmt(x) for x in d]}


def cmd_halfder(args):
    A = load(args.file)
    space = halfderiv.half_derivations(A, args.product, args.parity)
    _emit(space.to_json())
    return 0


def cmd_double(args):
    A = load(args.file)
    D = kantor.kantor_double(A) if args.kind == "kantor" else kantor.lie_double(A)
    if args.output:
        save(D, args.output)
        _emit({"algebra": D.name, "dim": D.dim, "written": str(args.output)})
    else:
        sys.stdout.write(dumps(D))
    return 0


def cmd_simple(args):
    A = load(args.file)
    res = structure.is_simple(A, args.which, args.strategy, bound=args.bound, seed=args.seed)
    doc = res.to_json()
    doc["algebra"] = A.name
    _emit(doc)
    return 0 if res.verdict == structure.SIMPLE else 1


def cmd_structure(args):
    A = load(args.file)
    summary = structure.series(A)
    doc = summary.to_json(A.field)
    doc["algebra"] = A.name
    doc["annihilator"] = structure.annihilator(A).to_strings()
    _emit(doc)
    return 0


def cmd_catalog(args):
    if args.action == "list":
        _emit({"keys": [
            {"key": k, "params": catalog.entry(k).params, "description": catalog.entry(k).description}
            for k in catalog.keys()
        ]})
        return 0
    if not args.key:
        raise UsageError(f"catalog {args.action} needs a key")
    params = _params(args.param)
    A = catalog.get(args.key, **params)
    if args.action == "show":
        doc = A.to_json()
        doc["claims"] = [c.to_json() for c in catalog.expected(args.key, **params)]
        _emit(doc)
        return 0
    if args.output:
        save(A, args.output)
        _emit({"algebra": A.name, "written": str(args.output)})
    else:
        sys.stdout.write(dumps(A))
    return 0


def cmd_witt(args):
    try:
        q = witt.parse_element(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    spec = witt.ZAlgebraSpec(q)
    window = _window(args.window)
    ids = witt.WINDOW_IDENTITIES if args.identities == "all" else _identity_list(args.identities)
    reports = [witt.window_check(spec, i, window) for i in ids]
    inv = witt.laurent_invertible(q)
    unit = witt.window_unit(spec, window)
    doc = {
        "q": q.to_strings(),
        "window": list(window),
        "reports": [r.to_json() for r in reports],
        "invertible": inv is not None,
        "inverse": None if inv is None else inv.to_strings(),
        "window_unit": None if unit is None else unit.to_strings(),
    }
    _emit(doc)
    return 0 if all(r.passed for r in reports) else 1


def build_parser():
    p = _Parser(prog="tpalg", description="Exact checks for transposed Poisson (super)algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check identities on an algebra file")
    c.add_argument("file")
    c.add_argument("--identities", default="ASSOC_CIRC,JACOBI_SUPER,TP_LEIBNIZ_SUPER")
    c.add_argument("--at", help="also report the defect at this basis tuple, e.g. 5,5,5")
    c.set_defaults(fn=cmd_check)

    h = sub.add_parser("halfder", help="half-derivation space")
    h.add_argument("file")
    h.add_argument("--product", choices=["circ", "bracket"], default="bracket")
    h.add_argument("--parity", type=int, choices=[0, 1], default=0)
    h.set_defaults(fn=cmd_halfder)

    d = sub.add_parser("double", help="Kantor or Lie double")
    d.add_argument("file")
    d.add_argument("--kind", choices=["kantor", "lie"], default="kantor")
    d.add_argument("-o", "--output", type=Path)
    d.set_defaults(fn=cmd_double)

    s = sub.add_parser("simple", help="simplicity test")
    s.add_argument("file")
    s.add_argument("--which", choices=["tp", "circ", "bracket"], default="tp")
    s.add_argument("--strategy", choices=["exhaustive", "meataxe", "auto"], default="auto")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=structure.DEFAULT_BOUND)
    s.set_defaults(fn=cmd_simple)

    t = sub.add_parser("structure", help="series, centers, radical, unit")
    t.add_argument("file")
    t.set_defaults(fn=cmd_structure)

    k = sub.add_parser("catalog", help="built-in algebras")
    k.add_argument("action", choices=["list", "show", "export"])
    k.add_argument("key", nargs="?")
    k.add_argument("--param", action="append", metavar="NAME=VALUE")
    k.add_argument("-o", "--output", type=Path)
    k.set_defaults(fn=cmd_catalog)

    w = sub.add_parser("witt", help="window checks on Witt mutations")
    w.add_argument("--q", default="0:1")
    w.add_argument("--window", default="-3..3")
    w.add_argument("--identities", default="all")
    w.set_defaults(fn=cmd_witt)
    return p


def _fix_negative_values(argv):
    # "--window -3..3" would otherwise be read as an option
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--window", "--q"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_fix_negative_values(argv))
        return args.fn(args)
    except UsageError as exc:
        print(f"tpalg: error: {exc}", file=sys.stderr)
    except FileNotFoundError as exc:
        print(f"tpalg: error: no such file: {exc.filename}", file=sys.stderr)
    except (AlgebraError, FieldError, catalog.CatalogError, ValueError, OSError) as exc:
        print(f"tpalg: error: {exc}".replace("\n", " "), file=sys.stderr)
    return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
