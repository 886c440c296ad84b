"""Batch command-line interface.

Exit codes: 0 success (or affirmative verdict), 1 negative verdict
(isomorphic: no; catalog verify: failures), 2 usage or precondition errors,
3 internal inconsistency.  Stdout carries a JSON document on exit codes 0
and 1 (except ``catalog list --csv``, which emits CSV by request);
diagnostics go to stderr.  Identical argv produces byte-identical stdout.

The catalog subcommands read the embedded dataset unless the SEA_CATALOG
environment variable points at an alternative JSONL file.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat_mod
from .catalog import (
    CatalogIntegrityError,
    export_csv,
    inclusions,
    load_catalog,
    specialize,
    verify_all,
)
from .catalog.templates import TemplateError, parse_poly_string
from .forms import BinaryForm, UnivariatePoly, homogenize
from .invariants import (
    InconclusiveError,
    OrderBookkeepingError,
    decimic_invariants,
    general_absolute,
    general_invariants,
    genus2_isomorphic,
    genus3_isomorphic,
    genus10_special,
    octavic_absolute,
    octavic_invariants,
    sextic_absolute,
    sextic_invariants,
)
from .scalars import Scalar, parse_scalar
from .transvection import transvect

__all__ = ["main"]


class _UsageError(ValueError):
    pass


def _parse_form(text: str) -> BinaryForm:
    """Ascending coefficient CSV, or a poly-string homogenized at its degree."""
    text = text.strip()
    if "x" in text:
        poly = parse_poly_string(text)
        if poly.is_zero:
            raise _UsageError("zero polynomial has no degree to homogenize at")
        return homogenize(poly, poly.degree)
    coeffs = [parse_scalar(tok) for tok in text.split(",")]
    return BinaryForm(len(coeffs) - 1, coeffs)


def _parse_poly(text: str) -> UnivariatePoly:
    text = text.strip()
    if "x" in text:
        return parse_poly_string(text)
    return UnivariatePoly([parse_scalar(tok) for tok in text.split(",")])


def _parse_params(text: str) -> dict[str, Scalar]:
    params = {}
    text = text.strip()
    if not text:
        return params
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        if not sep:
            raise _UsageError(f"bad parameter assignment {piece!r}, expected name=value")
        params[name.strip()] = parse_scalar(value)
    return params


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _invariants_doc(kind: str, form: BinaryForm) -> dict:
    if kind == "sextic":
        vec = sextic_invariants(form)
        absolute = sextic_absolute(vec)
    elif kind == "octavic":
        vec = octavic_invariants(form)
        absolute = octavic_absolute(vec)
    elif kind == "decimic":
        vec = decimic_invariants(form)
        absolute = None
    elif kind == "general":
        vec = general_invariants(form)
        absolute = general_absolute(vec)
    elif kind == "genus10":
        result = genus10_special(form)
        vec = result.invariants
        absolute = result.absolute
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown kind {kind}")

    availability = {name: True for name in vec.names()}
    for name in sorted(vec.unavailable):
        availability[name] = False
    abs_doc = {}
    if absolute is not None:
        for name in absolute.names:
            if absolute.defined(name):
                abs_doc[name] = str(absolute[name])
            elif name in absolute.undefined:
                abs_doc[name] = "undefined"
            else:
                availability[name] = False
    return {
        "kind": kind,
        "invariants": {name: str(value) for name, value in vec.items()},
        "absolute": abs_doc,
        "availability": availability,
    }


def _cmd_transvect(args) -> int:
    f = _parse_form(args.f)
    g = _parse_form(args.g)
    _emit(transvect(f, g, args.r).to_json())
    return 0


def _cmd_invariants(args) -> int:
    form = _parse_form(args.coeffs)
    _emit(_invariants_doc(args.kind, form))
    return 0


def _cmd_genus(args) -> int:
    from .curves import make_curve

    curve = make_curve(args.n, _parse_poly(args.poly))
    _emit({"genus": curve.genus})
    return 0


def _cmd_isomorphic(args) -> int:
    f1 = _parse_form(args.f1)
    f2 = _parse_form(args.f2)
    oracle = genus2_isomorphic if args.genus == 2 else genus3_isomorphic
    verdict = oracle(f1, f2)
    _emit({"isomorphic": verdict})
    return 0 if verdict else 1


def _cmd_catalog_list(args) -> int:
    catalog = load_catalog()
    records = catalog.query(genus=args.genus, reduced_group=args.group)
    if args.csv:
        sub = cat_mod.Catalog(records)
        sys.stdout.write(export_csv(sub))
    else:
        _emit([r.to_json() for r in records])
    return 0


def _cmd_catalog_verify(args) -> int:
    catalog = load_catalog()
    report = verify_all(catalog, genus=args.genus)
    _emit(report.summary())
    return 0 if report.ok else 1


def _cmd_catalog_specialize(args) -> int:
    catalog = load_catalog()
    record = catalog[args.id]
    curve = specialize(record, _parse_params(args.params))
    _emit(curve.to_json())
    return 0


def _cmd_catalog_inclusions(args) -> int:
    catalog = load_catalog()
    edges = inclusions(catalog, args.genus)
    _emit({"genus": args.genus, "edges": [list(e) for e in edges]})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seacurves",
        description="Exact invariants of binary forms and the superelliptic "
                    "family catalog (genus 5-10).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transvect", help="r-transvection of two binary forms")
    p.add_argument("--f", required=True, help="form: ascending coeff CSV or poly-string")
    p.add_argument("--g", required=True, help="form: ascending coeff CSV or poly-string")
    p.add_argument("-r", type=int, required=True, help="transvection order")
    p.set_defaults(func=_cmd_transvect)

    p = sub.add_parser("invariants", help="invariant system of a binary form")
    p.add_argument("--kind", required=True,
                   choices=("sextic", "octavic", "decimic", "general", "genus10"))
    p.add_argument("--coeffs", required=True,
                   help="form: ascending coeff CSV or poly-string")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("genus", help="genus of the superelliptic curve y^n = f(x)")
    p.add_argument("-n", type=int, required=True, help="level (exponent of y)")
    p.add_argument("--poly", required=True, help="f(x): poly-string or coeff CSV")
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("isomorphic",
                       help="absolute-invariant isomorphism test (genus 2 or 3)")
    p.add_argument("--genus", type=int, required=True, choices=(2, 3))
    p.add_argument("--f1", required=True)
    p.add_argument("--f2", required=True)
    p.set_defaults(func=_cmd_isomorphic)

    pc = sub.add_parser("catalog", help="query and verify the family table")
    csub = pc.add_subparsers(dest="subcommand", required=True)

    p = csub.add_parser("list", help="list rows")
    p.add_argument("--genus", type=int)
    p.add_argument("--group", help="reduced group filter, e.g. A5 or D_4")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--csv", action="store_true", default=False)
    p.set_defaults(func=_cmd_catalog_list)

    p = csub.add_parser("verify", help="run the per-row consistency checks")
    p.add_argument("--genus", type=int)
    p.set_defaults(func=_cmd_catalog_verify)

    p = csub.add_parser("specialize", help="instantiate a row at parameter values")
    p.add_argument("--id", required=True)
    p.add_argument("--params", default="", help='assignments like "a1=2,a2=-1/3"')
    p.set_defaults(func=_cmd_catalog_specialize)

    p = csub.add_parser("inclusions", help="syntactic specialization DAG for one genus")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=_cmd_catalog_inclusions)

    return parser


_VALUE_FLAGS = {"--f", "--g", "--f1", "--f2", "--coeffs", "--poly", "--params"}


def _join_value_flags(argv: list[str]) -> list[str]:
    # argparse mistakes values like "-1,0,...,1" for flags; fold them into
    # --flag=value form so coefficient CSVs may start with a minus sign.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(_join_value_flags(list(argv)))
    try:
        return args.func(args)
    except (OrderBookkeepingError, CatalogIntegrityError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError, TemplateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
