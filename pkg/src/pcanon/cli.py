"""Command-line surface: parse matrices and polynomials, dispatch the
library, render exact and closed-form output.

Input documents are JSON.  A matrix document is either a bare array of
rows or an object ``{"field": "Q"|"Fp"|"C", "p": <prime>, "matrix":
[[...]]}``; a polynomial document is a bare ascending coefficient array
(constant term first) or ``{"field": ..., "poly": [...]}``.  Rational
entries are integers or "num/den" strings, F_p entries are integers
reduced mod p on ingest, complex entries are numbers or ``{"re": ...,
"im": ...}`` objects.  A positional INPUT is read from standard input
when it is ``-``, parsed inline when it starts with ``[`` or ``{``, and
treated as a file path otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import NonSplitField, ParseError, PcanonError
from .kronmin import eig_spec_of_matrix, kron_minpoly_symbolic, lrs_product_poly
from .linalg import Matrix
from .lrs import LinRecSeq, lrs_eval, lrs_prefix
from .matfun import ClosedFormExp, LogBranchSpec, expm_closed, logm
from .pcf import Basis, PCanonicalForm, pcf_build, pcf_eval, pcf_to_gamma
from .scalar import CC, GF, QQ, Field, Poly, PrimeField
from .wedge import WedgeContext, wedge_fold

# ---------------------------------------------------------------------------
# input documents


def _read_source(token: str) -> str:
    if token == "-":
        return sys.stdin.read()
    if token.lstrip()[:1] in ("[", "{"):
        return token
    try:
        with open(token, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read input file {token!r}: {exc}") from None


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def _resolve_field(doc: dict, args) -> Field:
    name = doc.get("field", getattr(args, "field", None))
    p = doc.get("p", getattr(args, "p", None))
    char = getattr(args, "char", None)
    if name is None and char is not None:
        if char == 0:
            return QQ
        return GF(char)
    if name is None:
        return QQ
    if name == "Q":
        return QQ
    if name == "C":
        return CC
    if name == "Fp":
        if p is None:
            raise ParseError('field "Fp" needs a prime "p"')
        if not isinstance(p, int):
            raise ParseError(f'"p" must be an integer, got {p!r}')
        return GF(p)
    raise ParseError(f'unknown field {name!r}; expected "Q", "Fp" or "C"')


def _parse_entry(field: Field, v):
    if field == QQ:
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise ParseError(
                f"rational entries are integers or 'num/den' strings, got {v!r}")
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {v!r}: {exc}") from None
    if isinstance(field, PrimeField):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"F_p entries are integers, got {v!r}")
        return field.from_int(v)
    # complex
    if isinstance(v, bool):
        raise ParseError(f"bad complex entry {v!r}")
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, dict) and set(v) <= {"re", "im"}:
        re, im = v.get("re", 0), v.get("im", 0)
        if all(isinstance(x, (int, float)) and not isinstance(x, bool)
               for x in (re, im)):
            return complex(re, im)
    raise ParseError(
        f'complex entries are numbers or {{"re": ..., "im": ...}}, got {v!r}')


def _as_document(data, payload_key: str) -> dict:
    if isinstance(data, list):
        return {payload_key: data}
    if isinstance(data, dict):
        return data
    raise ParseError(f"expected an array or object document, got {data!r}")


def parse_matrix(token: str, args) -> Matrix:
    doc = _as_document(_load_json(_read_source(token)), "matrix")
    field = _resolve_field(doc, args)
    rows = doc.get("matrix")
    if (not isinstance(rows, list) or not rows
            or not all(isinstance(r, list) for r in rows)):
        raise ParseError('matrix document needs a non-empty "matrix" array of rows')
    parsed = [[_parse_entry(field, v) for v in row] for row in rows]
    try:
        return Matrix(field, parsed)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_poly(token: str, args) -> Poly:
    doc = _as_document(_load_json(_read_source(token)), "poly")
    field = _resolve_field(doc, args)
    coeffs = doc.get("poly")
    if not isinstance(coeffs, list):
        raise ParseError('polynomial document needs a "poly" coefficient array '
                         "(ascending, constant term first)")
    return Poly(field, [_parse_entry(field, v) for v in coeffs])


def parse_sequence(token: str, args) -> LinRecSeq:
    doc = _as_document(_load_json(_read_source(token)), "poly")
    field = _resolve_field(doc, args)
    coeffs = doc.get("poly")
    initials = doc.get("initials")
    if not isinstance(coeffs, list) or not isinstance(initials, list):
        raise ParseError('sequence document needs "poly" (ascending monic '
                         'coefficients) and "initials" arrays')
    char = Poly(field, [_parse_entry(field, v) for v in coeffs])
    try:
        return LinRecSeq(char, tuple(_parse_entry(field, v) for v in initials))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# rendering


def _field_doc(field: Field) -> dict:
    if field == QQ:
        return {"field": "Q"}
    if isinstance(field, PrimeField):
        return {"field": "Fp", "p": field.p}
    return {"field": "C"}


def _entry_json(field: Field, x):
    if field == QQ:
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(field, PrimeField):
        return x.res
    return {"re": x.real, "im": x.imag}


def _rows_json(m: Matrix) -> list:
    return [[_entry_json(m.field, e) for e in row] for row in m.rows]


def _matrix_doc(m: Matrix) -> dict:
    return {"type": "matrix", **_field_doc(m.field), "matrix": _rows_json(m)}


def _poly_doc(p: Poly) -> dict:
    return {"type": "poly", **_field_doc(p.field),
            "poly": [_entry_json(p.field, c) for c in p.coeffs]}


_BASIS_NAME = {Basis.LAMBDA: "lambda", Basis.GAMMA: "gamma"}


def _pcf_doc(f: PCanonicalForm) -> dict:
    return {
        "type": "pcf",
        **_field_doc(f.field),
        "order": f.order,
        "basis": _BASIS_NAME[f.basis],
        "nilpotent": [{"i": i, "matrix": _rows_json(v)}
                      for i, v in f.nilpotent_terms],
        "geometric": [{"value": _entry_json(f.field, lam),
                       "coeffs": [_rows_json(c) for c in coeffs]}
                      for lam, coeffs in f.geometric_terms],
    }


def _cfe_doc(e: ClosedFormExp) -> dict:
    return {
        "type": "closed_form_exp",
        "order": e.order,
        "polynomial": [{"i": i, "matrix": _rows_json(m)}
                       for i, m in e.polynomial_part],
        "exponential": [{"value": {"re": lam.real, "im": lam.imag},
                         "coeffs": [{"i": i, "matrix": _rows_json(m)}
                                    for i, m in coeffs]}
                        for lam, coeffs in e.exponential_terms],
    }


def _scalar_factor(field: Field, x) -> str:
    s = field.format(x)
    return s if s.replace(".", "", 1).isdigit() else f"({s})"


def _term_header(field: Field, lam, i: int, basis: Basis) -> str:
    base = f"{_scalar_factor(field, lam)}^k"
    if i == 0:
        return base
    poly = f"C(k,{i})" if basis is Basis.LAMBDA else (f"k^{i}" if i > 1 else "k")
    return f"{base} * {poly}"


def _pcf_pretty(f: PCanonicalForm) -> str:
    head = (f"P-canonical form: order {f.order}, field {f.field}, "
            f"basis {_BASIS_NAME[f.basis]}")
    lines = [head]
    for i, v in f.nilpotent_terms:
        lines += [f"term delta(k - {i}):", v.format()]
    for lam, coeffs in f.geometric_terms:
        for i, c in enumerate(coeffs):
            if c.is_zero:
                continue
            lines += [f"term {_term_header(f.field, lam, i, f.basis)}:", c.format()]
    return "\n".join(lines)


def _exp_header(lam: complex, i: int) -> str:
    from .scalar import format_complex

    tpow = "" if i == 0 else (" * t" if i == 1 else f" * t^{i}")
    if lam == 0:
        return ("1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
    return f"e^(({format_complex(lam)})t){tpow}"


def _cfe_pretty(e: ClosedFormExp) -> str:
    lines = [f"closed-form exponential: order {e.order}"]
    for i, m in e.polynomial_part:
        lines += [f"term {_exp_header(0, i)}:", m.format()]
    for lam, coeffs in e.exponential_terms:
        for i, m in coeffs:
            lines += [f"term {_exp_header(lam, i)}:", m.format()]
    return "\n".join(lines)


def render_closed_form(obj, mode: str = "pretty") -> str:
    """Render a P-canonical form or closed-form exponential as text.

    ``json`` mode is lossless: `parse_closed_form` reproduces the object.
    """
    if isinstance(obj, PCanonicalForm):
        return json.dumps(_pcf_doc(obj)) if mode == "json" else _pcf_pretty(obj)
    if isinstance(obj, ClosedFormExp):
        return json.dumps(_cfe_doc(obj)) if mode == "json" else _cfe_pretty(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")


def _doc_field(doc: dict) -> Field:
    class _NoArgs:
        pass

    return _resolve_field(doc, _NoArgs())


def _matrix_from_rows(field: Field, rows) -> Matrix:
    if not isinstance(rows, list):
        raise ParseError("matrix rows must be an array")
    return Matrix(field, [[_parse_entry(field, v) for v in row] for row in rows])


def parse_closed_form(text: str):
    """Inverse of `render_closed_form`'s JSON mode."""
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("closed-form document must be an object")
    kind = doc.get("type")
    if kind == "pcf":
        field = _doc_field(doc)
        basis = {v: k for k, v in _BASIS_NAME.items()}.get(doc.get("basis"))
        if basis is None:
            raise ParseError(f"unknown basis {doc.get('basis')!r}")
        nil = tuple((t["i"], _matrix_from_rows(field, t["matrix"]))
                    for t in doc.get("nilpotent", ()))
        geo = tuple((_parse_entry(field, t["value"]),
                     tuple(_matrix_from_rows(field, c) for c in t["coeffs"]))
                    for t in doc.get("geometric", ()))
        return PCanonicalForm(field, doc["order"], basis, nil, geo)
    if kind == "closed_form_exp":
        poly = tuple((t["i"], _matrix_from_rows(CC, t["matrix"]))
                     for t in doc.get("polynomial", ()))
        expt = tuple((_parse_entry(CC, t["value"]),
                      tuple((c["i"], _matrix_from_rows(CC, c["matrix"]))
                            for c in t["coeffs"]))
                     for t in doc.get("exponential", ()))
        return ClosedFormExp(doc["order"], poly, expt)
    raise ParseError(f"unknown closed-form type {kind!r}")


# ---------------------------------------------------------------------------
# subcommands


def _emit(args, doc: dict, pretty: str) -> str:
    return json.dumps(doc) if args.json else pretty


def _pcf_of(args, m: Matrix) -> PCanonicalForm:
    try:
        form = pcf_build(m, args.tol)
    except NonSplitField:
        if not (args.numeric and m.field.exact and m.field.char == 0):
            raise
        form = pcf_build(m.to_field(CC), args.tol)
    if getattr(args, "gamma", False):
        form = pcf_to_gamma(form)
    return form


def _cmd_pcf(args) -> str:
    form = _pcf_of(args, parse_matrix(args.input, args))
    return render_closed_form(form, "json" if args.json else "pretty")


def _cmd_power(args) -> str:
    if args.k < 0:
        raise ParseError("the exponent must be a non-negative integer")
    m = pcf_eval(_pcf_of(args, parse_matrix(args.input, args)), args.k)
    return _emit(args, _matrix_doc(m), m.format())


def _cmd_expm(args) -> str:
    form = expm_closed(parse_matrix(args.input, args), args.tol)
    return render_closed_form(form, "json" if args.json else "pretty")


def _branch_spec(args) -> LogBranchSpec:
    if args.branch is None:
        return LogBranchSpec.principal()
    try:
        ks = [int(s) for s in args.branch.split(",") if s.strip() != ""]
    except ValueError:
        raise ParseError(f"--branch wants integers like '0,1,-1', got "
                         f"{args.branch!r}") from None
    if not ks:
        raise ParseError("--branch needs at least one integer")
    return LogBranchSpec.branches(ks)


def _cmd_logm(args) -> str:
    m = logm(parse_matrix(args.input, args), _branch_spec(args), args.tol)
    return _emit(args, _matrix_doc(m), m.format())


def _cmd_kron_minpoly(args) -> str:
    mats = [parse_matrix(tok, args) for tok in args.inputs]
    try:
        specs = [eig_spec_of_matrix(m, args.tol) for m in mats]
        p = kron_minpoly_symbolic(specs)
    except NonSplitField:
        f = mats[0].field
        if not (args.numeric and f.exact and f.char == 0):
            raise
        specs = [eig_spec_of_matrix(m.to_field(CC), args.tol) for m in mats]
        p = kron_minpoly_symbolic(specs)
    return _emit(args, _poly_doc(p), p.format())


def _cmd_lrs_product(args) -> str:
    p = lrs_product_poly([parse_poly(tok, args) for tok in args.inputs])
    return _emit(args, _poly_doc(p), p.format())


def _cmd_lrs_eval(args) -> str:
    seq = parse_sequence(args.input, args)
    f = seq.field
    if args.n < 0:
        raise ParseError("the index must be a non-negative integer")
    if args.prefix:
        values = lrs_prefix(seq, args.n)
        doc = {"type": "values", **_field_doc(f),
               "values": [_entry_json(f, v) for v in values]}
        return _emit(args, doc, "\n".join(f.format(v) for v in values))
    v = lrs_eval(seq, args.n)
    return _emit(args, {"type": "value", **_field_doc(f),
                        "value": _entry_json(f, v)}, f.format(v))


def _cmd_wedge(args) -> str:
    d = wedge_fold(args.orders, WedgeContext(args.char))
    return str(d)


# ---------------------------------------------------------------------------
# argument parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pcanon",
        description="P-canonical forms, Kronecker minimal polynomials, "
                    "recurrence closures, and closed-form matrix exp/log.",
        epilog="INPUT is '-' for standard input, inline JSON when it starts "
               "with '[' or '{', and a file path otherwise.  Polynomial "
               "coefficients are ascending: constant term first.")
    sub = top.add_subparsers(dest="command", required=True)

    field_p = argparse.ArgumentParser(add_help=False)
    field_p.add_argument("--field", choices=("Q", "Fp", "C"),
                         help="entry field when the document names none "
                              "(default Q)")
    field_p.add_argument("--p", type=int, help="prime modulus for --field Fp")
    field_p.add_argument("--char", type=int,
                         help="shorthand: 0 means Q, a prime p means F_p")

    out_p = argparse.ArgumentParser(add_help=False)
    mode = out_p.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true",
                      help="emit the lossless JSON document")
    mode.add_argument("--pretty", action="store_true",
                      help="emit human-readable text (default)")

    tol_p = argparse.ArgumentParser(add_help=False)
    tol_p.add_argument("--tol", type=float, default=1e-8,
                       help="numeric tolerance (default 1e-8)")

    num_p = argparse.ArgumentParser(add_help=False)
    num_p.add_argument("--numeric", action="store_true",
                       help="fall back to complex doubles when the exact "
                            "spectrum does not split over the input field")

    p = sub.add_parser("pcf", parents=[field_p, out_p, tol_p, num_p],
                       help="P-canonical form of a square matrix")
    p.add_argument("input", metavar="INPUT")
    p.add_argument("--gamma", action="store_true",
                   help="convert the binomial basis to powers k^i")
    p.set_defaults(handler=_cmd_pcf)

    p = sub.add_parser("power", parents=[field_p, out_p, tol_p, num_p],
                       help="matrix power A^k through the closed form")
    p.add_argument("input", metavar="INPUT")
    p.add_argument("k", type=int)
    p.add_argument("--gamma", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(handler=_cmd_power)

    p = sub.add_parser("expm", parents=[field_p, out_p, tol_p],
                       help="closed-form matrix exponential e^(tA)")
    p.add_argument("input", metavar="INPUT")
    p.set_defaults(handler=_cmd_expm)

    p = sub.add_parser("logm", parents=[field_p, out_p, tol_p],
                       help="matrix logarithm on a chosen branch")
    p.add_argument("input", metavar="INPUT")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--principal", action="store_true",
                   help="principal branch (default)")
    g.add_argument("--branch", metavar="K1,K2,...",
                   help="per-eigenvalue branch offsets, in the canonical "
                        "eigenvalue order")
    p.set_defaults(handler=_cmd_logm)

    p = sub.add_parser("kron-minpoly", parents=[field_p, out_p, tol_p, num_p],
                       help="minimal polynomial of a Kronecker product")
    p.add_argument("inputs", metavar="INPUT", nargs="+")
    p.set_defaults(handler=_cmd_kron_minpoly)

    p = sub.add_parser("lrs-product", parents=[field_p, out_p, tol_p],
                       help="closure polynomial for termwise products of "
                            "linear recurrence sequences")
    p.add_argument("inputs", metavar="POLY", nargs="+",
                   help="monic characteristic polynomials, ascending "
                        "coefficients")
    p.set_defaults(handler=_cmd_lrs_product)

    p = sub.add_parser("lrs-eval", parents=[field_p, out_p],
                       help="evaluate a linear recurrence sequence")
    p.add_argument("input", metavar="INPUT",
                   help='document with "poly" and "initials"')
    p.add_argument("n", type=int)
    p.add_argument("--prefix", action="store_true",
                   help="print terms a_0 .. a_(n-1) instead of a_n")
    p.set_defaults(handler=_cmd_lrs_eval)

    p = sub.add_parser("wedge", help="dimension of the product of two "
                                     "unipotent blocks' binomial spans")
    p.add_argument("orders", metavar="ORDER", type=int, nargs="+")
    p.add_argument("--char", type=int, default=0,
                   help="field characteristic: 0 or a prime (default 0)")
    p.set_defaults(handler=_cmd_wedge)
    return top


def run(argv=None) -> int:
    """Dispatch one command line; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.handler(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except PcanonError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
