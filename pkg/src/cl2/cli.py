"""Command-line front end.

Usage: ``cl2 [--json] [--float] <command> <literal>...``

Exit codes: 0 success, 1 domain error (ZeroDivisor, NotSimilar,
NotPseudosimilar), 2 usage or literal parse error.

Output fields are printed in a fixed order per command, one ``name: value``
per line; matrices and bases continue on indented lines.  With ``--json``
the same fields become keys of one object, in the same order.  Exact
values are strings (``"p/q"``); witness coefficients are
``{"p", "q", "radicand"}`` objects meaning ``p + q*sqrt(radicand)``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import equivalence as eq
from . import matrix_rep as mr
from .algebra import Cl2Element, conj, h_map, inverse, render
from .errors import NotPseudosimilarError, NotSimilarError, ZeroDivisorError
from .linalg import RatMatrix, format_matrix
from .literal import LiteralSyntaxError, parse
from .mp_inverse import mp, mp_case, verify_penrose
from .scalar import Scalar
from .solvers import (SolutionSet, f_pinv_closed_form, solve_ax, solve_axb,
                      solve_consylvester, solve_sylvester, solve_xb,
                      sylvester_closed_form_applies)

GLOBAL_FLAGS = ("--json", "--float")
ERROR_NAMES = {
    ZeroDivisorError: "ZeroDivisor",
    NotSimilarError: "NotSimilar",
    NotPseudosimilarError: "NotPseudosimilar",
}


class _Witness:
    """Marks an element or scalar to be emitted as radicand triples."""

    def __init__(self, value):
        self.value = value


# -- value formatting -----------------------------------------------------

def _fmt_float(x: float) -> str:
    return format(x, ".12g")


def _fmt_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    if abs(im) < 1e-300:
        return _fmt_float(re_)
    sign = "+" if im >= 0 else "-"
    return f"{_fmt_float(re_)}{sign}{_fmt_float(abs(im))}i"


def _triple(s: Scalar) -> dict:
    return {"p": str(s.p), "q": str(s.q), "radicand": str(s.r)}


def _text(value) -> str:
    if isinstance(value, _Witness):
        value = value.value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Cl2Element):
        return render(value)
    if value is None:
        return "none"
    return str(value)


def _floats(value) -> Any:
    if isinstance(value, _Witness):
        value = value.value
    if isinstance(value, Cl2Element):
        return [float(c) for c in value.coeffs]
    if isinstance(value, (Scalar, Fraction)):
        return float(value)
    if isinstance(value, (mr.EigenDescriptor,)):
        return value.values()
    if isinstance(value, mr.FEigenvalue):
        return value.value()
    return None


def _float_text(value) -> str | None:
    f = _floats(value)
    if f is None:
        return None
    if isinstance(f, list):
        return "[" + ", ".join(_fmt_complex(x) if isinstance(x, complex)
                               else _fmt_float(x) for x in f) + "]"
    if isinstance(f, complex):
        return _fmt_complex(f)
    return _fmt_float(f)


def _json(value) -> Any:
    if isinstance(value, _Witness):
        v = value.value
        if isinstance(v, Cl2Element):
            return [_triple(c) for c in v.coeffs]
        return _triple(Scalar.coerce(v))
    if isinstance(value, bool) or value is None or isinstance(value, int):
        return value
    if isinstance(value, Cl2Element):
        return [str(c) for c in value.coeffs]
    if isinstance(value, (Fraction, Scalar)):
        return str(value)
    if isinstance(value, RatMatrix):
        return [[str(x) for x in row] for row in value.rows]
    if isinstance(value, mr.EigenDescriptor):
        return {"center": str(value.center), "radicand": str(value.radicand),
                "multiplicity": value.multiplicity}
    if isinstance(value, mr.FEigenvalue):
        return {"center": str(value.center), "g_a": str(value.g_a),
                "g_b": str(value.g_b), "outer": value.outer,
                "inner": value.inner}
    if isinstance(value, (list, tuple)):
        return [_json(v) for v in value]
    return str(value)


def render_fields(fields: list[tuple[str, Any]], as_json: bool,
                  with_float: bool) -> str:
    if as_json:
        out: dict[str, Any] = {}
        for name, value in fields:
            out[name] = _json(value)
            if with_float:
                if isinstance(value, (list, tuple)):
                    fl = [_floats(v) for v in value]
                    if fl and all(f is not None for f in fl):
                        out[name + "_float"] = _json_float(fl)
                else:
                    f = _floats(value)
                    if f is not None:
                        out[name + "_float"] = _json_float(f)
        return json.dumps(out, indent=2) + "\n"

    lines = []
    for name, value in fields:
        if isinstance(value, RatMatrix):
            lines.append(f"{name}:")
            lines.append(format_matrix(value, "  "))
        elif isinstance(value, (list, tuple)):
            lines.append(f"{name}:" if value else f"{name}: []")
            for v in value:
                row = f"  - {_text(v)}"
                ft = _float_text(v) if with_float else None
                if ft is not None:
                    row += f"  ~ {ft}"
                lines.append(row)
        else:
            row = f"{name}: {_text(value)}"
            ft = _float_text(value) if with_float else None
            if ft is not None:
                row += f"  ~ {ft}"
            lines.append(row)
    return "\n".join(lines) + "\n"


def _json_float(f):
    if isinstance(f, list):
        return [_json_float(x) for x in f]
    if isinstance(f, complex):
        return _fmt_complex(f)
    return float(_fmt_float(f))


# -- commands -------------------------------------------------------------

def _solution_fields(sol: SolutionSet) -> list[tuple[str, Any]]:
    return [
        ("solvable", sol.solvable),
        ("particular", sol.particular),
        ("dimension", sol.dimension),
        ("homogeneous_basis", list(sol.homogeneous_basis)),
    ]


def cmd_mpinv(a):
    x = mp(a)
    return [("a", a), ("H", h_map(a)), ("case", mp_case(a)), ("mp", x),
            ("penrose", verify_penrose(a, x))]


def cmd_inv(a):
    return [("a", a), ("H", h_map(a)), ("inverse", inverse(a))]


def cmd_solve_axb(a, b, d):
    return [("a", a), ("b", b), ("d", d)] + _solution_fields(solve_axb(a, b, d))


def cmd_solve_ax(a, d):
    return [("a", a), ("d", d)] + _solution_fields(solve_ax(a, d))


def cmd_solve_xb(b, d):
    return [("b", b), ("d", d)] + _solution_fields(solve_xb(b, d))


def cmd_sylvester(a, b):
    sol = solve_sylvester(a, b)
    closed = sylvester_closed_form_applies(a, b)
    fields = [
        ("a", a), ("b", b),
        ("F", mr.f_matrix(a, b)),
        ("det", mr.f_det(a, b)),
        ("rank", mr.f_rank(a, b)),
        ("eigenvalues", mr.f_eigen(a, b)),
        ("method", "closed-form" if closed else "rref"),
    ]
    if closed:
        fields.append(("F_pinv", f_pinv_closed_form(a, b)))
    fields += [("dimension", sol.dimension),
               ("null_basis", list(sol.homogeneous_basis))]
    return fields


def cmd_consylvester(a, b):
    sol = solve_consylvester(a, b)
    fields = [
        ("a", a), ("b", b),
        ("W", mr.w_matrix(a, b)),
        ("det", mr.w_det(a, b)),
        ("rank", mr.w_matrix(a, b).rank()),
    ]
    if a and b:
        fields.append(("case", mr.w_rank_case(a, b).value))
    fields += [
        ("eigenvalues", mr.w_eigen(a, b)),
        ("H(conj(a)+b)", h_map(conj(a) + b)),
        ("dimension", sol.dimension),
        ("null_basis", list(sol.homogeneous_basis)),
    ]
    return fields


def cmd_similar(a, b):
    verdict = eq.is_similar(a, b)
    fields = [("a", a), ("b", b), ("similar", verdict)]
    if not verdict:
        return fields, NotSimilarError(f"{render(a)} and {render(b)} are not similar")
    w = eq.similarity_witness(a, b)
    fields += [("witness", _Witness(w.u)), ("H(witness)", _Witness(w.h_u)),
               ("verified", eq.witness_relation(a, b, w.u))]
    return fields, None


def cmd_pseudosimilar(a, b):
    verdict = eq.is_pseudosimilar(a, b)
    fields = [("a", a), ("b", b), ("pseudosimilar", verdict)]
    if not verdict:
        return fields, NotPseudosimilarError(
            f"{render(a)} and {render(b)} are not pseudosimilar")
    w = eq.pseudosimilarity_witness(a, b)
    fields += [("witness", _Witness(w.u)), ("H(witness)", _Witness(w.h_u)),
               ("verified", eq.witness_relation(a, b, w.u, pseudo=True))]
    return fields, None


def cmd_canonical(a):
    form, w = eq.canonical(a)
    return [("a", a), ("kind", form.kind.value), ("G", form.g),
            ("canonical", _Witness(form.element())),
            ("witness", _Witness(w.u)), ("H(witness)", _Witness(w.h_u))]


def cmd_matrep(a):
    la, ra, pa = mr.left_matrix(a), mr.right_matrix(a), mr.phi_matrix(a)
    return [("a", a), ("L", la), ("R", ra), ("phi", pa),
            ("det_L", la.det()), ("det_R", ra.det()), ("det_phi", pa.det()),
            ("H", h_map(a))]


COMMANDS = {
    "mpinv": (cmd_mpinv, ("a",), "Moore-Penrose inverse of a"),
    "inv": (cmd_inv, ("a",), "two-sided inverse of a"),
    "solve-axb": (cmd_solve_axb, ("a", "b", "d"), "all x with a x b = d"),
    "solve-ax": (cmd_solve_ax, ("a", "d"), "all x with a x = d"),
    "solve-xb": (cmd_solve_xb, ("b", "d"), "all x with x b = d"),
    "sylvester": (cmd_sylvester, ("a", "b"), "all x with a x = x b"),
    "consylvester": (cmd_consylvester, ("a", "b"), "all x with a x = conj(x) b"),
    "similar": (cmd_similar, ("a", "b"), "similarity verdict and witness"),
    "pseudosimilar": (cmd_pseudosimilar, ("a", "b"),
                      "pseudosimilarity verdict and witness"),
    "canonical": (cmd_canonical, ("a",), "canonical form and witness"),
    "matrep": (cmd_matrep, ("a",), "L(a), R(a), phi(a) and determinants"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cl2", description="Exact computations in the Clifford algebra Cl2.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    parser.add_argument("--float", action="store_true",
                        help="append 12-digit decimal approximations")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, params, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        for param in params:
            p.add_argument(param, help="element literal, e.g. 1-e1+2e3")
    return parser


def _protect_literals(argv: Sequence[str]) -> list[str]:
    """Keep argparse from reading literals such as ``-1+e1`` as options."""
    out = []
    for tok in argv:
        if (tok.startswith("-") and not tok.startswith("--")
                and tok not in ("-h",)):
            tok = " " + tok
        out.append(tok)
    return out


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(argv)
    as_json = "--json" in argv
    with_float = "--float" in argv
    argv = [t for t in argv if t not in GLOBAL_FLAGS]

    parser = build_parser()
    try:
        args = parser.parse_args(_protect_literals(argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    func, params, _ = COMMANDS[args.command]
    values = []
    for param in params:
        try:
            values.append(parse(getattr(args, param)))
        except LiteralSyntaxError as exc:
            src = exc.source.lstrip()
            pos = exc.position - (len(exc.source) - len(src))
            print(f"cl2: parse error in <{param}> at position {pos}: "
                  f"{str(exc).split(' at position')[0]}: {src!r}", file=stderr)
            return 2

    try:
        result = func(*values)
    except tuple(ERROR_NAMES) as exc:
        name = next(n for cls, n in ERROR_NAMES.items() if isinstance(exc, cls))
        print(f"cl2: {name}: {exc}", file=stderr)
        return 1

    failure = None
    if isinstance(result, tuple):
        result, failure = result
    stdout.write(render_fields(result, as_json, with_float))
    if failure is not None:
        name = ERROR_NAMES[type(failure)]
        print(f"cl2: {name}: {failure}", file=stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
