"""Command-line front end: ``gqlrc {build,mindist,lrc-report,export,selftest}``.

Exit codes: 0 success, 1 construction/verification failure, 2 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import formats
from .codes import (
    BudgetExceeded,
    LinearCode,
    classify_min_words,
    code_from_matrix,
    default_budget,
    gq_code,
    minimum_distance,
)
from .egg import EggError
from .gf import FieldError, field_of_order
from .gq import KINDS, IncidenceStructure, StructureError, build_gq, incidence_matrix, save_structure
from .lrc import RepairError, check_bounds, repair_profile
from .pgeom import GeometryError, incidence_matrix_spaces
from .sweep import BACKEND

EXIT_OK, EXIT_FAIL, EXIT_BUDGET = 0, 1, 2
CONSTRUCTION_ERRORS = (StructureError, EggError, GeometryError, FieldError, RepairError, formats.FormatError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAIL, f"{self.prog}: error: {message}\n")


def _order(args) -> int | None:
    if args.q is not None:
        if args.p is not None and args.p ** (args.h or 1) != args.q:
            raise UsageError(f"--q {args.q} conflicts with --p {args.p} --h {args.h or 1}")
        return args.q
    if args.p is not None:
        return args.p ** (args.h or 1)
    return None


def _structure(args) -> IncidenceStructure:
    if args.gq is None:
        if args.input and Path(args.input).suffix == ".json":
            data = json.loads(Path(args.input).read_text())
            if "lines" in data:
                IS = IncidenceStructure.from_json(data)
                return IS
        raise UsageError("--gq is required")
    n = args.n or 1
    if args.m is not None:
        implied = {"te-conic": n, "te-ovoid": 2 * n}.get(args.gq)
        if implied is not None and args.m != implied:
            raise UsageError(f"{args.gq} with n={n} has m={implied}, not {args.m}")
    return build_gq(args.gq, _order(args), n, egg_file=args.input, strict=args.strict)


def _code(args) -> tuple[LinearCode, IncidenceStructure | None]:
    """A code from --space, a matrix file in --in, or a GQ descriptor."""
    if args.space:
        F = field_of_order(_order(args) or 2)
        if args.dim is None or args.t is None:
            raise UsageError("--space needs --dim and --t")
        inc = incidence_matrix_spaces(F, args.dim, args.t, affine=args.space == "ag")
        return code_from_matrix(inc.matrix, F.p), None
    if args.gq is None and args.input:
        path = Path(args.input)
        text = path.read_text()
        if path.suffix == ".alist":
            return code_from_matrix(formats.from_alist(text), args.p or 2), None
        if path.suffix == ".csv":
            return code_from_matrix(formats.from_csv(text), args.p or 2), None
        data = json.loads(text)
        if "rows" in data:
            M, header = formats.from_json(text)
            return code_from_matrix(M, header.get("p", 2)), None
    IS = _structure(args)
    return gq_code(IS), IS


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)


def cmd_build(args) -> int:
    IS = _structure(args)
    s, t, a = IS.params
    print(f"{IS.kind}: {IS.num_points} points, {IS.num_lines} lines, (s,t,alpha)=({s},{t},{a})")
    if args.out:
        save_structure(IS, args.out)
    return EXIT_OK


def cmd_mindist(args) -> int:
    code, IS = _code(args)
    budget = args.budget or default_budget()
    w_max = args.wmax
    if w_max is None and IS is not None and IS.params is not None:
        w_max = IS.params[0] + 1
    method = args.method
    if args.wmax is not None and method == "auto":
        method = "sweep"
    try:
        report = minimum_distance(code, method, w_max, budget, args.threads)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    if IS is not None and report.words:
        classify_min_words(report, IS)
    if report.d is None:
        print(f"no codeword of weight <= {report.w_max} (method {report.method})")
    else:
        line = f"length {code.length}, k {code.k}, d {report.d} (method {report.method})"
        if report.complete:
            line += f", {len(report.words)} minimum words"
        if report.all_line_multiples is not None:
            line += f", all line multiples: {report.all_line_multiples}"
        print(line)
    _write(args, json.dumps(report.to_json()) + "\n")
    # an explicit bz request asks for the distance only
    return EXIT_OK if report.complete or args.method == "bz" else EXIT_BUDGET


def cmd_lrc_report(args) -> int:
    IS = _structure(args)
    budget = args.budget or default_budget()
    try:
        prof = repair_profile(gq_code(IS), IS, budget, args.threads)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    bounds = check_bounds(prof)
    alphabet = f"GF({prof.p})"
    print(f"{IS.kind} over {alphabet}: r={prof.r}, a={prof.a}")
    print(f"expected r=s={prof.s}, a=(p-1)(t+1)={(prof.p - 1) * (prof.t + 1)}: "
          f"{'match' if bounds.matches_expected else 'MISMATCH'}")
    print(bounds.summary())
    for note in prof.notes:
        print(f"note: {note}")
    _write(args, json.dumps(prof.to_json()) + "\n")
    if not bounds.ok:
        for v in bounds.violations:
            print(f"violation: {v}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_export(args) -> int:
    if not args.out:
        raise UsageError("export writes data only to --out")
    if args.matrix == "incidence" and not args.space and (args.gq or args.input):
        IS = _structure(args)
        M = incidence_matrix(IS).N
        p, k = IS.field.p, gq_code(IS).k
    else:
        code, _ = _code(args)
        p, k = code.p, code.k
        M = {"incidence": code.gen_rows, "generator": code.rref_basis,
             "parity": code.dual_basis}[args.matrix]
    if M.size == 0:
        raise UsageError(f"{args.matrix} matrix is empty")
    text = formats.dump(M, args.format, p=p, k=k, name=args.matrix)
    if not (formats.load(text, args.format) == M).all():
        print("round trip failed", file=sys.stderr)
        return EXIT_FAIL
    _write(args, text)
    print(f"wrote {args.matrix} matrix {M.shape[0]}x{M.shape[1]} as {args.format} to {args.out}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .acceptance import run_checks

    only = [x for item in (args.only or []) for x in item.split(",") if x]
    results = run_checks(only or None, args.budget, args.threads, args.seed if args.seed is not None else 2024)
    if not results:
        raise UsageError(f"no checks match {only}")
    for res in results:
        print(res.line())
    failed = [r for r in results if r.status == "fail"]
    over = [r for r in results if r.status == "budget"]
    print(f"{len(results) - len(failed) - len(over)} passed, {len(failed)} failed, "
          f"{len(over)} over budget (kernel: {BACKEND})")
    if failed:
        return EXIT_FAIL
    return EXIT_BUDGET if over else EXIT_OK


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--gq", choices=KINDS)
    sp.add_argument("--q", type=int, help="field order (q^2 for h3/h4)")
    sp.add_argument("--p", type=int)
    sp.add_argument("--h", type=int)
    sp.add_argument("--n", type=int, help="field-reduction degree for te-* kinds")
    sp.add_argument("--m", type=int)
    sp.add_argument("--in", dest="input", help="egg file, structure JSON or matrix file")
    sp.add_argument("--out")
    sp.add_argument("--strict", action="store_true", help="reject eggs failing any axiom")
    sp.add_argument("--budget", type=lambda s: int(float(s)), help="candidate budget (env GQLRC_BUDGET)")
    sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    sp.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gqlrc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("build", help="construct a GQ and verify its axioms")
    _add_common(sp)
    sp.set_defaults(func=cmd_build)

    for name, func, helptext in [("mindist", cmd_mindist, "minimum distance and minimum words"),
                                 ("export", cmd_export, "write incidence/generator/parity matrices")]:
        sp = sub.add_parser(name, help=helptext)
        _add_common(sp)
        sp.add_argument("--space", choices=("pg", "ag"), help="points vs t-spaces of PG/AG(dim, q)")
        sp.add_argument("--dim", type=int)
        sp.add_argument("--t", type=int)
        if name == "mindist":
            sp.add_argument("--method", choices=("auto", "sweep", "exhaustive", "bz"), default="auto")
            sp.add_argument("--wmax", type=int)
        else:
            sp.add_argument("--matrix", choices=("incidence", "generator", "parity"), default="incidence")
            sp.add_argument("--format", choices=formats.FORMATS, default="json")
        sp.set_defaults(func=func)

    sp = sub.add_parser("lrc-report", help="repair degree and availability of the dual code")
    _add_common(sp)
    sp.set_defaults(func=cmd_lrc_report)

    sp = sub.add_parser("selftest", help="run the acceptance checks")
    sp.add_argument("--only", action="append", help="check id(s), comma separated")
    sp.add_argument("--budget", type=lambda s: int(float(s)))
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"gqlrc: error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except CONSTRUCTION_ERRORS as exc:
        print(f"gqlrc: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BudgetExceeded as exc:
        print(f"gqlrc: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
