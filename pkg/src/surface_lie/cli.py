"""Command-line front end.

    surface-lie dims --genus 2 --max-degree 6 --format csv
    surface-lie character --genus 2 --degree 3 --rep laurent
    surface-lie decompose --genus 2 --degree 5
    surface-lie a-coeff --genus 2 --degree 4 --method both
    surface-lie verify all --genus 2 --order 8
    surface-lie oracle --genus 2 --max-degree 5 --matrix m.json

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import formulas, lieoracle
from .charring import PowerTracePoly, SymCharacter, SymplecticMatrix, evaluate_at_matrix, format_rational, to_laurent
from .errors import InvalidArgument, InvalidMatrix, ResourceLimit
from .spdecomp import decompose, decomposition_to_json, irrep_dimension


class UsageError(Exception):
    pass


@dataclass
class Output:
    doc: object
    header: list
    rows: list
    plain: list
    ok: bool = True

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.doc, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue()
        return "\n".join(self.plain) + "\n"


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    common.add_argument("--output", metavar="PATH")

    parser = _Parser(prog="surface-lie", description="Sp(2g)-characters of the surface-group Lie algebra")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dims", parents=[common], help="dimensions of the graded pieces")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--max-degree", type=_positive, required=True)

    p = sub.add_parser("character", parents=[common], help="character of one graded piece")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--rep", choices=["laurent", "power-trace"], default="power-trace")

    p = sub.add_parser("decompose", parents=[common], help="irreducible decomposition of a graded piece")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--degree", type=_positive, required=True)

    p = sub.add_parser("a-coeff", parents=[common], help="log coefficient A_N")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--method", choices=["binomial", "recurrence", "both"], default="binomial")

    p = sub.add_parser("verify", parents=[common], help="series identity checks")
    p.add_argument("identity", choices=["log", "pbw", "labute", "all"])
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--rep", choices=["laurent", "power-trace"], default="power-trace")

    p = sub.add_parser("oracle", parents=[common], help="compare with the brute-force Lie algebra")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--max-degree", type=_positive, required=True)
    p.add_argument("--matrix", action="append", default=[], metavar="FILE")
    p.add_argument("--budget", type=_positive, default=lieoracle.DEFAULT_CONFIG.budget)
    return parser


def _ring(rep: str) -> type:
    return SymCharacter if rep == "laurent" else PowerTracePoly


def cmd_dims(args) -> Output:
    dims = [(n, formulas.chi_piece(args.genus, n).dimension()) for n in range(1, args.max_degree + 1)]
    return Output(
        {"genus": args.genus, "dimensions": [{"degree": n, "dimension": d} for n, d in dims]},
        ["degree", "dimension"],
        dims,
        [f"{n}\t{d}" for n, d in dims],
    )


def _char_output(genus, degree, chi, label) -> Output:
    doc = {"genus": genus, "degree": degree, "rep": chi.kind, "terms": chi.to_records()}
    if isinstance(chi, SymCharacter):
        header = [f"e{i + 1}" for i in range(genus)] + ["coefficient"]
        rows = [list(e) + [format_rational(c)] for e, c in chi.sorted_terms()]
    else:
        header = ["monomial", "coefficient"]
        rows = [
            ["*".join(f"q{d}^{e}" for d, e in key) or "1", format_rational(c)] for key, c in chi.sorted_terms()
        ]
    return Output(doc, header, rows, [f"{label} = {chi}"])


def cmd_character(args) -> Output:
    chi = formulas.chi_piece(args.genus, args.degree)
    if args.rep == "laurent":
        chi = to_laurent(chi)
    return _char_output(args.genus, args.degree, chi, f"chi_{args.degree}")


def cmd_decompose(args) -> Output:
    parts = decompose(formulas.chi_piece_laurent(args.genus, args.degree))
    parts = sorted(parts, key=lambda pc: pc[0].parts)
    rows = [[" ".join(map(str, lam.parts)) or "0", m, irrep_dimension(lam, args.genus)] for lam, m in parts]
    return Output(
        {"genus": args.genus, "degree": args.degree, "decomposition": decomposition_to_json(parts)},
        ["partition", "multiplicity", "dimension"],
        rows,
        [f"{lam} x {m}  (dim {irrep_dimension(lam, args.genus)})" for lam, m in parts] or ["0"],
    )


def cmd_a_coeff(args) -> Output:
    if args.method != "both":
        return _char_output(args.genus, args.degree, formulas.a_coeff(args.genus, args.degree, args.method),
                            f"A_{args.degree}")
    a = formulas.a_coeff(args.genus, args.degree, "binomial")
    b = formulas.a_coeff(args.genus, args.degree, "recurrence")
    out = _char_output(args.genus, args.degree, a, f"A_{args.degree}")
    out.ok = a == b
    out.doc["methods_agree"] = out.ok
    out.plain.append(f"binomial == recurrence: {out.ok}")
    return out


def cmd_verify(args) -> Output:
    names = list(formulas.VERIFIERS) if args.identity == "all" else [args.identity]
    reports = [formulas.VERIFIERS[n](args.genus, args.order, _ring(args.rep)) for n in names]
    docs = [r.to_json() for r in reports]
    rows = [[d["identity"], d["genus"], d["order"], int(d["pass"]), d.get("first_failure_degree", "")] for d in docs]
    plain = [
        f"{d['identity']}: {'PASS' if d['pass'] else 'FAIL at degree ' + str(d['first_failure_degree'])}"
        for d in docs
    ]
    return Output(docs, ["identity", "genus", "order", "pass", "first_failure_degree"], rows, plain,
                  ok=all(r.passed for r in reports))


def _load_matrix(path: str, genus: int) -> SymplecticMatrix:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidMatrix(f"{path}: {exc}") from exc
    try:
        M = SymplecticMatrix.from_json(doc)
    except InvalidMatrix as exc:
        raise InvalidMatrix(f"{path}: {exc}") from exc
    if M.genus != genus:
        raise InvalidMatrix(f"{path}: matrix genus {M.genus} != --genus {genus}")
    return M


def cmd_oracle(args) -> Output:
    config = lieoracle.OracleConfig(budget=args.budget)
    lieoracle.check_budget(args.genus, args.max_degree, config)
    matrices = [_load_matrix(p, args.genus) for p in args.matrix]
    rows, plain, docs = [], [], []
    ok = True
    for n in range(1, args.max_degree + 1):
        chi = formulas.chi_piece(args.genus, n)
        oracle_dim = lieoracle.quotient_dimension(args.genus, n, config)
        formula_dim = chi.dimension()
        entry = {"degree": n, "oracle_dimension": oracle_dim, "formula_dimension": formula_dim, "traces": []}
        passed = oracle_dim == formula_dim
        for k, M in enumerate(matrices):
            tr = lieoracle.quotient_trace(args.genus, n, M, config)
            val = evaluate_at_matrix(chi, M, require_integer=True)
            entry["traces"].append({"matrix": k, "oracle": tr, "formula": val, "pass": tr == val})
            passed = passed and tr == val
        entry["pass"] = passed
        ok = ok and passed
        docs.append(entry)
        traces = ";".join(f"{t['oracle']}/{t['formula']}" for t in entry["traces"])
        rows.append([n, oracle_dim, formula_dim, traces, int(passed)])
        plain.append(f"degree {n}: oracle {oracle_dim}, formula {formula_dim}"
                     + (f", traces {traces}" if traces else "") + f"  {'PASS' if passed else 'FAIL'}")
    return Output({"genus": args.genus, "degrees": docs, "pass": ok},
                  ["degree", "oracle_dimension", "formula_dimension", "traces", "pass"], rows, plain, ok=ok)


COMMANDS = {
    "dims": cmd_dims,
    "character": cmd_character,
    "decompose": cmd_decompose,
    "a-coeff": cmd_a_coeff,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def run(argv: Optional[list] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    try:
        result = COMMANDS[args.command](args)
    except (InvalidMatrix, InvalidArgument) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=stderr)
        return 2
    text = result.render(args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0 if result.ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
