"""Command-line surface: code file ingestion, one subcommand per major
operation, and a verify mode that replays the brute-force cross-checks.

Exit codes: 0 success, 1 domain refusal (e.g. asking a non-LCD code for
an orthogonal basis), 2 input error, 3 internal verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from fractions import Fraction

from . import __version__, oracle
from .codes import (BudgetExceeded, HullReport, LinearCode, dual, hull,
                    hull_dimension_via_gramian, is_hull_maximal_so_in,
                    make_code, min_distance, random_invertible, resolve_budget)
from .diag import (DiagonalizationResult, HullNotMaximalError, NotLcdError,
                   diagonalize_maximal_hull, diagonalize_odd,
                   pair_diagonal_generators)
from .eaqecc import (EaqeccRecord, ExtensionCertificate,
                     ExtensionVerificationError, base_params,
                     extend_euclidean, extend_hermitian)
from .gf import FieldSpec, make_field, modulus_str
from .matfq import MatrixFq, row_space_equal

BUDGET_ENV = "HULLFORGE_BUDGET"


class CodeFileError(ValueError):
    """Malformed code file."""


# ----------------------------------------------------------------------
# Code file format: line 1 is `p m n k`, then k rows of n element codes.
# '#' starts a comment; blank lines are ignored.
# ----------------------------------------------------------------------

def parse_code_file(text: str) -> LinearCode:
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise CodeFileError("empty code file")
    header = lines[0].split()
    if len(header) != 4:
        raise CodeFileError(f"header must be 'p m n k', got {lines[0]!r}")
    try:
        p, m, n, k = (int(t) for t in header)
    except ValueError:
        raise CodeFileError(f"non-integer header field in {lines[0]!r}") from None
    try:
        spec = make_field(p, m)
    except ValueError as e:
        raise CodeFileError(f"bad field: {e}") from None
    if n < 1 or not 1 <= k <= n:
        raise CodeFileError(f"need n >= 1 and 1 <= k <= n, got n={n}, k={k}")
    body = lines[1:]
    if len(body) != k:
        raise CodeFileError(f"expected {k} generator rows, found {len(body)}")
    rows = []
    for idx, line in enumerate(body):
        tokens = line.split()
        if len(tokens) != n:
            raise CodeFileError(f"row {idx}: expected {n} entries, found {len(tokens)}")
        try:
            row = [int(t) for t in tokens]
        except ValueError:
            raise CodeFileError(f"row {idx}: non-integer entry") from None
        for e in row:
            if not 0 <= e < spec.q:
                raise CodeFileError(f"row {idx}: entry {e} out of range [0, {spec.q})")
        rows.append(row)
    matrix = MatrixFq.from_rows(spec, rows)
    if matrix.rank != k:
        deficient = _dependent_rows(spec, rows)
        raise CodeFileError(
            f"generator rows are rank deficient: rows {deficient} depend on earlier rows")
    return make_code(spec, matrix)


def _dependent_rows(spec, rows):
    bad = []
    acc = []
    for i, row in enumerate(rows):
        acc.append(row)
        if MatrixFq.from_rows(spec, acc).rank < len(acc):
            bad.append(i)
            acc.pop()
    return bad


def format_code_file(code: LinearCode, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    spec = code.spec
    out.append(f"{spec.p} {spec.m} {code.n} {code.k}")
    for i in range(code.k):
        out.append(" ".join(str(e) for e in code.gen.row(i)))
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# JSON serialization (deterministic: sorted keys, fixed layout)
# ----------------------------------------------------------------------

def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def field_json(spec: FieldSpec) -> dict:
    return {"p": spec.p, "m": spec.m, "q": spec.q,
            "modulus": list(spec.modulus),
            "subfield_order": spec.subfield_order}


def matrix_json(m: MatrixFq) -> list:
    return [list(m.row(i)) for i in range(m.rows)]


def code_json(c: LinearCode) -> dict:
    return {"n": c.n, "k": c.k, "gen": matrix_json(c.gen)}


def parse_code_json(spec: FieldSpec, obj: dict) -> LinearCode:
    return make_code(spec, MatrixFq.from_rows(spec, obj["gen"], cols=obj["n"]))


def fraction_json(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def hull_report_json(rep: HullReport) -> dict:
    return {"form": rep.form,
            "ell": rep.ell,
            "hull": None if rep.hull is None else code_json(rep.hull),
            "gramian_rank_g": rep.gramian_rank_g,
            "gramian_rank_h": rep.gramian_rank_h,
            "consistent": rep.consistent}


def parse_hull_report(spec: FieldSpec, obj: dict) -> HullReport:
    hull_code = None if obj["hull"] is None else parse_code_json(spec, obj["hull"])
    return HullReport(obj["form"], hull_code, obj["ell"],
                      obj["gramian_rank_g"], obj["gramian_rank_h"],
                      obj["consistent"])


def diag_result_json(res: DiagonalizationResult) -> dict:
    return {"method": res.method,
            "code": code_json(res.code),
            "new_gen": matrix_json(res.new_gen),
            "diagonal": list(res.diagonal),
            "nonzero_count": res.nonzero_count}


def parse_diag_result(spec: FieldSpec, obj: dict) -> DiagonalizationResult:
    code = parse_code_json(spec, obj["code"])
    new_gen = MatrixFq.from_rows(spec, obj["new_gen"], cols=code.n)
    return DiagonalizationResult(code, new_gen, tuple(obj["diagonal"]),
                                 obj["nonzero_count"], obj["method"])


def record_json(rec: EaqeccRecord) -> dict:
    return {"n": rec.n, "k_logical": rec.k_logical,
            "d_exact": rec.d_exact,
            "d_bounds": list(rec.d_bounds),
            "c": rec.c, "q": rec.q,
            "rate": fraction_json(rec.rate),
            "net_rate": fraction_json(rec.net_rate),
            "provenance": rec.provenance, "r": rec.r}


def parse_record(obj: dict) -> EaqeccRecord:
    return EaqeccRecord(
        n=obj["n"], k_logical=obj["k_logical"], d_exact=obj["d_exact"],
        d_bounds=tuple(obj["d_bounds"]), c=obj["c"], q=obj["q"],
        rate=Fraction(obj["rate"]["num"], obj["rate"]["den"]),
        net_rate=Fraction(obj["net_rate"]["num"], obj["net_rate"]["den"]),
        provenance=obj["provenance"], r=obj["r"])


def certificate_json(cert: ExtensionCertificate) -> dict:
    return {"original": code_json(cert.original),
            "extended": code_json(cert.extended),
            "alphas": list(cert.alphas),
            "x_rows": [list(x) for x in cert.x_rows],
            "hull_preserved": cert.hull_preserved,
            "d_prime": cert.d_prime}


def parse_certificate(spec: FieldSpec, obj: dict) -> ExtensionCertificate:
    return ExtensionCertificate(
        original=parse_code_json(spec, obj["original"]),
        extended=parse_code_json(spec, obj["extended"]),
        alphas=tuple(obj["alphas"]),
        x_rows=tuple(tuple(x) for x in obj["x_rows"]),
        hull_preserved=obj["hull_preserved"],
        d_prime=obj["d_prime"])


def envelope(command: str, spec: FieldSpec | None, digest: str | None,
             result) -> dict:
    return {"tool_version": __version__,
            "command": command,
            "field": None if spec is None else field_json(spec),
            "input_digest": digest,
            "result": result}


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------

def _load(args):
    try:
        with open(args.file, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise CodeFileError(f"cannot read {args.file}: {e}") from None
    digest = hashlib.sha256(raw).hexdigest()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CodeFileError(f"{args.file} is not UTF-8: {e}") from None
    return parse_code_file(text), digest


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        try:
            return resolve_budget(int(env))
        except ValueError:
            raise CodeFileError(f"bad {BUDGET_ENV} value {env!r}") from None
    return resolve_budget(None)


def _emit(args, spec, digest, payload, human_lines):
    if args.json:
        sys.stdout.write(dumps(envelope(args.command_line, spec, digest, payload)))
    else:
        for line in human_lines:
            print(line)
    return 0


def _field_lines(spec: FieldSpec):
    lines = [f"field: GF({spec.q}) = GF({spec.p}^{spec.m}), modulus {modulus_str(spec)}"]
    if spec.subfield_order is not None:
        lines.append(f"conjugation: x -> x^{spec.subfield_order} fixing GF({spec.subfield_order})")
    return lines


def cmd_field_info(args):
    if args.file:
        code, digest = _load(args)
        spec = code.spec
    else:
        if args.p is None or args.m is None:
            raise CodeFileError("field-info needs a code file or both -p and -m")
        spec = make_field(args.p, args.m)
        digest = None
    return _emit(args, spec, digest, field_json(spec), _field_lines(spec))


def cmd_hull(args):
    code, digest = _load(args)
    rep = hull(code, args.form)
    lines = _field_lines(code.spec)
    lines.append(f"code: [{code.n},{code.k}] over GF({code.spec.q})")
    lines.append(f"form: {rep.form}")
    lines.append(f"hull dimension: {rep.ell}")
    if rep.hull is None:
        lines.append("hull: zero code")
    else:
        lines.append("hull generator:")
        lines.extend("  " + " ".join(map(str, rep.hull.gen.row(i)))
                     for i in range(rep.hull.k))
    lines.append(f"gramian ranks: generator {rep.gramian_rank_g}, "
                 f"parity {rep.gramian_rank_h}")
    lines.append(f"consistent: {'yes' if rep.consistent else 'NO'}")
    return _emit(args, code.spec, digest, hull_report_json(rep), lines)


def cmd_diag(args):
    code, digest = _load(args)
    spec = code.spec
    if args.pair:
        g1, g2, diagonal = pair_diagonal_generators(code, args.form)
        nonzero = sum(1 for d in diagonal if d)
        payload = {"method": "pair-reduction",
                   "code": code_json(code),
                   "gen_left": matrix_json(g1),
                   "gen_right": matrix_json(g2),
                   "diagonal": list(diagonal),
                   "nonzero_count": nonzero}
        lines = ["method: pair-reduction",
                 f"cross-gramian diagonal: {' '.join(map(str, diagonal))}",
                 f"nonzero entries: {nonzero}"]
        return _emit(args, spec, digest, payload, lines)
    if spec.p != 2:
        res = diagonalize_odd(code, args.form)
    else:
        res = diagonalize_maximal_hull(code, args.form, _budget(args))
    lines = [f"method: {res.method}",
             f"gramian diagonal: {' '.join(map(str, res.diagonal))}",
             f"nonzero entries: {res.nonzero_count}",
             "new generator:"]
    lines.extend("  " + " ".join(map(str, res.new_gen.row(i)))
                 for i in range(res.new_gen.rows))
    return _emit(args, spec, digest, diag_result_json(res), lines)


def cmd_mindist(args):
    code, digest = _load(args)
    d = min_distance(code, _budget(args))
    payload = {"n": code.n, "k": code.k, "d": d}
    lines = [f"code: [{code.n},{code.k}] over GF({code.spec.q})",
             f"minimum distance: {d}"]
    return _emit(args, code.spec, digest, payload, lines)


def _record_lines(rec: EaqeccRecord):
    d = rec.d_exact if rec.d_exact is not None else f"{rec.d_bounds[0]}..{rec.d_bounds[1]}"
    return [f"[[{rec.n},{rec.k_logical},{d};{rec.c}]]_{rec.q}"
            f"  rate {rec.rate}  net rate {rec.net_rate}  ({rec.provenance}, r={rec.r})"]


def cmd_eaqecc_base(args):
    code, digest = _load(args)
    budget = _budget(args)
    primary, secondary = base_params(code, args.form, budget)
    ell = hull(code, args.form).ell
    payload = {"hull_dimension": ell,
               "primary": record_json(primary),
               "dual_side": record_json(secondary)}
    lines = [f"hull dimension: {ell}"]
    lines += _record_lines(primary)
    lines += _record_lines(secondary)
    return _emit(args, code.spec, digest, payload, lines)


def cmd_eaqecc_extend(args):
    code, digest = _load(args)
    budget = _budget(args)
    if args.form == "hermitian":
        cert, record = extend_hermitian(code, args.r, budget)
    else:
        cert, record = extend_euclidean(code, args.r, budget)
    payload = {"certificate": certificate_json(cert),
               "record": record_json(record)}
    lines = [f"extension r: {args.r}",
             f"alphas: {' '.join(map(str, cert.alphas)) or '-'}",
             f"hull preserved: {'yes' if cert.hull_preserved else 'NO'}"]
    lines += _record_lines(record)
    return _emit(args, code.spec, digest, payload, lines)


# ----------------------------------------------------------------------
# verify: replay every cross-check the brute-force module offers
# ----------------------------------------------------------------------

def _verify_checks(code: LinearCode, form: str, budget: int, seed: int):
    spec = code.spec
    q = spec.q
    checks = []

    rep = hull(code, form)
    checks.append(("hull-gramian-consistency", rep.consistent))
    checks.append(("gramian-shortcut-agreement",
                   hull_dimension_via_gramian(code, form) == rep.ell))

    if q ** code.k <= budget:
        hull_set, oracle_ell = oracle.hull_by_enumeration(code, form, budget)
        ok = oracle_ell == rep.ell and len(hull_set) == q ** rep.ell
        checks.append(("hull-vs-enumeration", ok))
        checks.append(("min-distance-agreement",
                       min_distance(code, budget)
                       == oracle.min_distance_by_enumeration(code, budget)))
        checks.append(("maximality-agreement",
                       is_hull_maximal_so_in(code, form, "code", budget)
                       == oracle.maximal_so_by_enumeration(code, form, budget)))
    else:
        d = dual(code, form)
        if d is None:
            checks.append(("hull-vs-enumeration", rep.ell == 0))
        elif q ** d.k <= budget:
            _, oracle_ell = oracle.hull_by_enumeration(d, form, budget)
            checks.append(("hull-vs-enumeration", oracle_ell == rep.ell))
        else:
            checks.append(("hull-vs-enumeration", None))
        checks.append(("min-distance-agreement", None))
        checks.append(("maximality-agreement", None))

    rng = random.Random(seed)
    e1 = random_invertible(spec, code.k, rng)
    e2 = random_invertible(spec, code.k, rng)
    g1 = e1 @ code.gen
    g2 = e2 @ code.gen
    cross = g1 @ (g2.transpose() if form == "euclidean" else g2.conj_transpose())
    checks.append(("generator-independence", cross.rank == code.k - rep.ell))

    p1, p2, diagonal = pair_diagonal_generators(code, form)
    cross = p1 @ (p2.transpose() if form == "euclidean" else p2.conj_transpose())
    ok = (all(cross[i, j] == (diagonal[i] if i == j else 0)
              for i in range(code.k) for j in range(code.k))
          and sum(1 for x in diagonal if x) == code.k - rep.ell
          and all(diagonal[i] for i in range(code.k - rep.ell))
          and row_space_equal(p1, code.gen)
          and row_space_equal(p2, code.gen))
    checks.append(("pair-diagonal", ok))

    res = None
    if spec.p != 2:
        res = diagonalize_odd(code, form)
    else:
        try:
            res = diagonalize_maximal_hull(code, form, budget)
        except (HullNotMaximalError, BudgetExceeded):
            checks.append(("diagonalization", None))
    if res is not None:
        gram = res.new_gen.gramian(form)
        ok = (all(gram[i, j] == (res.diagonal[i] if i == j else 0)
                  for i in range(code.k) for j in range(code.k))
              and res.nonzero_count == code.k - rep.ell
              and all(res.diagonal[i] for i in range(res.nonzero_count))
              and not any(res.diagonal[res.nonzero_count:])
              and row_space_equal(res.new_gen, code.gen))
        checks.append(("diagonalization", ok))
    return checks


def cmd_verify(args):
    code, digest = _load(args)
    checks = _verify_checks(code, args.form, _budget(args), args.seed)
    status = {True: "pass", False: "FAIL", None: "skipped"}
    lines = [f"{status[ok]:>7}  {name}" for name, ok in checks]
    passed = all(ok is not False for _, ok in checks)
    lines.append("verdict: " + ("all checks passed" if passed else "FAILURES above"))
    payload = {"checks": [{"name": name, "status": status[ok].lower()}
                          for name, ok in checks],
               "passed": passed}
    rc = _emit(args, code.spec, digest, payload, lines)
    return rc if passed else 3


# ----------------------------------------------------------------------
# Parser and entry point
# ----------------------------------------------------------------------

def _add_common(sp, form=True, budget=True):
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    if form:
        sp.add_argument("--form", choices=("euclidean", "hermitian"),
                        default="euclidean")
    if budget:
        sp.add_argument("--budget", type=int, default=None,
                        help=f"enumeration cap (default {BUDGET_ENV} or built-in)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullforge",
        description="Exact hulls, Gramian diagonalization, and "
                    "entanglement-assisted quantum code parameters.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("field-info", help="describe a field")
    sp.add_argument("file", nargs="?", help="code file (optional)")
    sp.add_argument("-p", type=int, default=None, help="characteristic")
    sp.add_argument("-m", type=int, default=None, help="extension degree")
    _add_common(sp, form=False, budget=False)
    sp.set_defaults(func=cmd_field_info)

    sp = subs.add_parser("hull", help="hull report for a code file")
    sp.add_argument("file")
    _add_common(sp, budget=False)
    sp.set_defaults(func=cmd_hull)

    sp = subs.add_parser("diag", help="diagonal-Gramian generator matrix")
    sp.add_argument("file")
    sp.add_argument("--pair", action="store_true",
                    help="two generators with diagonal cross-Gramian instead")
    _add_common(sp)
    sp.set_defaults(func=cmd_diag)

    sp = subs.add_parser("mindist", help="exact minimum distance")
    sp.add_argument("file")
    _add_common(sp, form=False)
    sp.set_defaults(func=cmd_mindist)

    sp = subs.add_parser("eaqecc-base", help="base quantum code records")
    sp.add_argument("file")
    _add_common(sp)
    sp.set_defaults(func=cmd_eaqecc_base)

    sp = subs.add_parser("eaqecc-extend", help="length-extended quantum code")
    sp.add_argument("file")
    sp.add_argument("--r", type=int, required=True, help="extension length")
    _add_common(sp)
    sp.set_defaults(func=cmd_eaqecc_extend)

    sp = subs.add_parser("verify", help="run brute-force cross-checks")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0,
                    help="seed for the randomized generator checks")
    _add_common(sp)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command_line = " ".join(argv)
    try:
        return args.func(args)
    except CodeFileError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except (NotLcdError, HullNotMaximalError, BudgetExceeded) as e:
        print(f"refused: {e}", file=sys.stderr)
        return 1
    except ExtensionVerificationError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
