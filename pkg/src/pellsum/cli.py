"""Command-line front end.

Every subcommand prints a short text summary by default, or the full
structured report with --format structured. --out writes the structured
report to a file either way. Structured reports are canonical: keys
sorted, UTF-8, newline-terminated, and free of anything volatile (wall
time, shard count, output path), so reruns and different shard counts
produce byte-identical documents.

Exit codes: 0 on success, 1 on usage or domain errors, 2 when an internal
cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import InvariantViolationError, PellsumError
from .fixtures import verify_remark
from .normform import NormFormProblem, coordinate_set, solution_classes
from .partitions import bell_number
from .pell import continued_fraction_sqrt, pell_data
from .quadfield import QuadNum, quad
from .recurrences import LinearRecurrence, binet, terms_up_to
from .search import (
    audit_hypotheses,
    describe_bound,
    digit_count,
    pair_sum_search,
    partition_analysis,
    schlickewei_bound,
    sunit_sum_search,
    vanishing_pair_sums,
)
from .sunits import SPrimeSet


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2 (2 is reserved for
    # invariant violations)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


_BASE_RE = re.compile(
    r"""^\s*
    (?P<rat>[+-]?\d+(?:/\d+)?)?\s*
    (?:
        (?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?
        sqrt\(\s*(?P<d>-?\d+)\s*\)
    )?\s*$""",
    re.VERBOSE,
)


def parse_base(text: str) -> Fraction | QuadNum:
    """Parse 'a', 'a/b', 'a+b*sqrt(d)', 'b*sqrt(d)' or 'sqrt(d)' forms."""
    match = _BASE_RE.match(text)
    if not match or (match.group("rat") is None and match.group("d") is None):
        raise ValueError(f"cannot parse base {text!r}")
    if match.group("d") is None:
        return Fraction(match.group("rat"))
    if match.group("rat") is not None and match.group("sign") is None:
        raise ValueError(f"missing + or - before the sqrt term in {text!r}")
    x = Fraction(match.group("rat") or 0)
    y = Fraction(match.group("coef") or 1)
    if match.group("sign") == "-":
        y = -y
    return quad(x, y, int(match.group("d")))


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _rat(value: Fraction) -> str:
    return str(value)


def _rec_config(rec: LinearRecurrence) -> dict:
    return {"coeffs": list(rec.coeffs), "initials": list(rec.initials)}


def _membership_json(memberships) -> list[dict]:
    return [{"coord": coord, "solution": list(pair)} for coord, pair in memberships]


def _hypotheses_json(hyp) -> dict:
    return {
        "exp_bound": hyp.expbound,
        "nondegenerate": hyp.nondegenerate,
        "degeneracy_detail": hyp.degeneracy.detail,
        "unity_orders": list(hyp.unity_orders),
        "independence": [
            {
                "roots": [i, j],
                "dependent": verdict.dependent,
                "witness": list(verdict.witness) if verdict.witness else None,
                "exp_bound": verdict.bound,
            }
            for i, j, verdict in hyp.independence
        ],
        "pairwise_independent": hyp.pairwise_independent,
        "no_root_of_unity": hyp.no_root_of_unity,
        "last_coeff_not_unit": hyp.last_coeff_not_unit,
        "applicable": hyp.applicable,
    }


def _search_json(report) -> dict:
    out = {
        "kind": report.kind,
        "d": report.problem.d,
        "m": report.problem.m,
        "bounds": dict(report.bounds),
        "hit_count": len(report.hits),
        "stabilization": {
            "half_box_hits": report.stabilization[0],
            "full_hits": report.stabilization[1],
            "stable": report.stable,
        },
    }
    if report.kind == "pair-sum":
        out["hits"] = [
            {
                "n1": hit.n1,
                "n2": hit.n2,
                "value": hit.value,
                "memberships": _membership_json(hit.memberships),
            }
            for hit in report.hits
        ]
        out["hypotheses"] = (
            _hypotheses_json(report.hypotheses) if report.hypotheses else None
        )
        out["hypotheses_note"] = report.hypotheses_note
    else:
        out["hits"] = [
            {
                "entries": [_rat(e) for e in hit.entries],
                "total": _rat(hit.total),
                "memberships": _membership_json(hit.memberships),
                "certificate": {
                    "ok": hit.certificate.ok,
                    "vanishing": list(hit.certificate.vanishing)
                    if hit.certificate.vanishing
                    else None,
                    "size": hit.certificate.size,
                },
            }
            for hit in report.hits
        ]
    return out


def _search_summary(report) -> tuple[list[str], list[str]]:
    lines = [
        f"{report.kind} search over x^2 - {report.problem.d}*y^2 = {report.problem.m}",
        "bounds: " + ", ".join(f"{name} = {value}" for name, value in report.bounds),
        f"hits: {len(report.hits)}",
    ]
    for hit in report.hits[:20]:
        where = ", ".join(
            f"X{coord} via {tuple(pair)}" for coord, pair in hit.memberships
        )
        if report.kind == "pair-sum":
            lines.append(f"  U_{hit.n1} + U_{hit.n2} = {hit.value} in {where}")
        else:
            entries = " + ".join(_rat(e) for e in hit.entries)
            lines.append(f"  {entries} = {_rat(hit.total)} in {where}")
    if len(report.hits) > 20:
        lines.append(f"  ... {len(report.hits) - 20} more")
    half, full = report.stabilization
    lines.append(
        f"stabilization: {half} hits in the half box, {full} total"
        + (" (stable)" if report.stable else " (still growing)")
    )
    if report.kind == "pair-sum":
        if report.hypotheses is not None:
            verdict = "hold" if report.hypotheses.applicable else "FAIL"
            lines.append(f"finiteness hypotheses {verdict}")
        elif report.hypotheses_note:
            lines.append(report.hypotheses_note)
    volatile = [
        f"wall time {report.wall_time:.3f}s across {report.shard_count} shard(s)"
    ]
    return lines, volatile


# -- subcommand handlers ----------------------------------------------------
# each returns (config, results, summary_lines, volatile_lines)


def _cmd_pell(args):
    data = pell_data(args.d)
    a0, digits = continued_fraction_sqrt(args.d)
    config = {"subcommand": "pell", "d": args.d}
    results = {
        "d": args.d,
        "a0": a0,
        "period": digits,
        "period_length": len(digits),
        "fundamental": list(data.fundamental),
        "negative": list(data.negative) if data.negative else None,
        "automorph": list(data.automorph),
        "unit": str(data.unit()),
    }
    lines = [
        f"sqrt({args.d}) = [{a0}; {', '.join(map(str, digits))}] (period {len(digits)})",
        f"fundamental solution of x^2 - {args.d}*y^2 = 1: {data.fundamental}",
        (
            f"minimal solution of x^2 - {args.d}*y^2 = -1: {data.negative}"
            if data.negative
            else f"x^2 - {args.d}*y^2 = -1 has no solution (even period)"
        ),
        f"minimal automorph t^2 - {args.d}*u^2 = 4: {data.automorph}"
        f", unit {data.unit()}",
    ]
    return config, results, lines, []


def _cmd_solve_norm(args):
    problem = NormFormProblem(args.d, args.m)
    sol = solution_classes(problem)
    config = {"subcommand": "solve-norm", "d": args.d, "m": args.m}
    results = {
        "d": args.d,
        "m": args.m,
        "scan_bound": sol.scan_bound,
        "orbit_count": len(sol.orbits),
        "orbits": [
            {
                "representative": list(orbit.representative),
                "automorph": list(orbit.automorph),
                "seeds": [list(pair) for pair in orbit.seeds],
                "sign_class": [list(pair) for pair in orbit.sign_class],
            }
            for orbit in sol.orbits
        ],
    }
    lines = [
        f"x^2 - {args.d}*y^2 = {args.m}: "
        f"{len(sol.orbits)} solution class(es), seeds scanned to y <= {sol.scan_bound}"
    ]
    for orbit in sol.orbits:
        lines.append(
            f"  representative {orbit.representative}, automorph {orbit.automorph}"
        )
    return config, results, lines, []


def _cmd_coords(args):
    problem = NormFormProblem(args.d, args.m)
    values = coordinate_set(
        problem, args.coord, args.bound, include_trivial=args.include_trivial
    )
    config = {
        "subcommand": "coords",
        "d": args.d,
        "m": args.m,
        "coord": args.coord,
        "bound": args.bound,
        "include_trivial": args.include_trivial,
    }
    results = {"count": len(values), "values": values}
    shown = ", ".join(map(str, values[:25])) + (", ..." if len(values) > 25 else "")
    lines = [
        f"X{args.coord} for x^2 - {args.d}*y^2 = {args.m}, values <= {args.bound}"
        + (" (trivial solutions included)" if args.include_trivial else ""),
        f"{len(values)} value(s): {shown}" if values else "no values",
    ]
    return config, results, lines, []


def _cmd_recur(args):
    rec = LinearRecurrence.from_literal(args.rec)
    terms = terms_up_to(rec, args.n)
    config = {"subcommand": "recur", "rec": _rec_config(rec), "n": args.n}
    results = {"order": rec.order, "terms": terms}
    shown = ", ".join(map(str, terms[:15])) + (", ..." if len(terms) > 15 else "")
    lines = [f"order {rec.order}, terms U_0 .. U_{args.n}: {shown}"]
    return config, results, lines, []


def _cmd_binet(args):
    rec = LinearRecurrence.from_literal(args.rec)
    form = binet(rec)
    config = {"subcommand": "binet", "rec": _rec_config(rec)}
    results = {
        "discriminant": form.discriminant,
        "roots": [str(root) for root in form.roots],
        "coefficients": [str(coeff) for coeff in form.coeffs],
        "first_terms": [form.term(n) for n in range(11)],
    }
    lines = [
        f"discriminant {form.discriminant}",
        f"roots {form.roots[0]} and {form.roots[1]}",
        f"U_n = ({form.coeffs[0]}) * alpha^n + ({form.coeffs[1]}) * beta^n",
        "first terms: " + ", ".join(str(form.term(n)) for n in range(11)),
    ]
    return config, results, lines, []


def _cmd_hypotheses(args):
    rec = LinearRecurrence.from_literal(args.rec)
    hyp = audit_hypotheses(rec, args.exp_bound)
    config = {
        "subcommand": "hypotheses",
        "rec": _rec_config(rec),
        "exp_bound": args.exp_bound,
    }
    results = _hypotheses_json(hyp)
    flags = [
        ("nondegenerate", hyp.nondegenerate),
        ("roots pairwise independent", hyp.pairwise_independent),
        ("no root of unity", hyp.no_root_of_unity),
        ("last coefficient not a unit", hyp.last_coeff_not_unit),
    ]
    lines = [f"{'ok ' if ok else 'NO '} {name}" for name, ok in flags]
    lines.append(
        "all hypotheses hold" if hyp.applicable else "hypotheses do not all hold"
    )
    if not hyp.nondegenerate:
        lines.insert(0, hyp.degeneracy.detail)
    return config, results, lines, []


def _cmd_pairs_search(args):
    rec = LinearRecurrence.from_literal(args.rec)
    problem = NormFormProblem(args.d, args.m)
    report = pair_sum_search(rec, problem, args.n, args.bound)
    config = {
        "subcommand": "pairs-search",
        "rec": _rec_config(rec),
        "d": args.d,
        "m": args.m,
        "index_bound": args.n,
        "coord_bound": args.bound,
    }
    lines, volatile = _search_summary(report)
    return config, _search_json(report), lines, volatile


def _cmd_sunit_search(args):
    basis = SPrimeSet(tuple(_csv_ints(args.primes)))
    problem = NormFormProblem(args.d, args.m)
    report = sunit_sum_search(basis, args.t, args.exp_bound, problem, args.bound)
    config = {
        "subcommand": "sunit-search",
        "primes": list(basis.primes),
        "tuple_size": args.t,
        "exp_bound": args.exp_bound,
        "d": args.d,
        "m": args.m,
        "coord_bound": args.bound,
    }
    lines, volatile = _search_summary(report)
    return config, _search_json(report), lines, volatile


def _cmd_vanishing(args):
    rec = LinearRecurrence.from_literal(args.rec)
    hits = vanishing_pair_sums(rec, args.n)
    config = {"subcommand": "vanishing", "rec": _rec_config(rec), "n": args.n}
    results = {
        "count": len(hits),
        "hits": [
            {"n1": n1, "n2": n2, "delta": list(delta)} for n1, n2, delta in hits
        ],
    }
    lines = [f"{len(hits)} vanishing subsum(s) with n1 <= n2 <= {args.n}"]
    for n1, n2, delta in hits[:20]:
        part = "full sum" if delta == (1, 2) else f"root {delta[0]} part"
        lines.append(f"  (n1, n2) = ({n1}, {n2}), {part}")
    if len(hits) > 20:
        lines.append(f"  ... {len(hits) - 20} more")
    return config, results, lines, []


def _cmd_bound(args):
    degrees = _csv_ints(args.degrees)
    value = schlickewei_bound(args.s, degrees, args.field_degree)
    digits = digit_count(value)
    config = {
        "subcommand": "bound",
        "s": args.s,
        "degrees": degrees,
        "field_degree": args.field_degree,
    }
    results = {"digits": digits, "value": describe_bound(value)}
    lines = [
        f"bound for {args.s} variable(s), degrees {degrees}, "
        f"field degree {args.field_degree}:",
        f"  {describe_bound(value)}" + (f" ({digits} digits)" if digits <= 10**4 else ""),
    ]
    return config, results, lines, []


def _cmd_partitions(args):
    bases = [parse_base(part) for part in args.bases.split(",")]
    reports = partition_analysis(bases, args.exp_bound)
    config = {
        "subcommand": "partitions",
        "bases": [str(base) for base in bases],
        "exp_bound": args.exp_bound,
    }
    results = {
        "bell": bell_number(len(bases)),
        "partition_count": len(reports),
        "partitions": [
            {
                "blocks": [list(block) for block in report.blocks],
                "verdict": report.verdict,
                "witnesses": [
                    {"pair": [i, j], "exponents": list(witness)}
                    for i, j, witness in report.witnesses
                ],
            }
            for report in reports
        ],
    }
    lines = [f"{len(reports)} partition(s) of {len(bases)} base(s)"]
    for report in reports:
        blocks = " | ".join("{" + ", ".join(map(str, b)) + "}" for b in report.blocks)
        lines.append(f"  {blocks}: {report.verdict}")
        for i, j, witness in report.witnesses:
            lines.append(
                f"    bases {i} and {j}: alpha^{witness[0]} * beta^{witness[1]} = 1"
            )
    return config, results, lines, []


def _cmd_verify_remark(args):
    report = verify_remark(args.id, args.n)
    config = {"subcommand": "verify-remark", "id": args.id, "n": args.n}
    results = {
        "id": report.remark_id,
        "bound": report.bound,
        "agreement": report.agreement,
        "checks": [
            {
                "name": check.name,
                "passed": check.passed,
                "expected": check.expected,
                "computed": check.computed,
            }
            for check in report.checks
        ],
        "discrepancies": list(report.discrepancies),
        "notes": list(report.notes),
    }
    lines = [f"fixture {report.remark_id} replayed up to n = {report.bound}"]
    for check in report.checks:
        mark = "ok " if check.passed else "DIFF"
        lines.append(f"  {mark} {check.name}")
        if not check.passed:
            lines.append(f"       expected {check.expected}, got {check.computed}")
    for text in report.discrepancies:
        lines.append(f"  flag {text}")
    lines.append(
        "agreement: every check reproduced"
        if report.agreement
        else "agreement: NO, see DIFF lines"
    )
    return config, results, lines, []


_HANDLERS = {
    "pell": _cmd_pell,
    "solve-norm": _cmd_solve_norm,
    "coords": _cmd_coords,
    "recur": _cmd_recur,
    "binet": _cmd_binet,
    "hypotheses": _cmd_hypotheses,
    "pairs-search": _cmd_pairs_search,
    "sunit-search": _cmd_sunit_search,
    "vanishing": _cmd_vanishing,
    "bound": _cmd_bound,
    "partitions": _cmd_partitions,
    "verify-remark": _cmd_verify_remark,
}


def build_parser() -> _Parser:
    parser = _Parser(prog="pellsum", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"pellsum {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND", parser_class=_Parser)
    sub.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write the structured report here")
    common.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="stdout format (default text)",
    )

    p = sub.add_parser("pell", parents=[common],
                       help="continued fraction and fundamental solutions for sqrt(d)")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("solve-norm", parents=[common],
                       help="solution classes of x^2 - d*y^2 = m")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("coords", parents=[common],
                       help="coordinate set X1 or X2 up to a bound")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coord", type=int, choices=(1, 2), required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--include-trivial", action="store_true")

    p = sub.add_parser("recur", parents=[common],
                       help="terms of a recurrence given as 'a1,..,ad;U0,..,U(d-1)'")
    p.add_argument("--rec", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("binet", parents=[common],
                       help="exact closed form of an order-2 recurrence")
    p.add_argument("--rec", required=True)

    p = sub.add_parser("hypotheses", parents=[common],
                       help="audit the finiteness hypotheses for a recurrence")
    p.add_argument("--rec", required=True)
    p.add_argument("--exp-bound", type=int, default=10)

    p = sub.add_parser("pairs-search", parents=[common],
                       help="pairs U_n1 + U_n2 landing in a coordinate set")
    p.add_argument("--rec", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="index bound")
    p.add_argument("--bound", type=int, required=True, help="coordinate value bound")

    p = sub.add_parser("sunit-search", parents=[common],
                       help="S-unit tuples whose sum lands in a coordinate set")
    p.add_argument("--primes", required=True, help="comma-separated primes")
    p.add_argument("--t", type=int, required=True, help="tuple size (1..4)")
    p.add_argument("--exp-bound", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="coordinate value bound")

    p = sub.add_parser("vanishing", parents=[common],
                       help="vanishing subsums of pair sums of an order-2 recurrence")
    p.add_argument("--rec", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("bound", parents=[common],
                       help="counting bound for unit equations")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--degrees", required=True, help="comma-separated degrees")
    p.add_argument("--field-degree", type=int, required=True)

    p = sub.add_parser("partitions", parents=[common],
                       help="pairwise dependence across all index partitions")
    p.add_argument("--bases", required=True,
                   help="comma-separated values like '3+2*sqrt(2),3-2*sqrt(2)'")
    p.add_argument("--exp-bound", type=int, required=True)

    p = sub.add_parser("verify-remark", parents=[common],
                       help="replay one recorded example against recomputation")
    p.add_argument("--id", required=True)
    p.add_argument("--n", type=int, required=True)

    return parser


def _canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config, results, lines, volatile = _HANDLERS[args.command](args)
    except InvariantViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except (PellsumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    doc = {"version": __version__, "config": config, "results": results}
    text = _canonical(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    if args.format == "structured":
        sys.stdout.write(text)
    else:
        for line in lines:
            print(line)
        for line in volatile:
            print(line)
        if args.out:
            print(f"report written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
