"""Command-line interface.

Subcommands:

* ``fit``: fit one approximant to a problem's expansion and print its
  parameters and large-argument law as JSON.
* ``table``: fit depths 2..kmax and print the extrapolation report as an
  aligned table, JSON, or CSV.
* ``eval``: evaluate a fitted approximant at given points.
* ``diagnose``: print the boundedness certificate for a fitted approximant.
* ``pade-check``: verify numerically that the power -1 form collapses to
  its equivalent rational function.

Problems come either from the built-in corpus (``--problem``) or from a
JSON problem file (``--file``) with fields ``name``, ``coefficients``
(first entry 1), ``beta`` (> -1/2), and optional ``known_amplitude``,
``observable_prefactor`` (default 1), ``observable_exact`` and
``match_point`` (default 1).

Errors are reported as a JSON object ``{"error": kind, "message": ...}``
on stdout with a non-zero exit status.  The exit status is zero exactly
when no error object was emitted and no report row failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Sequence

from . import corpus
from .approximant import (
    ContinuedRootApproximant,
    ExponentTarget,
    exponent_to_power,
    finite_order_exponent,
    fit,
)
from .diagnostics import ReportRow, herschfeld_terms, sequence_report
from .errors import ContinuedRootError, RealnessError
from .series import TruncatedSeries

CSV_HEADER = ["k", "B_k", "beta_k", "observable", "percent_error"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="continued-roots",
        description="Extrapolate small-argument expansions to large-argument "
        "power laws with continued-root approximants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser(
        "fit", help="fit one approximant and print its parameters"
    )
    _add_source_arguments(p_fit)
    p_fit.add_argument(
        "--order", type=int, required=True, help="nesting depth k"
    )

    p_table = sub.add_parser(
        "table", help="fit depths 2..kmax and print the extrapolation report"
    )
    _add_source_arguments(p_table)
    p_table.add_argument(
        "--kmax", type=int, required=True, help="largest nesting depth"
    )
    p_table.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output rendering (default: table)",
    )
    p_table.add_argument(
        "--out", help="write the rendering to this path instead of stdout"
    )

    p_eval = sub.add_parser(
        "eval", help="evaluate a fitted approximant at given points"
    )
    _add_source_arguments(p_eval)
    p_eval.add_argument("--order", type=int, required=True, help="nesting depth k")
    p_eval.add_argument(
        "--x",
        type=float,
        nargs="+",
        required=True,
        help="one or more evaluation points (x >= 0)",
    )

    p_diag = sub.add_parser(
        "diagnose", help="print the boundedness certificate for a fit"
    )
    _add_source_arguments(p_diag)
    p_diag.add_argument("--order", type=int, required=True, help="nesting depth k")
    p_diag.add_argument(
        "--L",
        type=float,
        default=100.0,
        dest="variable_bound",
        help="right end of the argument interval (default: 100)",
    )

    p_pade = sub.add_parser(
        "pade-check",
        help="check that the power -1 form equals its rational reduction",
    )
    p_pade.add_argument("--order", type=int, required=True, help="nesting depth k")
    p_pade.add_argument(
        "--seed", type=int, default=0, help="seed for the random parameters"
    )
    return parser


def _add_source_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--problem", help="name of a built-in problem")
    group.add_argument("--file", help="path to a JSON problem file")


_FILE_FIELDS = {
    "name",
    "coefficients",
    "beta",
    "known_amplitude",
    "observable_prefactor",
    "observable_exact",
    "match_point",
}


def load_problem_file(path: str) -> corpus.BenchmarkProblem:
    """Parse and validate a JSON problem file."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError("problem file must contain a JSON object")
    unknown = set(data) - _FILE_FIELDS
    if unknown:
        raise ValueError(
            f"problem file has unknown fields: {', '.join(sorted(unknown))}"
        )
    for field in ("name", "coefficients", "beta"):
        if field not in data:
            raise ValueError(f"problem file is missing required field {field!r}")
    name = data["name"]
    if not isinstance(name, str) or not name:
        raise ValueError("problem file field 'name' must be a non-empty string")
    coeffs = data["coefficients"]
    if (
        not isinstance(coeffs, list)
        or len(coeffs) < 2
        or not all(isinstance(c, (int, float)) for c in coeffs)
    ):
        raise ValueError(
            "problem file field 'coefficients' must be a list of at least "
            "two numbers"
        )
    coeffs = [float(c) for c in coeffs]
    if coeffs[0] != 1.0:
        raise ValueError(
            "problem file coefficients must be normalised so the first "
            f"entry is 1, got {coeffs[0]!r}"
        )
    beta = data["beta"]
    if not isinstance(beta, (int, float)) or not beta > -0.5:
        raise ValueError(
            f"problem file field 'beta' must be a number above -1/2, got {beta!r}"
        )
    known_amplitude = _optional_number(data, "known_amplitude")
    observable_exact = _optional_number(data, "observable_exact")
    prefactor = _optional_number(data, "observable_prefactor")
    prefactor = 1.0 if prefactor is None else prefactor
    if not prefactor > 0.0:
        raise ValueError(
            f"problem file field 'observable_prefactor' must be positive, "
            f"got {prefactor!r}"
        )
    match_point = _optional_number(data, "match_point")
    match_point = 1.0 if match_point is None else match_point
    if not match_point > 0.0:
        raise ValueError(
            f"problem file field 'match_point' must be positive, got {match_point!r}"
        )
    fixed = list(coeffs)
    return corpus.BenchmarkProblem(
        name=name,
        target_exponent=float(beta),
        observable_prefactor=prefactor,
        match_point=match_point,
        max_order=len(fixed) - 1,
        known_amplitude=known_amplitude,
        observable_exact=observable_exact,
        _generator=lambda order: fixed[: order + 1],
    )


def _optional_number(data: dict, field: str) -> float | None:
    if field not in data or data[field] is None:
        return None
    value = data[field]
    if not isinstance(value, (int, float)):
        raise ValueError(f"problem file field {field!r} must be a number")
    return float(value)


def _resolve_problem(args: argparse.Namespace) -> corpus.BenchmarkProblem:
    if args.problem is not None:
        return corpus.problem(args.problem)
    return load_problem_file(args.file)


def _fit_order(problem: corpus.BenchmarkProblem, order: int) -> ContinuedRootApproximant:
    if order < 1:
        raise ValueError(f"--order must be at least 1, got {order}")
    series = TruncatedSeries(tuple(problem.coefficients(order)))
    return fit(series, exponent_to_power(problem.target_exponent))


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _command_fit(args: argparse.Namespace) -> int:
    problem = _resolve_problem(args)
    approx = _fit_order(problem, args.order)
    try:
        amplitude = approx.amplitude().amplitude
    except RealnessError:
        amplitude = None
    _print_json(
        {
            "s": approx.power,
            "A": list(approx.params),
            "is_real_valued": approx.is_real_valued,
            "B_k": amplitude,
            "beta_k": finite_order_exponent(approx.power, approx.order),
        }
    )
    return 0


def _table_rows(problem: corpus.BenchmarkProblem, kmax: int) -> list[ReportRow]:
    if kmax < 2:
        raise ValueError(f"--kmax must be at least 2, got {kmax}")
    target = ExponentTarget(problem.target_exponent, problem.known_amplitude)
    power = exponent_to_power(problem.target_exponent)
    coeffs = problem.coefficients(kmax)
    fitted = []
    failed: dict[int, str] = {}
    for k in range(2, kmax + 1):
        try:
            fitted.append(fit(TruncatedSeries(tuple(coeffs[: k + 1])), power))
        except ContinuedRootError as err:
            failed[k] = str(err)
    report = sequence_report(
        fitted,
        target,
        observable_prefactor=problem.observable_prefactor,
        match_point=problem.match_point,
    )
    by_order = {row.order: row for row in report.rows}
    rows = []
    for k in range(2, kmax + 1):
        if k in failed:
            rows.append(
                ReportRow(
                    order=k,
                    amplitude=None,
                    exponent=None,
                    observable=None,
                    percent_error=None,
                    error=failed[k],
                )
            )
        else:
            rows.append(by_order[k])
    return rows


def _render_table_csv(rows: Sequence[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.order,
                _cell(row.amplitude),
                _cell(row.exponent),
                _cell(row.observable),
                _cell(row.percent_error),
            ]
        )
    return buffer.getvalue()


def _cell(value: float | None) -> str:
    return "" if value is None else repr(value)


def _render_table_json(
    problem: corpus.BenchmarkProblem, rows: Sequence[ReportRow]
) -> str:
    payload = {
        "problem": problem.name,
        "s": exponent_to_power(problem.target_exponent),
        "beta": problem.target_exponent,
        "observable_prefactor": problem.observable_prefactor,
        "match_point": problem.match_point,
        "known_amplitude": problem.known_amplitude,
        "observable_exact": problem.observable_exact,
        "rows": [
            {
                "k": row.order,
                "B_k": row.amplitude,
                "beta_k": row.exponent,
                "observable": row.observable,
                "percent_error": row.percent_error,
                **({"error": row.error} if row.failed else {}),
            }
            for row in rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _render_table_human(
    problem: corpus.BenchmarkProblem, rows: Sequence[ReportRow]
) -> str:
    lines = [
        f"problem: {problem.name}",
        f"power s = {exponent_to_power(problem.target_exponent):.6f}, "
        f"target exponent = {problem.target_exponent:.6f}, "
        f"prefactor = {problem.observable_prefactor:.6f}, "
        f"match point = {problem.match_point:.6f}",
        f"{'k':>4} {'B_k':>14} {'beta_k':>14} {'observable':>14} {'percent_error':>14}",
    ]
    for row in rows:
        cells = [
            _human_cell(row.amplitude),
            _human_cell(row.exponent),
            _human_cell(row.observable),
            _human_cell(row.percent_error),
        ]
        line = f"{row.order:>4} " + " ".join(f"{c:>14}" for c in cells)
        if row.failed:
            line += f"  FAILED: {row.error}"
        lines.append(line)
    if problem.known_amplitude is not None:
        lines.append(
            f"known amplitude = {problem.known_amplitude:.6f} "
            f"(observable {problem.observable_prefactor * problem.known_amplitude:.6f})"
        )
    if problem.observable_exact is not None:
        lines.append(f"published observable = {problem.observable_exact:.6f}")
    return "\n".join(lines) + "\n"


def _human_cell(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def _command_table(args: argparse.Namespace) -> int:
    problem = _resolve_problem(args)
    rows = _table_rows(problem, args.kmax)
    if args.format == "csv":
        rendering = _render_table_csv(rows)
    elif args.format == "json":
        rendering = _render_table_json(problem, rows)
    else:
        rendering = _render_table_human(problem, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(rendering)
    else:
        sys.stdout.write(rendering)
    return 1 if any(row.failed for row in rows) else 0


def _command_eval(args: argparse.Namespace) -> int:
    problem = _resolve_problem(args)
    approx = _fit_order(problem, args.order)
    points = [[x, approx.evaluate(x)] for x in args.x]
    _print_json(
        {
            "problem": problem.name,
            "order": approx.order,
            "s": approx.power,
            "points": points,
        }
    )
    return 0


def _command_diagnose(args: argparse.Namespace) -> int:
    problem = _resolve_problem(args)
    approx = _fit_order(problem, args.order)
    diag = herschfeld_terms(approx, args.variable_bound)
    _print_json(
        {
            "problem": problem.name,
            "order": approx.order,
            "power": diag.power,
            "variable_bound": diag.variable_bound,
            "param_bound": diag.param_bound,
            "radical_exponents": list(diag.radical_exponents),
            "bound_terms": list(diag.bound_terms),
            "bound_limit": diag.bound_limit,
            "power_valid": diag.power_valid,
            "bounded": diag.bounded,
        }
    )
    return 0


def _command_pade_check(args: argparse.Namespace) -> int:
    if args.order < 1:
        raise ValueError(f"--order must be at least 1, got {args.order}")
    rng = random.Random(args.seed)
    params = tuple(rng.uniform(0.1, 2.0) for _ in range(args.order))
    approx = ContinuedRootApproximant(-1.0, params)
    numerator, denominator = approx.to_rational()
    num = TruncatedSeries(tuple(numerator))
    den = TruncatedSeries(tuple(denominator))
    worst = 0.0
    for i in range(20):
        x = 10.0 * i / 19.0
        direct = approx.evaluate(x)
        rational = num.evaluate(x) / den.evaluate(x)
        worst = max(worst, abs(direct - rational) / abs(rational))
    verdict = "PASS" if worst < 1e-10 else "FAIL"
    _print_json(
        {
            "order": args.order,
            "seed": args.seed,
            "params": list(params),
            "numerator_degree": len(numerator) - 1,
            "denominator_degree": len(denominator) - 1,
            "max_relative_deviation": worst,
            "verdict": verdict,
        }
    )
    return 0 if verdict == "PASS" else 1


_COMMANDS = {
    "fit": _command_fit,
    "table": _command_table,
    "eval": _command_eval,
    "diagnose": _command_diagnose,
    "pade-check": _command_pade_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ContinuedRootError as err:
        _print_json({"error": err.kind, "message": str(err)})
        return 1
    except ValueError as err:
        _print_json({"error": "invalid-input", "message": str(err)})
        return 1
    except OSError as err:
        _print_json({"error": "io", "message": str(err)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
