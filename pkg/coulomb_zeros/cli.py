#!/usr/bin/env python3
"""
Command-line interface for the Coulomb zero expansions.

Subcommands:
    zeros             McMahon (or Abramowitz) approximations, optionally refined
    eps               expansion coefficients next to their closed forms
    study-min-n       smallest n reaching a relative accuracy, over an eta grid
    abramowitz-table  comparison with Abramowitz's zeros of F_0

Exit status: 0 success, 1 validation error, 2 numerical failure or flagged row.
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .config import settings
from .errors import CoulombZerosError, DomainError
from .mcmahon import abramowitz_iterate, closed_form_eps, derive_eps, mcmahon_zero, solve_rho0, rho0_rhs
from .models import Kind, Params
from .reference_data import ABRAMOWITZ_1948, decimals
from .refiner import ZeroRecord, min_n_for_accuracy, records, refine

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2

CSV_FIELDS = ["kind", "lambda", "eta", "n", "terms", "rho_mc", "rho_refined", "residual", "rel_error", "flag"]


class RunConfig(BaseModel):
    """Validated options of the ``zeros`` subcommand."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Kind
    lam: float = Field(alias="lambda")
    eta: float
    n_start: int = Field(ge=1)
    n_end: int = Field(ge=1)
    terms: int = Field(default=6, ge=1, le=12)
    refine: bool = False
    method: Literal["mcmahon", "abramowitz"] = "mcmahon"
    format: Literal["table", "csv", "json"] = "table"
    output: str | None = None

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        if self.n_end < self.n_start:
            raise ValueError(f"empty index range {self.n_start}..{self.n_end}")
        if self.method == "abramowitz" and self.kind is not Kind.F:
            raise ValueError("method abramowitz applies to kind F only")
        return self

    @property
    def params(self) -> Params:
        return Params(lam=self.lam, eta=self.eta)


def fmt_zero(value: float | None) -> str:
    return "" if value is None else f"{value:.16g}"


def fmt_error(value: float | None) -> str:
    return "" if value is None else f"{value:.1e}"


def parse_range(text: str) -> tuple[int, int]:
    """'A..B' or 'A' -> (A, B)."""
    try:
        if ".." in text:
            start, end = text.split("..", 1)
            return int(start), int(end)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")


def parse_grid(text: str) -> np.ndarray:
    """'START:STOP:STEP' (inclusive of STOP) or a comma-separated list."""
    try:
        if ":" in text:
            start, stop, step = (float(part) for part in text.split(":"))
            if step <= 0.0:
                raise ValueError
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            return start + step * np.arange(count)
        return np.array([float(part) for part in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:STOP:STEP or a list, got {text!r}")


def compute_records(config: RunConfig) -> list[ZeroRecord]:
    return records(
        config.params, config.kind, config.n_start, config.n_end, config.terms, config.refine, config.method
    )


def render_table(records: list[ZeroRecord], refined: bool) -> str:
    header = ["n", "rho_mc"] + (["rho_refined", "rel_error"] if refined else [])
    rows = []
    for record in records:
        if record.flag:
            rows.append([str(record.n), record.flag] + (["", ""] if refined else []))
            continue
        row = [str(record.n), fmt_zero(record.rho_mc)]
        if refined:
            row += [fmt_zero(record.rho_refined), fmt_error(record.rel_error)]
        rows.append(row)
    widths = [max(len(line[i]) for line in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in [header] + rows]
    return "\n".join(lines) + "\n"


def render_csv(records: list[ZeroRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(CSV_FIELDS)
    for record in records:
        writer.writerow([
            record.kind.value,
            repr(record.lam),
            repr(record.eta),
            record.n,
            record.terms,
            fmt_zero(record.rho_mc),
            fmt_zero(record.rho_refined),
            fmt_error(record.residual),
            fmt_error(record.rel_error),
            record.flag or "",
        ])
    return buffer.getvalue()


def render_json(records: list[ZeroRecord]) -> str:
    payload = [record.model_dump(mode="json", by_alias=True) for record in records]
    return json.dumps(payload, indent=2) + "\n"


def render(records: list[ZeroRecord], config: RunConfig) -> str:
    match config.format:
        case "csv":
            return render_csv(records)
        case "json":
            return render_json(records)
        case _:
            return render_table(records, config.refine)


def write_output(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as f:
            f.write(text)


def cmd_zeros(args: argparse.Namespace) -> int:
    n_start, n_end = args.n
    config = RunConfig(
        kind=args.kind,
        lam=args.lam,
        eta=args.eta,
        n_start=n_start,
        n_end=n_end,
        terms=args.terms,
        refine=args.refine,
        method=args.method,
        format=args.format,
        output=args.out,
    )
    rows = compute_records(config)
    write_output(render(rows, config), config.output)
    return EXIT_NUMERICAL if any(record.flag for record in rows) else EXIT_OK


def cmd_eps(args: argparse.Namespace) -> int:
    params = Params(lam=args.lam, eta=args.eta)
    kind = Kind(args.kind)
    # the coefficients do not depend on rho0; any admissible value will do
    rho0 = solve_rho0(params, rho0_rhs(params, kind, args.n), args.n)
    eps = derive_eps(params, kind, rho0, args.K)
    closed = closed_form_eps(params, kind)
    lines = [f"# kind={kind.value} lambda={params.lam!r} eta={params.eta!r} v0={params.v0!r}"]
    lines.append(f"{'k':>3}  {'eps_k':>24}  {'closed_form':>24}  {'difference':>10}")
    for k, value in enumerate(eps, start=1):
        if k <= len(closed):
            lines.append(f"{k:>3}  {value:>24.16e}  {closed[k - 1]:>24.16e}  {value - closed[k - 1]:>10.1e}")
        else:
            lines.append(f"{k:>3}  {value:>24.16e}")
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_study_min_n(args: argparse.Namespace) -> int:
    kind = Kind(args.kind)
    lines = [f"# lambda={args.lam!r} kind={kind.value} tol={args.tol!r} terms={args.terms} n_cap={args.n_cap}"]
    lines.append("eta,min_n")
    flagged = False
    for eta in args.eta_range:
        params = Params(lam=args.lam, eta=float(eta))
        n = min_n_for_accuracy(params, kind, args.tol, args.terms, args.n_cap)
        if n is None:
            flagged = True
        lines.append(f"{float(eta)!r},{'cap' if n is None else n}")
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_NUMERICAL if flagged else EXIT_OK


def cmd_abramowitz_table(args: argparse.Namespace) -> int:
    """Abramowitz's values next to our approximations and refined zeros of F_0."""
    lines = [f"{'eta':>4}  {'n':>2}  {'source':<12}  {'value':>18}  note"]
    for (eta, n), printed in ABRAMOWITZ_1948.items():
        params = Params(lam=0.0, eta=eta)
        approx = mcmahon_zero(params, Kind.F, n, settings.default_terms)
        iterated = abramowitz_iterate(params, n)
        refined = refine(params, Kind.F, approx).rho
        places = decimals(printed)
        note = "last-digit discrepancy" if f"{refined:.{places}f}" != printed else ""
        lines.append(f"{eta:>4}  {n:>2}  {'(1) 1948':<12}  {printed:>18}  {note}".rstrip())
        lines.append(f"{eta:>4}  {n:>2}  {'(2) mcmahon':<12}  {approx:>18.10f}")
        lines.append(f"{eta:>4}  {n:>2}  {'(3) refined':<12}  {refined:>18.10f}")
        lines.append(f"{eta:>4}  {n:>2}  {'abramowitz':<12}  {iterated:>18.10f}")
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def add_param_args(parser: argparse.ArgumentParser, kind_default: str | None = None):
    parser.add_argument("--kind", choices=[k.value for k in Kind], default=kind_default, required=kind_default is None)
    parser.add_argument("--lambda", dest="lam", type=float, required=True)
    parser.add_argument("--eta", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coulomb-zeros", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--log-level", default=settings.log_level,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], type=str.upper)
    sub = parser.add_subparsers(dest="command", required=True)

    zeros = sub.add_parser("zeros", help="approximate (and refine) zeros n = A..B")
    add_param_args(zeros)
    zeros.add_argument("--n", type=parse_range, required=True, help="index range A..B")
    zeros.add_argument("--terms", type=int, default=settings.default_terms)
    zeros.add_argument("--refine", action="store_true")
    zeros.add_argument("--method", choices=["mcmahon", "abramowitz"], default="mcmahon")
    zeros.add_argument("--format", choices=["table", "csv", "json"], default="table")
    zeros.add_argument("--out", default=None)
    zeros.set_defaults(handler=cmd_zeros)

    eps = sub.add_parser("eps", help="expansion coefficients eps_1..eps_K")
    add_param_args(eps, kind_default="F")
    eps.add_argument("--K", type=int, default=settings.default_terms)
    eps.add_argument("--n", type=int, default=50, help="index used to pick an admissible rho0")
    eps.add_argument("--out", default=None)
    eps.set_defaults(handler=cmd_eps)

    study = sub.add_parser("study-min-n", help="minimum n reaching a relative accuracy, per eta")
    study.add_argument("--lambda", dest="lam", type=float, required=True)
    study.add_argument("--eta-range", type=parse_grid, required=True, help="START:STOP:STEP or a list")
    study.add_argument("--kind", choices=[k.value for k in Kind], default="F")
    study.add_argument("--tol", type=float, default=1e-6)
    study.add_argument("--terms", type=int, default=settings.default_terms)
    study.add_argument("--n-cap", type=int, default=50)
    study.add_argument("--out", default=None)
    study.set_defaults(handler=cmd_study_min_n)

    table5 = sub.add_parser("abramowitz-table", help="compare with Abramowitz's zeros of F_0")
    table5.add_argument("--out", default=None)
    table5.set_defaults(handler=cmd_abramowitz_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)
    try:
        return args.handler(args)
    except (ValidationError, DomainError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except CoulombZerosError as e:
        print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
