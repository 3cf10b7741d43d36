"""Command-line interface.

Verbs:

* ``value N M QUANTITY``  -- one constant with its certified error bound;
* ``table QUANTITY``      -- a full table in markdown/csv/json/latex;
* ``check SUITE``         -- offline self-checks (exit 1 on any failure);
* ``exceptional``         -- certified classification against the
                             Pleijel threshold 1;
* ``htype N M OUT.json``  -- write a verified H-type matrix family
                             (exit 3 for inadmissible pairs).

Output is deterministic byte-for-byte; ``check`` carries a timestamp in
its JSON trailer unless --no-timestamp is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction

from .admissibility import admissible
from .checks import run_suites
from .constants import (
    constant_bundle,
    exceptional_set,
    gamma_bar_exact,
    gamma_tilde_interval,
    sobolev_constant,
)
from .core import DimPair, InadmissiblePair
from .htype_algebra import construct, write_json
from .numerics import round_half_away
from .series import c_series

QUANTITIES = ("gamma_tilde", "gamma_bar", "sobolev", "weyl", "c_series")
FORMATS = ("markdown", "csv", "json", "latex")
SUITE_NAMES = ("tables", "consistency", "monotonicity", "admissibility", "algebra", "all")


@dataclass(frozen=True)
class TableSpec:
    quantity: str
    n_max: int = 10
    m_max: int = 10
    fmt: str = "markdown"
    precision: int = 4
    eps: float = 1e-8
    annotations: bool = True

    def validate(self) -> str | None:
        if self.quantity not in QUANTITIES:
            return f"unknown quantity {self.quantity!r}"
        if not 1 <= self.precision <= 12:
            return f"precision must be in [1, 12], got {self.precision}"
        if not (1 <= self.n_max <= 30 and 1 <= self.m_max <= 30):
            return f"n_max, m_max must be in [1, 30], got ({self.n_max}, {self.m_max})"
        if self.fmt not in FORMATS:
            return f"unknown format {self.fmt!r}"
        if not self.eps > 0:
            return "eps must be > 0"
        return None


@dataclass(frozen=True)
class Cell:
    n: int
    m: int
    value: float
    display: str
    error_bound: float
    admissible: bool
    exceeds_one: bool
    exact: Fraction | None = None


def _compute_cell(quantity: str, n: int, m: int, precision: int, eps: float) -> Cell:
    pair = DimPair(n, m)
    adm = admissible(pair).admissible
    exact = None
    if quantity == "gamma_bar":
        exact = gamma_bar_exact(pair)
        value = float(exact)
        err = 0.0
        display = round_half_away(exact, precision)
        exceeds = exact > 1
    elif quantity == "gamma_tilde":
        low, high = gamma_tilde_interval(pair, eps)
        value = (low + high) / 2
        err = (high - low) / 2
        display = round_half_away(value, precision)
        exceeds = value > 1.0
    elif quantity == "sobolev":
        value = sobolev_constant(pair)
        err = 1e-12 * value  # documented binary64 slack; no series involved
        display = round_half_away(value, precision)
        exceeds = value > 1.0
    elif quantity == "weyl":
        b = constant_bundle(pair, eps)
        value = b.weyl
        err = b.weyl / b.c.midpoint * b.c.tail_bound / 2 + 1e-12 * b.weyl
        display = round_half_away(value, precision)
        exceeds = value > 1.0
    elif quantity == "c_series":
        sv = c_series(pair, eps)  # eps is the absolute enclosure width here
        value = sv.midpoint
        err = sv.tail_bound / 2
        display = round_half_away(value, precision)
        exceeds = value > 1.0
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    return Cell(n=n, m=m, value=value, display=display, error_bound=err,
                admissible=adm, exceeds_one=exceeds, exact=exact)


# --------------------------------------------------------------------------
# table rendering

def _render_markdown(spec: TableSpec, cells: dict[tuple[int, int], Cell]) -> str:
    lines = [f"quantity: {spec.quantity} ({spec.precision} decimals; eps {spec.eps:g})", ""]
    header = "| n/m | " + " | ".join(str(m) for m in range(1, spec.m_max + 1)) + " |"
    rule = "|" + "---|" * (spec.m_max + 1)
    lines += [header, rule]
    for n in range(1, spec.n_max + 1):
        row = [str(n)]
        for m in range(1, spec.m_max + 1):
            c = cells[n, m]
            text = c.display
            if spec.annotations:
                if c.admissible and c.exceeds_one:
                    text = f"**{text}**"
                if not c.admissible:
                    text = f"({text})"
            row.append(text)
        lines.append("| " + " | ".join(row) + " |")
    if spec.annotations:
        lines += ["", "legend: **value** admissible and > 1; (value) no H-type group"]
    return "\n".join(lines) + "\n"


def _render_csv(spec: TableSpec, cells: dict[tuple[int, int], Cell]) -> str:
    lines = ["n,m,value,error_bound,admissible"]
    for n in range(1, spec.n_max + 1):
        for m in range(1, spec.m_max + 1):
            c = cells[n, m]
            lines.append(
                f"{n},{m},{c.display},{c.error_bound:.3e},{str(c.admissible).lower()}"
            )
    return "\n".join(lines) + "\n"


def _render_json(spec: TableSpec, cells: dict[tuple[int, int], Cell]) -> str:
    payload = {
        "quantity": spec.quantity,
        "n_max": spec.n_max,
        "m_max": spec.m_max,
        "precision": spec.precision,
        "eps": spec.eps,
        "cells": [
            {
                "n": c.n,
                "m": c.m,
                "value": c.value,
                "display": c.display,
                "error_bound": c.error_bound,
                "admissible": c.admissible,
                "exceeds_one": c.exceeds_one,
                **({"exact": f"{c.exact.numerator}/{c.exact.denominator}"}
                   if c.exact is not None else {}),
            }
            for (_, _), c in sorted(cells.items())
        ],
    }
    return json.dumps(payload, indent=1) + "\n"


def _render_latex(spec: TableSpec, cells: dict[tuple[int, int], Cell]) -> str:
    cols = "|c|" + "c|" * spec.m_max
    lines = [
        f"% {spec.quantity}, {spec.precision} decimals",
        f"\\begin{{tabular}}{{{cols}}}",
        "\\hline",
        "$n/m$ & " + " & ".join(str(m) for m in range(1, spec.m_max + 1)) + r" \\ \hline",
    ]
    for n in range(1, spec.n_max + 1):
        row = [str(n)]
        for m in range(1, spec.m_max + 1):
            c = cells[n, m]
            text = c.display
            if spec.annotations:
                if c.admissible and c.exceeds_one:
                    text = f"\\textcolor{{red}}{{{text}}}"
                if not c.admissible:
                    text = f"\\cellcolor{{gray!50}}{text}"
            row.append(text)
        lines.append(" & ".join(row) + r" \\ \hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "markdown": _render_markdown,
    "csv": _render_csv,
    "json": _render_json,
    "latex": _render_latex,
}


def render_table(spec: TableSpec) -> str:
    cells = {
        (n, m): _compute_cell(spec.quantity, n, m, spec.precision, spec.eps)
        for n in range(1, spec.n_max + 1)
        for m in range(1, spec.m_max + 1)
    }
    return _RENDERERS[spec.fmt](spec, cells)


# --------------------------------------------------------------------------
# subcommand implementations

def _cmd_value(args, parser) -> int:
    if args.quantity not in QUANTITIES:
        parser.error(f"unknown quantity {args.quantity!r}")
    if args.n < 1 or args.m < 1:
        parser.error("n and m must be >= 1")
    if not 1 <= args.precision <= 12:
        parser.error("precision must be in [1, 12]")
    if not args.eps > 0:
        parser.error("eps must be > 0")
    cell = _compute_cell(args.quantity, args.n, args.m, args.precision, args.eps)
    line = cell.display
    if cell.exact is not None:
        line += f" (= {cell.exact.numerator}/{cell.exact.denominator})"
    if not cell.admissible:
        line += " [inadmissible: no H-type group]"
    print(line)
    print(
        f"# quantity={args.quantity} n={args.n} m={args.m} "
        f"value={cell.value!r} error_bound={cell.error_bound:.3e} "
        f"admissible={'yes' if cell.admissible else 'no'}"
    )
    return 0


def _cmd_table(args, parser) -> int:
    spec = TableSpec(
        quantity=args.quantity,
        n_max=args.n_max,
        m_max=args.m_max,
        fmt=args.format,
        precision=args.precision,
        eps=args.eps,
        annotations=not args.no_annotations,
    )
    problem = spec.validate()
    if problem:
        parser.error(problem)
    sys.stdout.write(render_table(spec))
    return 0


def _cmd_check(args, parser) -> int:
    if not args.eps > 0:
        parser.error("eps must be > 0")
    names = SUITE_NAMES[:-1] if args.suite == "all" else (args.suite,)
    results = run_suites(names, eps=args.eps)
    for res in results:
        print(f"{'PASS' if res.passed else 'FAIL'} {res.name}")
        for line in res.details:
            print(f"    {line}")
    report = {
        "suites": [
            {"name": r.name, "passed": r.passed, "details": list(r.details)} for r in results
        ],
        "eps": args.eps,
        "passed": all(r.passed for r in results),
    }
    if not args.no_timestamp:
        report["timestamp"] = datetime.now(timezone.utc).isoformat()
    print(json.dumps(report, sort_keys=True))
    return 0 if report["passed"] else 1


def _cmd_exceptional(args, parser) -> int:
    if args.n_max < 1 or args.m_max < 1:
        parser.error("--n-max and --m-max must be >= 1")
    if not args.eps > 0:
        parser.error("eps must be > 0")
    result = exceptional_set(args.n_max, args.m_max, args.eps)
    print(
        f"exceptional pairs (certified gamma_tilde >= 1) "
        f"for 1 <= n <= {args.n_max}, 1 <= m <= {args.m_max}:"
    )
    for p in result.exceptional:
        low, high = gamma_tilde_interval(p, args.eps)
        print(f"  {p}  gamma_tilde in [{low:.8f}, {high:.8f}]")
    if result.uncertain:
        print("uncertain (certified interval straddles 1):")
        for p in result.uncertain:
            low, high = gamma_tilde_interval(p, args.eps)
            print(f"  {p}  gamma_tilde in [{low:.8f}, {high:.8f}]")
    else:
        print("uncertain: none")
    return 0


def _cmd_htype(args, parser) -> int:
    if args.n < 1 or args.m < 1:
        parser.error("n and m must be >= 1")
    try:
        structure = construct((args.n, args.m))
    except InadmissiblePair as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    write_json(structure, args.output)
    print(f"wrote verified H-type structure ({args.n},{args.m}) to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pleijel",
        description="Certified spectral constants on H-type groups R^(2n) x R^m.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_eps(p):
        p.add_argument("--eps", type=float, default=1e-8,
                       help="series tolerance (default 1e-8); relative for derived "
                            "constants, absolute enclosure width for c_series")

    p = sub.add_parser("value", help="one constant with certified error bound")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--precision", type=int, default=4)
    add_eps(p)
    p.set_defaults(func=_cmd_value)

    p = sub.add_parser("table", help="emit a full table")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--precision", type=int, default=4)
    p.add_argument("--no-annotations", action="store_true",
                   help="plain numbers only (csv is always plain)")
    add_eps(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("check", help="run offline self-check suites")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--no-timestamp", action="store_true",
                   help="omit the timestamp from the JSON trailer (deterministic output)")
    add_eps(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("exceptional", help="classify pairs against the threshold 1")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=10)
    add_eps(p)
    p.set_defaults(func=_cmd_exceptional)

    p = sub.add_parser("htype", help="export a verified H-type matrix family as JSON")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("output")
    p.set_defaults(func=_cmd_htype)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
