"""Command line front end: counting, verification sweeps, rendering, slices.

Subcommands:

* ``count``      -- run one or all signed-count methods on a single box,
* ``verify``     -- cross-check every method on all boxes up to a cell cap,
* ``render``     -- write lozenge-tiling SVGs of self-complementary partitions,
* ``experiment`` -- sample univariate slices of the four-variable Pfaffian
                    and report whether they factor into linear pieces.

All big counts serialize as decimal strings so any JSON consumer survives
them.  Exit codes: 0 success/agreement, 1 disagreement, 2 budget exceeded,
3 usage error.  Stdout is deterministic for fixed inputs; per-method timings
go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .errors import BudgetExceededError
from .formulas import ParityCase, normalize_box, sc_count, signed_count_closed
from .linalg import factorization_experiment, minor_sum, sc_count_pfaffian, signed_count_pfaffian
from .paths import signed_count_paths
from .pp import enumerate_sc, reference_pp, render_svg, signed_count_pp

METHODS = ("bruteforce", "paths", "minorsum", "pfaffian")

_METHOD_FUNCS = {
    "bruteforce": lambda dims, budget: signed_count_pp(dims, budget),
    "paths": lambda dims, budget: signed_count_paths(dims, budget),
    "minorsum": lambda dims, budget: minor_sum(dims, budget),
    "pfaffian": lambda dims, budget: signed_count_pfaffian(dims),
}


@dataclass
class RunConfig:
    dims: tuple[int, int, int]
    method: str = "all"
    budget: int | None = None
    fmt: str = "text"
    out: str | None = None


@dataclass
class CountReport:
    dims: tuple[int, int, int]
    normalized: tuple[int, int, int]
    parity: str
    permutation: tuple[int, int, int]
    values: dict[str, int]
    seconds: dict[str, float]
    magnitude: int
    provably_zero: bool

    @property
    def agreement(self) -> bool:
        vals = list(self.values.values())
        if not vals:
            return True
        return all(v == vals[0] for v in vals) and abs(vals[0]) == self.magnitude

    @property
    def empirical_sign(self) -> int | None:
        vals = list(self.values.values())
        if not vals or not self.agreement:
            return None
        return 0 if vals[0] == 0 else (1 if vals[0] > 0 else -1)


def run_count(config: RunConfig) -> CountReport:
    dims = config.dims
    n = normalize_box(dims)
    selected = METHODS if config.method == "all" else ()
    if config.method in METHODS:
        selected = (config.method,)
    values: dict[str, int] = {}
    seconds: dict[str, float] = {}
    for name in selected:
        t0 = time.perf_counter()
        values[name] = _METHOD_FUNCS[name](dims, config.budget)
        seconds[name] = time.perf_counter() - t0
    closed = signed_count_closed(*dims)
    return CountReport(
        dims=dims,
        normalized=n.sides,
        parity=n.case.value,
        permutation=n.perm,
        values=values,
        seconds=seconds,
        magnitude=closed.magnitude,
        provably_zero=closed.provably_zero,
    )


def _count_payload(report: CountReport) -> dict:
    return {
        "command": "count",
        "box": {
            "input": list(report.dims),
            "normalized": list(report.normalized),
            "parity": report.parity,
            "permutation": list(report.permutation),
        },
        "methods": {name: {"value": str(v)} for name, v in report.values.items()},
        "closed": {
            "magnitude": str(report.magnitude),
            "provably_zero": report.provably_zero,
        },
        "empirical_sign": report.empirical_sign,
        "agreement": report.agreement,
    }


def _count_text(report: CountReport) -> str:
    a, b, c = report.dims
    lines = [
        f"box {a} x {b} x {c}  (normalized {report.normalized[0]} x "
        f"{report.normalized[1]} x {report.normalized[2]}, parity {report.parity}, "
        f"permutation {report.permutation})"
    ]
    if report.parity == "OOO":
        lines.append("note: all sides odd; no self-complementary plane partitions")
    lines.append(
        f"closed-form magnitude: {report.magnitude}"
        f"  provably zero: {'yes' if report.provably_zero else 'no'}"
    )
    for name in METHODS:
        if name in report.values:
            lines.append(f"{name:<11} {report.values[name]}")
    sign = report.empirical_sign
    lines.append(
        f"agreement: {'yes' if report.agreement else 'NO'}"
        f"  empirical sign: {'-' if sign is None else sign}"
    )
    return "\n".join(lines) + "\n"


def _count_csv(report: CountReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "c", "method", "value", "magnitude", "provably_zero", "agreement"])
    a, b, c = report.dims
    rows = [("closed", str(report.magnitude))]
    rows += [(name, str(report.values[name])) for name in METHODS if name in report.values]
    for name, value in rows:
        w.writerow([a, b, c, name, value, report.magnitude,
                    report.provably_zero, report.agreement])
    return buf.getvalue()


def _iter_boxes(max_cells: int):
    side = max_cells  # any side beyond this overshoots the cell cap
    for a in range(1, side + 1):
        if a > max_cells:
            break
        for b in range(1, side + 1):
            if a * b > max_cells:
                break
            for c in range(1, side + 1):
                if a * b * c > max_cells:
                    break
                yield (a, b, c)


def run_verify(max_cells: int, parity: str | None, budget: int | None) -> dict:
    boxes = []
    all_ok = True
    for dims in _iter_boxes(max_cells):
        n = normalize_box(dims)
        if parity is not None and n.case.value != parity:
            continue
        signed = {name: _METHOD_FUNCS[name](dims, budget) for name in METHODS}
        closed = signed_count_closed(*dims)
        sc_enum = sum(1 for _ in enumerate_sc(dims, budget))
        sc_formula = sc_count(*dims)
        sc_pf = sc_count_pfaffian(dims)
        vals = list(signed.values())
        ok = (
            all(v == vals[0] for v in vals)
            and abs(vals[0]) == closed.magnitude
            and closed.provably_zero == (closed.magnitude == 0)
            and sc_enum == sc_formula == sc_pf
        )
        all_ok = all_ok and ok
        boxes.append(
            {
                "box": list(dims),
                "parity": n.case.value,
                "signed": {name: str(v) for name, v in signed.items()},
                "magnitude": str(closed.magnitude),
                "provably_zero": closed.provably_zero,
                "sc": {
                    "enumerated": str(sc_enum),
                    "formula": str(sc_formula),
                    "pfaffian": str(sc_pf),
                },
                "ok": ok,
            }
        )
    return {
        "command": "verify",
        "max_cells": max_cells,
        "parity": parity,
        "checked": len(boxes),
        "all_ok": all_ok,
        "boxes": boxes,
    }


def _verify_text(payload: dict) -> str:
    lines = [
        f"{'box':<12} {'parity':<6} {'signed':>12} {'magnitude':>10} "
        f"{'sc':>10} {'status':>7}"
    ]
    for row in payload["boxes"]:
        a, b, c = row["box"]
        lines.append(
            f"{f'{a}x{b}x{c}':<12} {row['parity']:<6} "
            f"{row['signed']['pfaffian']:>12} {row['magnitude']:>10} "
            f"{row['sc']['formula']:>10} {'ok' if row['ok'] else 'FAIL':>7}"
        )
    lines.append(
        f"checked {payload['checked']} boxes up to {payload['max_cells']} cells: "
        f"{'all ok' if payload['all_ok'] else 'FAILURES'}"
    )
    return "\n".join(lines) + "\n"


def _verify_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        ["a", "b", "c", "parity", "bruteforce", "paths", "minorsum", "pfaffian",
         "magnitude", "provably_zero", "sc_enum", "sc_formula", "sc_pfaffian", "ok"]
    )
    for row in payload["boxes"]:
        w.writerow(
            row["box"]
            + [row["parity"]]
            + [row["signed"][m] for m in METHODS]
            + [row["magnitude"], row["provably_zero"], row["sc"]["enumerated"],
               row["sc"]["formula"], row["sc"]["pfaffian"], row["ok"]]
        )
    return buf.getvalue()


def run_render(dims, selector: str, index: int | None, out_dir: str,
               budget: int | None) -> tuple[list[str], str]:
    """Write the selected SVGs; returns (paths written, message)."""
    a, b, c = dims
    if a % 2 == 1 and b % 2 == 1 and c % 2 == 1:
        return [], f"box {a}x{b}x{c}: all sides odd, no self-complementary plane partitions"
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[str] = []
    if selector == "reference":
        ref = reference_pp(dims)
        path = out / f"sc_{a}x{b}x{c}_ref_p.svg"
        path.write_text(render_svg(ref), encoding="utf-8")
        written.append(str(path))
        return written, f"wrote reference tiling for {a}x{b}x{c}"
    ref = reference_pp(dims)
    partitions = list(enumerate_sc(dims, budget))
    if selector == "index":
        if index is None or not 0 <= index < len(partitions):
            raise IndexError(
                f"index {index} out of range; box has {len(partitions)} "
                f"self-complementary plane partitions"
            )
        chosen = [(index, partitions[index])]
    else:
        chosen = list(enumerate(partitions))
    from .pp import sign_of

    for i, p in chosen:
        tag = "p" if sign_of(p, ref) > 0 else "m"
        path = out / f"sc_{a}x{b}x{c}_{i:03d}_{tag}.svg"
        path.write_text(render_svg(p), encoding="utf-8")
        written.append(str(path))
    return written, f"wrote {len(written)} tiling(s) for {a}x{b}x{c}"


def _experiment_payload(report) -> dict:
    return {
        "command": "experiment",
        "a": report.a,
        "b": report.b,
        "grid": list(report.grid),
        "slices": [
            {
                "variable": s.variable,
                "fixed": dict(s.fixed),
                "degree": s.degree,
                "coefficients": list(s.coefficients),
                "scalar": s.scalar,
                "roots": list(s.roots),
                "residual": None if s.residual is None else list(s.residual),
                "splits_linearly": s.splits_linearly,
            }
            for s in report.slices
        ],
        "all_split": report.all_split,
    }


def _experiment_text(report) -> str:
    lines = [
        f"four-variable Pfaffian slices, a={report.a} b={report.b} "
        f"grid={list(report.grid)}"
    ]
    for s in report.slices:
        fixed = " ".join(f"{k}={v}" for k, v in s.fixed)
        if s.splits_linearly:
            desc = f"scalar {s.scalar}" + (f", roots {', '.join(s.roots)}" if s.roots else "")
            lines.append(f"{s.variable}: [{fixed}] degree {s.degree}: linear split ({desc})")
        else:
            lines.append(
                f"{s.variable}: [{fixed}] degree {s.degree}: RESIDUAL {list(s.residual)}"
            )
    lines.append(
        f"{len(report.slices)} slices; "
        + ("every slice splits into linear rational factors"
           if report.all_split else "SOME SLICES DID NOT SPLIT (see residuals)")
    )
    return "\n".join(lines) + "\n"


def _parse_grid(spec: str) -> list[int]:
    spec = spec.strip()
    try:
        if ":" in spec:
            lo, hi = spec.split(":")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(tok) for tok in spec.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"malformed grid {spec!r}; use LO:HI or v1,v2,...") from None


class _Parser(argparse.ArgumentParser):
    """Argument parser that exits with code 3 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="scpp",
        description="Exact enumeration of self-complementary plane partitions "
        "in a box, signed and unsigned, by independent methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_box_args(p):
        p.add_argument("--a", type=int, required=True, help="first box side")
        p.add_argument("--b", type=int, required=True, help="second box side")
        p.add_argument("--c", type=int, required=True, help="third box side")

    pc = sub.add_parser("count", help="count one box by one or all methods")
    add_box_args(pc)
    pc.add_argument("--method", choices=("closed",) + METHODS + ("all",), default="all")
    pc.add_argument("--budget", type=int, default=None,
                    help="override every enumeration guard with this value")
    pc.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="text")
    pc.add_argument("--out", default=None, help="write the report to this file")

    pv = sub.add_parser("verify", help="cross-check all methods on small boxes")
    pv.add_argument("--max-cells", type=int, default=27, help="bound on a*b*c")
    pv.add_argument("--parity", choices=[c.value for c in ParityCase], default=None)
    pv.add_argument("--budget", type=int, default=None)
    pv.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="text")
    pv.add_argument("--out", default=None)

    pr = sub.add_parser("render", help="write lozenge tiling SVGs")
    add_box_args(pr)
    group = pr.add_mutually_exclusive_group(required=True)
    group.add_argument("--index", type=int, default=None,
                       help="render the i-th self-complementary partition")
    group.add_argument("--all", action="store_true", help="render every one")
    group.add_argument("--reference", action="store_true",
                       help="render the half-full reference partition")
    pr.add_argument("--budget", type=int, default=None)
    pr.add_argument("--out", default=".", help="output directory")

    pe = sub.add_parser("experiment",
                        help="factor univariate slices of the four-variable Pfaffian")
    pe.add_argument("--a", type=int, required=True, help="matrix size (even, <= 6)")
    pe.add_argument("--b", type=int, default=3, help="odd structural parameter")
    pe.add_argument("--grid", default="0:4", help="grid as LO:HI or v1,v2,...")
    pe.add_argument("--format", dest="fmt", choices=("json", "text"), default="text")
    pe.add_argument("--out", default=None)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            config = RunConfig(dims=(args.a, args.b, args.c), method=args.method,
                               budget=args.budget, fmt=args.fmt, out=args.out)
            report = run_count(config)
            for name, secs in report.seconds.items():
                print(f"{name}: {secs:.3f}s", file=sys.stderr)
            if args.fmt == "json":
                text = json.dumps(_count_payload(report), indent=2) + "\n"
            elif args.fmt == "csv":
                text = _count_csv(report)
            else:
                text = _count_text(report)
            _emit(text, args.out)
            if args.method == "all" and not report.agreement:
                return 1
            return 0
        if args.command == "verify":
            t0 = time.perf_counter()
            payload = run_verify(args.max_cells, args.parity, args.budget)
            print(f"verify: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
            if args.fmt == "json":
                text = json.dumps(payload, indent=2) + "\n"
            elif args.fmt == "csv":
                text = _verify_csv(payload)
            else:
                text = _verify_text(payload)
            _emit(text, args.out)
            return 0 if payload["all_ok"] else 1
        if args.command == "render":
            selector = "reference" if args.reference else ("all" if args.all else "index")
            try:
                written, message = run_render(
                    (args.a, args.b, args.c), selector, args.index, args.out, args.budget
                )
            except IndexError as exc:
                parser.error(str(exc))
            for path in written:
                print(path)
            print(message)
            return 0
        # experiment
        if args.a % 2 != 0 or not 0 <= args.a <= 6:
            parser.error("--a must be even with 0 <= a <= 6")
        if args.b % 2 != 1 or args.b < 1:
            parser.error("--b must be odd and positive")
        try:
            grid = _parse_grid(args.grid)
        except ValueError as exc:
            parser.error(str(exc))
        report = factorization_experiment(args.a, args.b, grid)
        if args.fmt == "json":
            text = json.dumps(_experiment_payload(report), indent=2) + "\n"
        else:
            text = _experiment_text(report)
        _emit(text, args.out)
        return 0
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
