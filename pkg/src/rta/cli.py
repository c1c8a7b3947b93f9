"""Command-line entry point.

Subcommands map one-to-one onto the library modules: pell / npell for
sequence values, classify / represent for the form arithmetic, quartic
for evaluating, verifying, constructing and inverting solution tuples,
scan for the systematic search, growth for the exponential-growth
checks, and verify-paper for the bundled verification suite.

All structured output is JSON on stdout with big integers as decimal
strings; progress and diagnostics go to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage error.  Stdout bytes are identical
across runs and thread counts for identical inputs; timing fields only
appear under --timings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .arith import Budget, DEFAULT_BUDGET, HARD_BUDGET
from .fixtures import (
    FUNDAMENTAL_SOLUTIONS,
    INERT_RESIDUES,
    RESIDUE_MODULUS,
    SPLIT_RESIDUES,
    bundled_solutions_text,
    load_solutions,
)
from .growth import check_growth_lower_bound, check_matiyasevich, check_robinson, interval_even, j_params
from .normform import FormVariant, Witness, classify_prime, representable
from .pell import HEEGNER_DS, npell, nth
from .quartic import (
    QUARTIC_DS,
    QuarticTuple,
    evaluate,
    is_nontrivial,
    is_solution,
    pell_from_solution,
    pell_index_of,
    quartic_spec,
    solution_from_pell,
)
from .scan import HintMap, scan_d2, scan_odd_d
from .verify import run_all, run_check

__all__ = ["Config", "load_solutions", "main", "run"]

_GROWTH_DS = (2, 3, 7, 11, 19, 43)


@dataclass(frozen=True)
class Config:
    """Global knobs shared by the subcommand handlers."""

    budget: Budget = DEFAULT_BUDGET
    json_output: bool = False  # compact single-line JSON instead of indented
    hints_path: Optional[Path] = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


def _emit(obj, config: Config) -> None:
    if config.json_output:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(json.dumps(obj, indent=2))


def _parse_pair(text: str) -> Witness:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 'w,t', got {text!r}")
    return (int(parts[0]), int(parts[1]))


def _parse_tuple(text: str) -> QuarticTuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected 'r,s,u,v', got {text!r}")
    return QuarticTuple(*(int(p) for p in parts))


def _resolve_budget(args: argparse.Namespace) -> Budget:
    profile = getattr(args, "budget", None)
    if profile is None:
        profile = os.environ.get("RTA_BUDGET_PROFILE", "default")
        if profile not in ("default", "hard"):
            raise ValueError(
                f"RTA_BUDGET_PROFILE must be 'default' or 'hard', got {profile!r}"
            )
    return HARD_BUDGET if profile == "hard" else DEFAULT_BUDGET


def _cmd_pell(args: argparse.Namespace, config: Config) -> int:
    p = nth(args.d, args.k)
    _emit({"x": str(p.x), "y": str(p.y)}, config)
    return 0


def _cmd_npell(args: argparse.Namespace, config: Config) -> int:
    p = npell(args.n)
    _emit({"A": str(p.a), "B": str(p.b)}, config)
    return 0


def _cmd_classify(args: argparse.Namespace, config: Config) -> int:
    cls = classify_prime(args.d, args.p)
    _emit({"d": args.d, "p": str(args.p), "class": cls.value}, config)
    return 0


def _cmd_represent(args: argparse.Namespace, config: Config) -> int:
    variant = FormVariant.pure(args.d) if args.pure else FormVariant.norm(args.d)
    hint = _parse_pair(args.hint) if args.hint else None
    verdict = representable(variant, args.m, config.budget, hint=hint)
    out = {"d": args.d, "m": str(args.m), "form": variant.label()}
    out.update(verdict.to_json())
    _emit(out, config)
    return 0


def _cmd_quartic(args: argparse.Namespace, config: Config) -> int:
    spec = quartic_spec(args.d)
    if args.action == "eval":
        tup = _parse_tuple(args.tuple)
        _emit(
            {
                "d": args.d,
                "value": str(evaluate(spec, tup)),
                "is_solution": is_solution(spec, tup),
                "nontrivial": is_nontrivial(spec, tup),
            },
            config,
        )
        return 0
    if args.action == "verify":
        sols = load_solutions(args.file)
        rows, failures = [], 0
        for i, (d, tup) in enumerate(sols):
            if d != args.d:
                continue
            ok = is_solution(spec, tup)
            row = {"entry": i, "is_solution": ok, "nontrivial": is_nontrivial(spec, tup)}
            if ok:
                try:
                    pair = pell_from_solution(spec, tup)
                    row["index"] = pair.n if args.d == 2 else pell_index_of(args.d, pair.x)
                except ValueError as exc:
                    row["index"] = None
                    row["note"] = str(exc)
            else:
                failures += 1
            rows.append(row)
        _emit(rows, config)
        return 1 if failures else 0
    if args.action == "construct":
        tup = solution_from_pell(args.d, args.ell, _parse_pair(args.wit1), _parse_pair(args.wit2))
        _emit(tup.to_json(args.d), config)
        return 0
    # invert
    tup = _parse_tuple(args.tuple)
    try:
        pair = pell_from_solution(spec, tup)
    except ValueError as exc:
        print(f"inversion failed: {exc}", file=sys.stderr)
        return 1
    if args.d == 2:
        _emit({"d": 2, "n": pair.n, "A": str(pair.a), "B": str(pair.b)}, config)
    else:
        _emit(
            {
                "d": args.d,
                "ell": pell_index_of(args.d, pair.x),
                "X": str(pair.x),
                "Y": str(pair.y),
                "F1": str(pair.form1_value),
                "F2": str(pair.form2_value),
            },
            config,
        )
    return 0


def _hints_from_file(path: Path) -> HintMap:
    """Turn a solutions file into per-side witness hints for the d=2 scan."""
    hints: dict[tuple[str, int], Witness] = {}
    for _, tup in (pair for pair in load_solutions(path) if pair[0] == 2):
        form = FormVariant.pure(2)
        a, b = form.value(tup.r, tup.s), form.value(tup.u, tup.v)
        n = pell_index_of("npell", a, b)
        if n is None:
            print(
                "hint skipped: tuple does not lie on the companion sequence",
                file=sys.stderr,
            )
            continue
        hints[("A", n)] = (tup.r, tup.s)
        hints[("B", n)] = (tup.u, tup.v)
    return hints


def _cmd_scan(args: argparse.Namespace, config: Config) -> int:
    lo, hi = args.from_n, args.to
    if args.d == 2:
        hints = _hints_from_file(config.hints_path) if config.hints_path else None
        reports = scan_d2((lo, hi), config.budget, hints, threads=config.threads)
    else:
        reports = scan_odd_d(args.d, (lo, hi), config.budget, threads=config.threads)
    for rep in reports:
        print(f"index={rep.index} {rep.overall.kind}", file=sys.stderr)
    payload = [rep.to_json(timings=args.timings) for rep in reports]
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {args.json}", file=sys.stderr)
    else:
        _emit(payload, config)
    if args.report_dir:
        from .report import render_scan_report

        for path in render_scan_report(reports, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_growth(args: argparse.Namespace, config: Config) -> int:
    failed = False
    if args.check == "fact31":
        n_max = args.to or 300
        holds = check_growth_lower_bound(args.d, n_max)
        out = {"check": "fact31", "d": args.d, "n_max": n_max, "holds": holds}
        failed = not holds
        if args.report_dir:
            from .report import render_growth_report

            for path in render_growth_report(args.d, min(n_max, 400), args.report_dir):
                print(f"wrote {path}", file=sys.stderr)
    elif args.check == "fact32":
        w_max = args.to or 10**5
        first_bad = next((w for w in range(1, w_max + 1) if interval_even(w) is None), None)
        out = {
            "check": "fact32",
            "w_max": w_max,
            "all_nonempty": first_bad is None,
            "first_failure": first_bad,
        }
        failed = first_bad is not None
    elif args.check == "matiyasevich":
        w_max = args.to or 10**4
        report = check_matiyasevich(args.d, range(1, w_max + 1))
        out = {"check": "matiyasevich", **report.to_json(verbose=args.verbose)}
        failed = not report.all_ok
    else:  # robinson
        if args.ells:
            ells = [int(p) for p in args.ells.split(",")]
        else:
            first = j_params(args.d).ell_min + 1
            ells = list(range(first, first + 4))
        holds = check_robinson(args.d, ells, k=args.k)
        out = {"check": "robinson", "d": args.d, "ells": ells, "k": args.k, "holds": holds}
        failed = not holds
    _emit(out, config)
    return 1 if failed else 0


def _dump_fixtures(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "solutions_d2.json").write_text(bundled_solutions_text())
    tables = {
        "fundamental_solutions": {
            str(d): {"x1": str(x), "y1": str(y)} for d, (x, y) in FUNDAMENTAL_SOLUTIONS.items()
        },
        "residue_tables": {
            str(d): {
                "modulus": RESIDUE_MODULUS[d],
                "inert": sorted(INERT_RESIDUES[d]),
                "representable": sorted(SPLIT_RESIDUES[d]),
            }
            for d in RESIDUE_MODULUS
        },
    }
    (outdir / "reference_tables.json").write_text(json.dumps(tables, indent=2) + "\n")
    print(f"wrote {outdir / 'solutions_d2.json'}", file=sys.stderr)
    print(f"wrote {outdir / 'reference_tables.json'}", file=sys.stderr)


def _cmd_verify(args: argparse.Namespace, config: Config) -> int:
    if args.dump_fixtures:
        _dump_fixtures(Path(args.out))
        return 0
    results = [run_check(args.only)] if args.only else list(run_all())
    for res in results:
        print(res.line())
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rta",
        description="Pell sequences, quadratic-form representability, and the "
        "associated quartic equations over the Heegner discriminants.",
    )
    parser.add_argument(
        "--compact", action="store_true", help="single-line JSON instead of indented"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_budget(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--budget",
            choices=("default", "hard"),
            default=None,
            help="factoring effort profile (default: $RTA_BUDGET_PROFILE or 'default')",
        )

    p = sub.add_parser("pell", help="x_k, y_k of x^2 - d y^2 = 1")
    p.add_argument("--d", type=int, choices=HEEGNER_DS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_pell)

    p = sub.add_parser("npell", help="A_n, B_n of 2 A^2 - B^2 = 1")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_npell)

    p = sub.add_parser("classify", help="splitting class of a prime")
    p.add_argument("--d", type=int, choices=HEEGNER_DS, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("represent", help="decide representability of m")
    p.add_argument("--d", type=int, choices=HEEGNER_DS, required=True)
    p.add_argument("--m", type=int, required=True, help="decimal value to test")
    p.add_argument("--pure", action="store_true", help="use w^2 + d t^2 instead of the norm form")
    p.add_argument("--hint", help="claimed witness 'w,t'")
    add_budget(p)
    p.set_defaults(handler=_cmd_represent)

    p = sub.add_parser("quartic", help="work with the quartic equations")
    qsub = p.add_subparsers(dest="action", required=True)
    for action in ("eval", "verify", "construct", "invert"):
        q = qsub.add_parser(action)
        q.add_argument("--d", type=int, choices=QUARTIC_DS, required=True)
        if action in ("eval", "invert"):
            q.add_argument("--tuple", required=True, help="solution tuple 'r,s,u,v'")
        if action == "verify":
            q.add_argument("--file", help="solutions JSON (bundled file when omitted)")
        if action == "construct":
            q.add_argument("--ell", type=int, required=True)
            q.add_argument("--wit1", required=True, help="witness 'w,t' for the first form")
            q.add_argument("--wit2", required=True, help="witness 'w,t' for the second form")
        q.set_defaults(handler=_cmd_quartic)

    p = sub.add_parser("scan", help="scan indices for simultaneous representability")
    p.add_argument("--d", type=int, choices=QUARTIC_DS, required=True)
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--json", help="write the report array to this file")
    p.add_argument("--hints", help="solutions JSON supplying witness hints (d=2 only)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include elapsed_ms per index")
    p.add_argument("--report-dir", help="also render CSV and PNG summaries here")
    add_budget(p)
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("growth", help="exponential-growth checks")
    p.add_argument("--d", type=int, choices=_GROWTH_DS, required=True)
    p.add_argument(
        "--check", choices=("fact31", "fact32", "matiyasevich", "robinson"), required=True
    )
    p.add_argument("--to", type=int, help="range cap (n for fact31, w otherwise)")
    p.add_argument("--ells", help="comma-separated indices for robinson")
    p.add_argument("--k", type=int, default=1, help="unboundedness exponent for robinson")
    p.add_argument("--verbose", action="store_true", help="per-w entries for matiyasevich")
    p.add_argument("--report-dir", help="render CSV and PNG for fact31")
    p.set_defaults(handler=_cmd_growth)

    p = sub.add_parser("verify-paper", help="run the bundled verification suite")
    p.add_argument("--only", type=int, help="run a single numbered check")
    p.add_argument("--dump-fixtures", action="store_true", help="export bundled fixtures and exit")
    p.add_argument("--out", default=".", help="directory for --dump-fixtures")
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(40_000_000)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        budget = _resolve_budget(args)
        config = Config(
            budget=budget,
            json_output=getattr(args, "compact", False),
            hints_path=Path(args.hints) if getattr(args, "hints", None) else None,
            threads=getattr(args, "threads", 1),
        )
        if args.cmd == "growth" and args.check == "matiyasevich" and args.d not in (2, 19):
            parser.error("matiyasevich supports --d 2 or --d 19")
        return args.handler(args, config)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
