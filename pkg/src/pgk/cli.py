"""Command-line front end: per-n reports, separator listings, bulk sweeps.

Subcommands
    kappa N        connectivity of P(C_N): formula vs computation, agreement
    separators N   constructed or exhaustively enumerated minimum separators
    bound N        the upper bound for the not-exactly-solved case
    example2310    the n = 2310 certificate beating that bound
    sweep          one report row per n over a range, JSON lines or CSV

Exit codes: 0 success/agreement, 1 usage error, 2 verification mismatch (a
formula, oracle, or bound check failed -- the falsification signal).
JSON objects carry "schema": "pgk/1"; CSV columns are fixed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, TextIO

from .arith import factorize, totient
from .connectivity import kappa_class, verify_witness
from .element_oracle import element_guard, kappa_element_oracle
from .formulas import CASE_II_BOUND, R3_EXACT, classify, kappa_formula, upper_bound_ii
from .quotient import build_quotient
from .separators import (
    ClassSeparator,
    check_disconnects,
    enumerate_min_separators,
    example_2310,
    optimal_Z,
)

SCHEMA = "pgk/1"
CSV_COLUMNS = (
    "n",
    "r",
    "case",
    "kappa_formula",
    "kappa_computed",
    "bound_ii",
    "agreement",
    "n_min_separators",
    "ms",
)
ENUM_GUARD = 24


@dataclass(frozen=True)
class Report:
    """One row of verification output for a single n."""

    n: int
    factorization: tuple[tuple[int, int], ...]
    case_tag: str
    kappa_computed: int
    kappa_formula: int | None = None
    kappa_element: int | None = None
    bound_ii: int | None = None
    min_separators: tuple[tuple[int, ...], ...] | None = None
    agreement: bool = True
    ms: float = 0.0

    @property
    def r(self) -> int:
        return len(self.factorization)

    @property
    def bound_strict(self) -> bool | None:
        if self.bound_ii is None:
            return None
        return self.kappa_computed < self.bound_ii

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "factorization": [list(pe) for pe in self.factorization],
            "case": self.case_tag,
            "kappa_formula": self.kappa_formula,
            "kappa_computed": self.kappa_computed,
            "kappa_element": self.kappa_element,
            "bound_ii": self.bound_ii,
            "bound_strict": self.bound_strict,
            "agreement": self.agreement,
            "n_min_separators": None
            if self.min_separators is None
            else len(self.min_separators),
            "min_separators": None
            if self.min_separators is None
            else [sorted(s) for s in self.min_separators],
            "ms": self.ms,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema: {data.get('schema')!r}")
        seps = data.get("min_separators")
        return cls(
            n=data["n"],
            factorization=tuple((p, e) for p, e in data["factorization"]),
            case_tag=data["case"],
            kappa_computed=data["kappa_computed"],
            kappa_formula=data.get("kappa_formula"),
            kappa_element=data.get("kappa_element"),
            bound_ii=data.get("bound_ii"),
            min_separators=None if seps is None else tuple(tuple(s) for s in seps),
            agreement=data["agreement"],
            ms=data["ms"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> list[str]:
        def cell(value) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)

        return [
            cell(v)
            for v in (
                self.n,
                self.r,
                self.case_tag,
                self.kappa_formula,
                self.kappa_computed,
                self.bound_ii,
                self.agreement,
                None if self.min_separators is None else len(self.min_separators),
                round(self.ms, 3),
            )
        ]


def build_report(n: int, *, use_element: bool = False, element_max_n: int | None = None) -> Report:
    """Compute everything known about n and package the agreement verdict."""
    start = time.perf_counter()
    f = factorize(n)
    c = classify(f)
    formula = kappa_formula(f)
    bound = upper_bound_ii(f) if c.tag in (CASE_II_BOUND, R3_EXACT) else None
    g = build_quotient(n)
    hint = optimal_Z(f).classes if f.r >= 2 else None
    computed = kappa_class(g, certified_hint=hint).kappa
    element = (
        kappa_element_oracle(n, max_n=element_max_n).kappa if use_element else None
    )
    agreement = (
        (formula is None or formula == computed)
        and (element is None or element == computed)
        and (bound is None or computed <= bound)
    )
    ms = (time.perf_counter() - start) * 1000.0
    return Report(
        n=n,
        factorization=f.factors,
        case_tag=c.tag if formula is not None else "computed-only",
        kappa_computed=computed,
        kappa_formula=formula,
        kappa_element=element,
        bound_ii=bound,
        agreement=agreement,
        ms=ms,
    )


def _factor_str(factors: Iterable[tuple[int, int]]) -> str:
    parts = [f"{p}^{e}" if e > 1 else f"{p}" for p, e in factors]
    return " * ".join(parts) if parts else "1"


def _print_report(report: Report, out: TextIO) -> None:
    print(f"n = {report.n} = {_factor_str(report.factorization)}", file=out)
    print(f"case: {report.case_tag}", file=out)
    print(f"kappa (computed): {report.kappa_computed}", file=out)
    if report.kappa_formula is not None:
        print(f"kappa (formula):  {report.kappa_formula}", file=out)
    else:
        print("kappa (formula):  none known for this case", file=out)
    if report.kappa_element is not None:
        print(f"kappa (element oracle): {report.kappa_element}", file=out)
    if report.bound_ii is not None:
        relation = "< bound, strict" if report.bound_strict else "= bound, tight"
        print(
            f"upper bound: {report.bound_ii} "
            f"(computed {report.kappa_computed} {relation})",
            file=out,
        )
    print(f"agreement: {'yes' if report.agreement else 'NO -- MISMATCH'}", file=out)


def _witness_dict(sep: ClassSeparator) -> dict | None:
    if sep.witness is None:
        return None
    return {
        "removed": sorted(sep.witness.removed),
        "block_a": sorted(sep.witness.block_a),
        "block_b": sorted(sep.witness.block_b),
    }


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; exit code 2 is reserved for verification mismatches
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"n must be >= 1, got {value}")
    return value


def cmd_kappa(args: argparse.Namespace) -> int:
    n = args.n
    use_element = args.method in ("element", "both")
    if use_element and n > element_guard() and not args.force:
        print(
            f"error: n={n} exceeds the element-oracle guard {element_guard()}; "
            "use --force or PGK_ELEMENT_GUARD",
            file=sys.stderr,
        )
        return 1
    element_max = n if (use_element and args.force) else None
    report = build_report(n, use_element=use_element, element_max_n=element_max)
    if args.method == "element":
        assert report.kappa_element is not None
        report = Report(
            n=report.n,
            factorization=report.factorization,
            case_tag=report.case_tag,
            kappa_computed=report.kappa_element,
            kappa_formula=report.kappa_formula,
            kappa_element=report.kappa_element,
            bound_ii=report.bound_ii,
            agreement=report.agreement,
            ms=report.ms,
        )
    if args.json:
        print(report.to_json())
    else:
        _print_report(report, sys.stdout)
    return 0 if report.agreement else 2


def cmd_separators(args: argparse.Namespace) -> int:
    n = args.n
    g = build_quotient(n)
    if g.is_complete:
        if args.json:
            print(
                json.dumps(
                    {
                        "schema": SCHEMA,
                        "n": n,
                        "complete": True,
                        "kappa": n - 1,
                        "separators": [],
                    },
                    sort_keys=True,
                )
            )
        else:
            print(f"complete graph, kappa = {n - 1}; no separator exists")
        return 0
    kappa = kappa_class(g, certified_hint=optimal_Z(factorize(n)).classes).kappa
    if args.all_min:
        if len(g.divisors) > ENUM_GUARD and not args.force:
            print(
                f"error: tau(n) = {len(g.divisors)} exceeds the enumeration "
                f"guard {ENUM_GUARD}; use --force",
                file=sys.stderr,
            )
            return 1
        seps = enumerate_min_separators(g, kappa, force=args.force)
    else:
        sep = optimal_Z(factorize(n))
        if args.witness:
            sep = replace(sep, witness=check_disconnects(sep))
        seps = [sep]
    if args.json:
        payload = {
            "schema": SCHEMA,
            "n": n,
            "complete": False,
            "kappa": kappa,
            "separators": [
                {
                    "classes": sorted(s.classes),
                    "weight": s.weight,
                    "label": s.label,
                    "note": s.note or None,
                    "witness": _witness_dict(s) if args.witness else None,
                }
                for s in seps
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"n = {n}, kappa = {kappa}")
        for s in seps:
            line = f"  {s.label or 'separator'}: classes {sorted(s.classes)}, weight {s.weight}"
            if s.note:
                line += f" ({s.note})"
            print(line)
            if args.witness and s.witness is not None:
                print(f"    block A: {sorted(s.witness.block_a)}")
                print(f"    block B: {sorted(s.witness.block_b)}")
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    n = args.n
    f = factorize(n)
    c = classify(f)
    if c.tag not in (CASE_II_BOUND, R3_EXACT):
        print(
            f"error: the upper bound needs 2*phi(P) < P; n={n} is {c.tag} "
            f"(P={c.P}, phi(P)={c.phiP})",
            file=sys.stderr,
        )
        return 1
    bound = upper_bound_ii(f)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "n": n,
                    "case": c.tag,
                    "P": c.P,
                    "phiP": c.phiP,
                    "bound_ii": bound,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"n = {n} = {_factor_str(f.factors)}")
        print(f"case: {c.tag} (P = {c.P}, phi(P) = {c.phiP}, 2*phi(P) < P)")
        print(f"kappa <= {bound} = phi(n) + {bound - totient(n)}")
        if c.tag == R3_EXACT:
            print("r = 3, so this bound is the exact value")
    return 0


def cmd_example2310(args: argparse.Namespace) -> int:
    sep = example_2310()
    f = factorize(sep.n)
    bound = upper_bound_ii(f)
    phi = totient(sep.n)
    g = build_quotient(sep.n)
    ok = (
        sep.weight == phi + 150
        and sep.witness is not None
        and verify_witness(g, sep.witness)
        and sep.witness.block_a == frozenset({30})
        and sep.weight < bound
    )
    if args.json:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "n": sep.n,
                    "classes": sorted(sep.classes),
                    "weight": sep.weight,
                    "phi_n": phi,
                    "bound_ii": bound,
                    "bound_strict": sep.weight < bound,
                    "witness": _witness_dict(sep),
                    "verified": ok,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"n = 2310 = {_factor_str(f.factors)}")
        print(f"separator classes: {sorted(sep.classes)}")
        print(f"|X| = {sep.weight} = phi(n) + {sep.weight - phi}")
        print(f"upper bound: {bound} = phi(n) + {bound - phi}")
        print(f"strictly below the bound: {sep.weight} < {bound}")
        assert sep.witness is not None
        print(f"witness block A: {sorted(sep.witness.block_a)}")
        print(f"verified: {'yes' if ok else 'NO'}")
    return 0 if ok else 2


def _sweep_row(task: tuple[int, int]) -> Report:
    n, oracle_max = task
    # an explicit --oracle-max-n overrides the default element-oracle guard
    return build_report(
        n, use_element=n <= oracle_max, element_max_n=oracle_max or None
    )


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max_n < 2:
        print("error: --max-n must be >= 2", file=sys.stderr)
        return 1
    ns = sorted(set(range(2, args.max_n + 1)) | set(args.extra))
    tasks = [(n, args.oracle_max_n) for n in ns]
    start = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_sweep_row, tasks, chunksize=16))
    else:
        reports = [_sweep_row(t) for t in tasks]

    if args.out:
        try:
            sink = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        summary_sink = sys.stdout
    else:
        sink = sys.stdout
        summary_sink = sys.stderr
    try:
        if args.format == "csv":
            print(",".join(CSV_COLUMNS), file=sink)
            for report in reports:
                print(",".join(report.csv_row()), file=sink)
        else:
            for report in reports:
                print(report.to_json(), file=sink)
    finally:
        if sink is not sys.stdout:
            sink.close()

    cases: dict[str, int] = {}
    for report in reports:
        cases[report.case_tag] = cases.get(report.case_tag, 0) + 1
    mismatches = [r.n for r in reports if not r.agreement]
    strict = [r.n for r in reports if r.bound_strict]
    summary = {
        "schema": SCHEMA,
        "summary": True,
        "rows": len(reports),
        "cases": dict(sorted(cases.items())),
        "mismatches": mismatches,
        "bound_strict": strict,
        "oracle_checked": sum(1 for r in reports if r.kappa_element is not None),
        "ms_total": round((time.perf_counter() - start) * 1000.0, 1),
    }
    print(json.dumps(summary, sort_keys=True), file=summary_sink)
    return 2 if mismatches else 0


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pgk",
        description="Vertex connectivity of power graphs of cyclic groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_kappa = sub.add_parser("kappa", help="connectivity of P(C_n)")
    p_kappa.add_argument("n", type=_positive_int)
    p_kappa.add_argument(
        "--method", choices=("class", "element", "both"), default="class"
    )
    p_kappa.add_argument("--json", action="store_true")
    p_kappa.add_argument(
        "--force", action="store_true", help="override the element-oracle size guard"
    )
    p_kappa.set_defaults(func=cmd_kappa)

    p_sep = sub.add_parser("separators", help="minimum separators of P(C_n)")
    p_sep.add_argument("n", type=_positive_int)
    p_sep.add_argument(
        "--all-min", action="store_true", help="enumerate every minimum separator"
    )
    p_sep.add_argument("--witness", action="store_true", help="include block partitions")
    p_sep.add_argument("--json", action="store_true")
    p_sep.add_argument(
        "--force", action="store_true", help="override the enumeration guard"
    )
    p_sep.set_defaults(func=cmd_separators)

    p_bound = sub.add_parser("bound", help="upper bound when 2*phi(P) < P")
    p_bound.add_argument("n", type=_positive_int)
    p_bound.add_argument("--json", action="store_true")
    p_bound.set_defaults(func=cmd_bound)

    p_ex = sub.add_parser(
        "example2310", help="print and verify the n = 2310 certificate"
    )
    p_ex.add_argument("--json", action="store_true")
    p_ex.set_defaults(func=cmd_example2310)

    p_sweep = sub.add_parser("sweep", help="bulk verification over a range of n")
    p_sweep.add_argument("--max-n", type=int, required=True)
    p_sweep.add_argument(
        "--oracle-max-n",
        type=int,
        default=0,
        help="also run the element oracle for n up to this value (0 = never)",
    )
    p_sweep.add_argument("--out", type=str, default=None)
    p_sweep.add_argument("--format", choices=("json", "csv"), default="json")
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument(
        "--extra",
        type=_positive_int,
        action="append",
        default=[],
        help="additional n beyond the range (repeatable)",
    )
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
