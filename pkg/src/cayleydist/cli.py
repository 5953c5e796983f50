"""Command-line front end: psi, count, table, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
bound exceeded. Data output is byte-deterministic for fixed flags;
timestamps only appear behind --verbose.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import burnside, closedform, oracle, verify
from .groups import (
    GroupTable,
    ResourceLimitError,
    automorphisms,
    cyclic,
    dihedral,
    direct_product,
    from_table_text,
    inner_automorphisms,
)
from .numtheory import factorize
from .poly import ExactDivisionError, IntPoly

CSV_HEADER = "n,label,relation,method,polynomial,count,verdict"


class UsageError(ValueError):
    pass


@dataclass
class GroupSpec:
    family: str
    text: str
    group: GroupTable


def parse_group(text: str) -> GroupSpec:
    """zn:N | dn:N | product:zn:4,zn:5 | table-file:PATH"""
    head, sep, rest = text.partition(":")
    if not sep:
        raise UsageError(f"bad group spec {text!r}, expected family:params")
    if head == "zn":
        n = _positive_int(rest, "zn order")
        if n < 2:
            raise UsageError("group must have order >= 2")
        return GroupSpec("zn", text, cyclic(n))
    if head == "dn":
        n = _positive_int(rest, "dn parameter")
        return GroupSpec("dn", text, dihedral(n))
    if head == "product":
        parts = rest.split(",")
        if len(parts) < 2:
            raise UsageError("product needs at least two factors")
        groups = [parse_group(p).group for p in parts]
        acc = groups[0]
        for g in groups[1:]:
            acc = direct_product(acc, g)
        if acc.order < 2:
            raise UsageError("group must have order >= 2")
        return GroupSpec("product", text, acc)
    if head == "table-file":
        try:
            with open(rest, "r", encoding="utf-8") as fh:
                group = from_table_text(fh.read(), label=rest)
        except OSError as exc:
            raise UsageError(f"cannot read table file: {exc}") from exc
        if group.order < 2:
            raise UsageError("group must have order >= 2")
        return GroupSpec("table-file", text, group)
    raise UsageError(f"unknown group family {head!r}")


def _positive_int(text: str, what: str) -> int:
    try:
        n = int(text)
    except ValueError as exc:
        raise UsageError(f"{what} must be an integer, got {text!r}") from exc
    if n < 1:
        raise UsageError(f"{what} must be >= 1")
    return n


def _closed_form_psi(spec: GroupSpec, relation: str, literal: bool) -> IntPoly:
    group = spec.group
    if relation == "equiv":
        if spec.family == "zn":
            return closedform.psi_equiv_cyclic(group.order)
        if spec.family == "dn":
            return closedform.psi_equiv_dihedral(group.order // 2, literal=literal)
        if group.is_abelian:
            return closedform.psi_equiv_abelian(group)
        raise UsageError(f"no closed equivalence form for {spec.text}")
    if spec.family == "zn":
        poly = _closed_weak_cyclic(group.order, literal)
        if poly is not None:
            return poly
    if spec.family == "dn":
        from .numtheory import is_prime

        p = group.order // 2
        if p % 2 == 1 and is_prime(p):
            return closedform.psi_weak_dihedral_p(p, literal=literal)
    raise UsageError(f"no closed weak-equivalence form for {spec.text}")


def _closed_weak_cyclic(n: int, literal: bool) -> IntPoly | None:
    fac = factorize(n)
    if len(fac) == 1:
        p, m = fac[0]
        if p == 2:
            return closedform.psi_weak_cyclic_2m(m) if m >= 2 else None
        return closedform.psi_weak_cyclic_pm(p, m)
    if len(fac) == 2 and fac[0] == (2, 1):
        p, m = fac[1]
        return closedform.psi_weak_cyclic_2pm(p, m)
    if len(fac) == 2 and fac[0] == (2, 2) and fac[1][1] == 1:
        return closedform.psi_weak_cyclic_4p(fac[1][0])
    if all(e == 1 for _, e in fac):
        primes = tuple(p for p, _ in fac if p != 2)
        spec = closedform.SquareFreeSpec(primes, include_factor_two=n % 2 == 0)
        return closedform.psi_weak_cyclic_squarefree(spec, literal=literal)
    return None


def compute_psi(spec: GroupSpec, relation: str, method: str, literal: bool) -> IntPoly:
    if method == "burnside":
        return (
            burnside.psi_weak(spec.group)
            if relation == "weak"
            else burnside.psi_equiv(spec.group)
        )
    if method == "oracle":
        autos = (
            automorphisms(spec.group)
            if relation == "weak"
            else inner_automorphisms(spec.group)
        )
        return oracle.psi_from_census(oracle.orbit_census(spec.group, autos))
    return _closed_form_psi(spec, relation, literal)


@dataclass
class CensusReport:
    n: int
    label: str
    relation: str
    method: str
    poly: IntPoly
    verdict: str | None = None

    @property
    def count(self) -> int:
        return self.poly.eval_int(1)

    def text(self) -> str:
        return f"{self.poly.to_text()} ({self.count} classes)"

    def csv_row(self) -> str:
        verdict = self.verdict or ""
        return (
            f"{self.n},{self.label},{self.relation},{self.method},"
            f"{self.poly.to_text()},{self.count},{verdict}"
        )

    def json_obj(self) -> dict:
        return {
            "group": self.label,
            "relation": self.relation,
            "method": self.method,
            "poly": self.poly.to_pairs(),
            "count": str(self.count),
            "verdict": self.verdict,
        }


def _emit_reports(reports: list[CensusReport], fmt: str, table_style: bool = False) -> None:
    if fmt == "json":
        payload = [r.json_obj() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 and not table_style else payload))
    elif fmt == "csv":
        print(CSV_HEADER)
        for r in reports:
            print(r.csv_row())
    else:
        for r in reports:
            if table_style:
                print(f"{r.n}\t{r.poly.to_text()}\t{r.count}")
            else:
                print(r.text())


def cmd_psi(args: argparse.Namespace, count_only: bool = False) -> int:
    spec = parse_group(args.group)
    poly = compute_psi(spec, args.relation, args.method, args.literal_formulas)
    report = CensusReport(
        n=spec.group.order,
        label=spec.group.label,
        relation=args.relation,
        method=args.method,
        poly=poly,
    )
    if count_only and args.format == "text":
        print(report.count)
    else:
        _emit_reports([report], args.format)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2")

    def row(n: int) -> CensusReport:
        group = cyclic(n)
        poly = (
            burnside.psi_weak(group)
            if args.relation == "weak"
            else burnside.psi_equiv(group)
        )
        return CensusReport(
            n=n, label=group.label, relation=args.relation, method="burnside", poly=poly
        )

    ns = range(2, args.max_n + 1)
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(row, ns))
    else:
        reports = [row(n) for n in ns]
    _emit_reports(reports, args.format, table_style=True)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.verbose:
        print(f"# started {time.strftime('%Y-%m-%dT%H:%M:%S')}")
    suites = {
        "tables": lambda: verify.suite_tables(args.max_n),
        "crossmethod": lambda: verify.suite_crossmethod(args.max_n),
        "closedforms": lambda: verify.suite_closedforms(args.max_n),
    }
    results = suites[args.suite]()
    for r in results:
        print(r.line())
    failures = sum(1 for r in results if r.status == verify.FAIL)
    discrepancies = sum(1 for r in results if r.status == verify.DISCREPANCY)
    passes = len(results) - failures - discrepancies
    print(f"# {passes} pass, {discrepancies} documented discrepancies, {failures} failures")
    if args.verbose:
        print(f"# finished {time.strftime('%Y-%m-%dT%H:%M:%S')}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleydist",
        description="Degree distribution polynomials of Cayley graph equivalence classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_group: bool) -> None:
        if with_group:
            p.add_argument("--group", required=True, help="zn:N | dn:N | product:... | table-file:PATH")
            p.add_argument(
                "--method",
                choices=["burnside", "closed", "oracle"],
                default="burnside",
            )
        p.add_argument("--relation", choices=["weak", "equiv"], default="weak")
        p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        p.add_argument("--threads", type=int, default=1, help="parallelism hint")
        p.add_argument(
            "--literal-formulas",
            action="store_true",
            help="use the uncorrected literature transcriptions of the closed forms",
        )
        p.add_argument("--verbose", action="store_true")

    p_psi = sub.add_parser("psi", help="degree polynomial of one group")
    add_common(p_psi, with_group=True)

    p_count = sub.add_parser("count", help="class count of one group")
    add_common(p_count, with_group=True)

    p_table = sub.add_parser("table", help="census rows for Z_2..Z_max")
    add_common(p_table, with_group=False)
    p_table.add_argument("--max-n", type=int, default=20)

    p_verify = sub.add_parser("verify", help="cross-validation suites")
    add_common(p_verify, with_group=False)
    p_verify.add_argument(
        "--suite", choices=["tables", "crossmethod", "closedforms"], required=True
    )
    p_verify.add_argument("--max-n", type=int, default=20)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "psi":
            return cmd_psi(args)
        if args.command == "count":
            return cmd_psi(args, count_only=True)
        if args.command == "table":
            return cmd_table(args)
        return cmd_verify(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return 3
    except ExactDivisionError as exc:
        print(f"non-integral division (transcription fault): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
