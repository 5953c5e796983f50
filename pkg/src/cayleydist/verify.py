"""Cross-validation suites behind the ``verify`` CLI command.

Three suites:

* tables — engine vs the shipped reference-table fixtures (and vs the
  oracle) for Z_n, both relations. Fixture rows whose notes column marks a
  known misprint are reported as DISCREPANCY(paper) when engine and oracle
  agree with each other; anything else that mismatches is a FAIL.
* crossmethod — engine vs oracle for cyclic and dihedral groups.
* closedforms — every closed-form family vs the engine on its domain,
  plus the adjudication lines for the literal transcriptions.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

from . import burnside, closedform, oracle
from .groups import GroupTable, automorphisms, cyclic, dihedral, inner_automorphisms
from .numtheory import factorize
from .poly import ExactDivisionError, IntPoly, parse_text

PASS = "PASS"
FAIL = "FAIL"
DISCREPANCY = "DISCREPANCY(paper)"


@dataclass
class CheckResult:
    status: str
    item: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status} {self.item}" + (f": {self.detail}" if self.detail else "")


def has_failure(results: list[CheckResult]) -> bool:
    return any(r.status == FAIL for r in results)


@dataclass(frozen=True)
class TableRow:
    n: int
    poly: IntPoly
    count: int
    notes: str


def load_reference_table(relation: str) -> dict[int, TableRow]:
    """The shipped literature census rows for Z_n (n <= 20)."""
    fname = {"equiv": "table1.csv", "weak": "table2.csv"}[relation]
    rows = {}
    path = resources.files("cayleydist.data").joinpath(fname)
    with path.open("r", encoding="utf-8") as fh:
        for rec in csv.DictReader(fh):
            n = int(rec["n"])
            rows[n] = TableRow(
                n=n,
                poly=parse_text(rec["poly"]),
                count=int(rec["count"]),
                notes=rec.get("notes", "") or "",
            )
    return rows


def _engine_psi(group: GroupTable, relation: str) -> IntPoly:
    return burnside.psi_weak(group) if relation == "weak" else burnside.psi_equiv(group)


def _oracle_psi(group: GroupTable, relation: str) -> IntPoly:
    autos = automorphisms(group) if relation == "weak" else inner_automorphisms(group)
    return oracle.psi_from_census(oracle.orbit_census(group, autos))


def _diff_text(a: IntPoly, b: IntPoly) -> str:
    return f"{a.to_text()} vs {b.to_text()} (diff {(a - b).to_text()})"


def suite_tables(max_n: int = 20, relation: str | None = None) -> list[CheckResult]:
    """Engine and oracle against the reference tables for n = 2..max_n."""
    results = []
    relations = [relation] if relation else ["equiv", "weak"]
    for rel in relations:
        table = load_reference_table(rel)
        for n in range(2, max_n + 1):
            item = f"table[{rel}] Z{n}"
            if n not in table:
                results.append(CheckResult(FAIL, item, "no reference row"))
                continue
            row = table[n]
            group = cyclic(n)
            engine = _engine_psi(group, rel)
            orc = _oracle_psi(group, rel)
            if engine != orc:
                results.append(
                    CheckResult(FAIL, item, "engine vs oracle: " + _diff_text(engine, orc))
                )
                continue
            if engine == row.poly and engine.eval_int(1) == row.count:
                results.append(CheckResult(PASS, item))
            elif row.notes:
                results.append(
                    CheckResult(
                        DISCREPANCY,
                        item,
                        f"reference row misprint ({row.notes}); engine=oracle give "
                        f"{engine.to_text()} ({engine.eval_int(1)} classes), reference "
                        f"prints {row.poly.to_text()} ({row.count})",
                    )
                )
            else:
                results.append(
                    CheckResult(FAIL, item, "engine vs reference: " + _diff_text(engine, row.poly))
                )
    return results


def suite_crossmethod(max_n: int = 20) -> list[CheckResult]:
    """Engine vs oracle for Z_n (n <= max_n) and D_m (2m <= max_n)."""
    results = []
    groups: list[GroupTable] = [cyclic(n) for n in range(2, max_n + 1)]
    groups += [dihedral(m) for m in range(3, max_n // 2 + 1)]
    for group in groups:
        for rel in ("weak", "equiv"):
            item = f"crossmethod[{rel}] {group.label}"
            engine = _engine_psi(group, rel)
            orc = _oracle_psi(group, rel)
            if engine == orc:
                results.append(CheckResult(PASS, item))
            else:
                results.append(CheckResult(FAIL, item, _diff_text(engine, orc)))
    return results


def _compare(item: str, closed: IntPoly, engine: IntPoly) -> CheckResult:
    if closed == engine:
        return CheckResult(PASS, item)
    return CheckResult(FAIL, item, _diff_text(closed, engine))


def _literal_adjudication(item: str, literal_fn, corrected: IntPoly) -> CheckResult | None:
    """Report when a literal transcription deviates from the corrected default."""
    try:
        literal = literal_fn()
    except ExactDivisionError as exc:
        return CheckResult(DISCREPANCY, item, f"literal transcription not integral ({exc})")
    if literal != corrected:
        return CheckResult(
            DISCREPANCY, item, "literal transcription deviates: " + _diff_text(literal, corrected)
        )
    return None


def suite_closedforms(max_n: int = 30) -> list[CheckResult]:
    """Every closed form vs the engine on its domain, clipped to order <= max_n."""
    results = []

    for n in range(2, max_n + 1):
        results.append(
            _compare(
                f"closed psi_equiv_cyclic Z{n}",
                closedform.psi_equiv_cyclic(n),
                burnside.psi_equiv(cyclic(n)),
            )
        )

    for n in range(3, max_n // 2 + 1):
        group = dihedral(n)
        corrected = closedform.psi_equiv_dihedral(n)
        results.append(
            _compare(f"closed psi_equiv_dihedral D{n}", corrected, burnside.psi_equiv(group))
        )
        adj = _literal_adjudication(
            f"closed psi_equiv_dihedral D{n} (literal)",
            lambda n=n: closedform.psi_equiv_dihedral(n, literal=True),
            corrected,
        )
        if adj:
            results.append(adj)

    for m in range(2, 6):
        if 2**m > max_n:
            break
        results.append(
            _compare(
                f"closed psi_weak_cyclic_2m Z{2 ** m}",
                closedform.psi_weak_cyclic_2m(m),
                burnside.psi_weak(cyclic(2**m)),
            )
        )

    for p in (3, 5, 7):
        for m in (1, 2):
            if p**m > max_n:
                continue
            results.append(
                _compare(
                    f"closed psi_weak_cyclic_pm Z{p ** m}",
                    closedform.psi_weak_cyclic_pm(p, m),
                    burnside.psi_weak(cyclic(p**m)),
                )
            )
            if 2 * p**m <= max_n:
                results.append(
                    _compare(
                        f"closed psi_weak_cyclic_2pm Z{2 * p ** m}",
                        closedform.psi_weak_cyclic_2pm(p, m),
                        burnside.psi_weak(cyclic(2 * p**m)),
                    )
                )

    for p in (3, 5, 7):
        if 4 * p > max_n:
            continue
        results.append(
            _compare(
                f"closed psi_weak_cyclic_4p Z{4 * p}",
                closedform.psi_weak_cyclic_4p(p),
                burnside.psi_weak(cyclic(4 * p)),
            )
        )

    for n in (15, 21, 33, 35, 105, 6, 10, 14, 30, 42):
        if n > max_n:
            continue
        primes = tuple(p for p, _ in factorize(n) if p != 2)
        spec = closedform.SquareFreeSpec(primes, include_factor_two=n % 2 == 0)
        corrected = closedform.psi_weak_cyclic_squarefree(spec)
        results.append(
            _compare(
                f"closed psi_weak_cyclic_squarefree Z{n}",
                corrected,
                burnside.psi_weak(cyclic(n)),
            )
        )
        if n % 2 == 0:
            adj = _literal_adjudication(
                f"closed psi_weak_cyclic_squarefree Z{n} (literal)",
                lambda spec=spec: closedform.psi_weak_cyclic_squarefree(spec, literal=True),
                corrected,
            )
            if adj:
                results.append(adj)

    for p in (3, 5, 7, 11, 13):
        if p <= max_n:
            results.append(
                _compare(
                    f"closed psi_weak_zp Z{p}",
                    closedform.psi_weak_zp(p),
                    burnside.psi_weak(cyclic(p)),
                )
            )
        if 2 * p <= max_n:
            results.append(
                _compare(
                    f"closed psi_weak_z2p Z{2 * p}",
                    closedform.psi_weak_z2p(p),
                    burnside.psi_weak(cyclic(2 * p)),
                )
            )

    for p in (3, 5, 7):
        if 2 * p > max_n:
            continue
        corrected = closedform.psi_weak_dihedral_p(p)
        results.append(
            _compare(
                f"closed psi_weak_dihedral_p D{p}", corrected, burnside.psi_weak(dihedral(p))
            )
        )
        adj = _literal_adjudication(
            f"closed psi_weak_dihedral_p D{p} (literal)",
            lambda p=p: closedform.psi_weak_dihedral_p(p, literal=True),
            corrected,
        )
        if adj:
            results.append(adj)

    # formula specialization consistency
    for p in (3, 5, 7, 11, 13):
        if p > max_n:
            continue
        spec = closedform.SquareFreeSpec((p,))
        results.append(
            _compare(
                f"squarefree({p}) == zp({p})",
                closedform.psi_weak_cyclic_squarefree(spec),
                closedform.psi_weak_zp(p),
            )
        )
        if 2 * p <= max_n:
            spec2 = closedform.SquareFreeSpec((p,), include_factor_two=True)
            results.append(
                _compare(
                    f"squarefree(2*{p}) == z2p({p})",
                    closedform.psi_weak_cyclic_squarefree(spec2),
                    closedform.psi_weak_z2p(p),
                )
            )
    return results
