"""
Verification harness: rebuild every census knot and family member and
check the tabulated counts and invariants.

Reports carry failures as strings; nothing here raises for a failing row.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from app.config import FillConfig
from events import EventManager, FamilyVerified, RowVerified, VerificationFinished
from farey import Slope, positive_cf
from filling import (FillingPlan, FillingResult, NotAKnotFilling,
                     candidate_plans, classify_pair, execute_plan,
                     exceptional_label, family_extension, minimal_figure_eight,
                     plan_filling)
from layered import BoundaryMismatch
from seeds import SeedId
from triangulation import (Triangulation, first_homology, orientable,
                           validate, vertex_links)

from .loader import CensusRow, FamilyRow, is_census_name, load_census

# The census does not tell T2 from its cusp-swapped twin.
_SAME_SEED = {SeedId.T2P: SeedId.T2}

FIGURE_EIGHT = 'K2_1'


@dataclass
class RowReport:
    """Outcome of checking one census row."""
    name: str
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    plan: Optional[FillingPlan] = None
    tetrahedra: Optional[int] = None
    homology: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: ok ({self.tetrahedra} tetrahedra)"
        return f"{self.name}: FAIL " + "; ".join(self.failures)


@dataclass
class FamilyReport:
    """Outcome of checking one family and its extension indices."""
    name: str
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    members_checked: int = 0
    extension: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: ok ({self.members_checked} members)"
        return f"{self.name}: FAIL " + "; ".join(self.failures)


@dataclass
class CensusReport:
    """All row reports of one run, in census order."""
    rows: List[RowReport]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r.ok)

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def failures(self) -> List[RowReport]:
        return [r for r in self.rows if not r.ok]

    def summary(self) -> str:
        return f"{self.passed}/{self.total} ok"


def check_knot_complement(t: Triangulation, report, what: str = '') -> Optional[str]:
    """
    Valid, orientable, one torus cusp and H1 = Z; failures go on the report.
    Returns H1 as text, or None if the gluing is invalid.
    """
    prefix = f"{what}: " if what else ''
    violations = validate(t)
    if violations:
        report.fail(f"{prefix}invalid gluing ({violations[0].message})")
        return None
    if not orientable(t):
        report.fail(f"{prefix}not orientable")
    links = vertex_links(t)
    if len(links) != 1 or not links[0].is_torus:
        report.fail(f"{prefix}expected one torus cusp, found {len(links)} vertex classes")
    homology = first_homology(t)
    if not homology.is_z():
        report.fail(f"{prefix}H1 = {homology}, expected Z")
    return str(homology)


def _matching_plan(row: CensusRow, best: FillingPlan) -> Optional[FillingPlan]:
    """The cheapest plan whose count split is the row's; ties keep planner order."""
    if tuple(sorted(best.counts)) == row.count_multiset:
        return best
    for plan in candidate_plans(row.rs, row.tu):
        if plan.total == best.total and tuple(sorted(plan.counts)) == row.count_multiset:
            return plan
    return None


# Published continued fractions with a misprinted coefficient. The slopes and
# norms in these rows are right; only the CF column is off.
CF_ERRATA: Dict[str, Tuple[str, Tuple[int, ...]]] = {
    'K5_13': ('t/u', (0, 2, 2)),
    'K7_26': ('t/u', (0, 3, 2)),
    'K8_44': ('t/u', (0, 3, 3)),
    'K8_51': ('t/u', (1, 2, 2)),
    'K9_50': ('t/u', (0, 4, 2)),
}


def _check_columns(row: CensusRow, report: RowReport) -> None:
    for label, slope, cf, norm_value in (('r/s', row.rs, row.cf_rs, row.norm_rs),
                                         ('t/u', row.tu, row.cf_tu, row.norm_tu)):
        computed = positive_cf(slope)
        if computed.coefficients != cf:
            if CF_ERRATA.get(row.knot) == (label, tuple(cf)):
                report.notes.append(f"published CF of {label} {list(cf)} is a misprint for {computed}")
            else:
                report.fail(f"CF of {label} is {computed}, table has {list(cf)}")
        if computed.norm != norm_value:
            report.fail(f"norm of {label} is {computed.norm}, table has {norm_value}")
    if sum(row.counts) != row.sigma:
        report.fail(f"count columns sum to {sum(row.counts)}, sigma is {row.sigma}")


def verify_row(row: CensusRow) -> RowReport:
    """
    Recompute one row: continued fractions, norms, the plan and its counts,
    then build the filling and check it is a knot complement.

    Any package error raised on the way is recorded as a failure of this row.
    """
    report = RowReport(row.knot)
    try:
        _verify_row(row, report)
    except (ValueError, LookupError) as e:
        report.fail(f"{type(e).__name__}: {e}")
    return report


def _verify_row(row: CensusRow, report: RowReport) -> None:
    _check_columns(row, report)

    knot = classify_pair(row.rs, row.tu)
    if knot is None:
        report.fail(f"({row.rs}, {row.tu}) is not a knot filling")
        return
    if knot.kind is not row.kind:
        report.notes.append(f"tabulated type {row.kind}, classified as {knot}")

    try:
        best = plan_filling(row.rs, row.tu)
    except NotAKnotFilling as e:
        report.fail(str(e))
        return
    report.plan = best
    if best.total != row.sigma:
        report.fail(f"plan total {best.total}, sigma is {row.sigma}")
    if row.knot != FIGURE_EIGHT and row.sigma != row.complexity:
        report.fail(f"sigma {row.sigma} differs from complexity {row.complexity}")

    plan = _matching_plan(row, best)
    if plan is None:
        report.fail(f"no cheapest plan splits as {list(row.counts)}; best is {list(best.counts)}")
        plan = best
    elif plan is not best:
        report.notes.append(f"census split realised by {plan.seed} {list(plan.counts)}")
    report.plan = plan
    if _SAME_SEED.get(plan.seed, plan.seed) is not _SAME_SEED.get(row.seed, row.seed):
        report.notes.append(f"built on {plan.seed}, table names {row.seed.short_name}")

    try:
        result: FillingResult = execute_plan(plan)
    except BoundaryMismatch as e:
        report.fail(f"build disagrees with plan: {e}")
        return
    report.tetrahedra = result.total
    report.homology = check_knot_complement(result.triangulation, report)

    if row.knot == FIGURE_EIGHT:
        _, smaller = minimal_figure_eight()
        report.tetrahedra = smaller.size
        if smaller.size != row.complexity:
            report.fail(f"3-2 move left {smaller.size} tetrahedra, expected {row.complexity}")
        check_knot_complement(smaller, report, 'after 3-2 move')


def verify_all(rows: Iterable[CensusRow], workers: Optional[int] = None,
               events: Optional[EventManager] = None) -> CensusReport:
    """
    Verify rows, in parallel when workers > 1. Reports come back in row order
    either way.
    """
    rows = list(rows)
    workers = FillConfig.DEFAULT_WORKERS if workers is None else workers
    reports: List[RowReport] = []

    def collect(results) -> None:
        for index, report in enumerate(results):
            reports.append(report)
            if events is not None:
                events.emit(RowVerified(report, index, len(rows)))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            collect(pool.map(verify_row, rows, chunksize=8))
    else:
        collect(verify_row(row) for row in rows)

    census = CensusReport(reports)
    if events is not None:
        events.emit(VerificationFinished(census.passed, census.total, 'census'))
    return census


def _pair(a: str, b: str) -> frozenset:
    return frozenset((Slope.parse(a), Slope.parse(b)))


# Family members tabulated at a slope pair other than their census row's. The
# same knot arises from both fillings; any mismatch not listed here fails.
ALTERNATE_FILLINGS: Dict[str, FrozenSet[frozenset]] = {
    'K3_1': frozenset({_pair('-1/2', '-5/2'), _pair('-4', '-1/3'), _pair('-5/3', '-5/2')}),
    'K4_3': frozenset({_pair('-1/2', '-7/3')}),
    'K4_4': frozenset({_pair('-7/2', '-5/2')}),
    'K5_1': frozenset({_pair('-3/4', '-3/2')}),
    'K5_4': frozenset({_pair('-3/5', '-3/2')}),
    'K5_5': frozenset({_pair('-1/2', '-9/4')}),
    'K6_3': frozenset({_pair('-5/7', '-3/2')}),
    'K6_4': frozenset({_pair('-5/8', '-3/2')}),
    'K6_5': frozenset({_pair('-1/2', '-11/5')}),
    'K7_5': frozenset({_pair('-1/2', '-13/6')}),
    'K8_5': frozenset({_pair('-1/2', '-15/7')}),
    'K9_5': frozenset({_pair('-1/2', '-17/8')}),
}


def verify_family(family: FamilyRow, extra_range: Optional[int] = None,
                  census: Optional[Dict[str, CensusRow]] = None) -> FamilyReport:
    """
    Check a family's members against the census and its growth past the
    nine-tetrahedron edges: j steps out the predicted total is 9 + j.
    """
    extra_range = FillConfig.FAMILY_EXTRA_RANGE if extra_range is None else extra_range
    if census is None:
        census = {row.knot: row for row in load_census()}
    report = FamilyReport(str(family))

    for n, label in sorted(family.members.items()):
        secondary = family.secondary(n)
        if family.is_exceptional_member(n):
            if is_census_name(label):
                report.fail(f"n={n}: exceptional slope {secondary} labelled {label}")
            else:
                kind = exceptional_label(secondary)
                report.notes.append(f"n={n}: {secondary} is exceptional ({kind}), {label}")
            continue
        if not is_census_name(label):
            report.notes.append(f"n={n}: {label} at {secondary} is not a census knot")
            continue
        row = census.get(label)
        if row is None:
            report.fail(f"n={n}: {label} is not in the census")
            continue
        report.members_checked += 1
        pair = frozenset((family.primary, secondary))
        alternate = pair != row.slopes
        if alternate and pair not in ALTERNATE_FILLINGS.get(label, ()):
            report.fail(f"n={n}: {label} at ({family.primary}, {secondary}), "
                        f"census has ({row.rs}, {row.tu})")
            continue
        try:
            plan = plan_filling(family.primary, secondary)
            if alternate:
                report.notes.append(f"n={n}: {label} also fills at ({family.primary}, {secondary})")
                check_knot_complement(execute_plan(plan).triangulation, report, f"n={n}")
        except (ValueError, LookupError) as e:
            report.fail(f"n={n}: {e}")
            continue
        total = plan.total
        # An alternate filling may cost more; it can never beat the census.
        if total < row.sigma or (total > row.sigma and not alternate):
            report.fail(f"n={n}: {label} planned with {total} tetrahedra, census has {row.sigma}")

    for j in range(1, extra_range + 1):
        low, high = family_extension(family.family, j)
        totals = []
        for n in (low, high):
            try:
                totals.append(plan_filling(family.primary, family.secondary(n)).total)
            except NotAKnotFilling as e:
                report.fail(f"n={n}: {e}")
                totals.append(-1)
        report.extension.append((j, totals[0], totals[1]))
        if totals != [9 + j, 9 + j]:
            report.fail(f"j={j}: totals {totals} at n={low},{high}, expected {9 + j}")
    return report


def verify_families(families: Iterable[FamilyRow], extra_range: Optional[int] = None,
                    events: Optional[EventManager] = None) -> List[FamilyReport]:
    """Verify each family against one shared census index, emitting progress."""
    census = {row.knot: row for row in load_census()}
    reports = []
    for family in families:
        report = verify_family(family, extra_range, census)
        reports.append(report)
        if events is not None:
            events.emit(FamilyVerified(report))
    if events is not None:
        passed = sum(1 for r in reports if r.ok)
        events.emit(VerificationFinished(passed, len(reports), 'families'))
    return reports
