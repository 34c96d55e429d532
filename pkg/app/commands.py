"""
Subcommand implementations. Each takes the parsed arguments and a message
log, and returns the process exit code.
"""

import json
from pathlib import Path
from typing import Optional, Tuple

from census import (CensusReport, family_by_primary, load_census, load_families,
                    verify_all, verify_families)
from events import EventManager
from farey import (BoundaryClass, Slope, chain_tet_count, farey_distance,
                   interval_of, lst_tet_count)
from filling import (KnotKind, UnknownFamily, classify_pair, exceptional,
                     exceptional_label, fill, generator_for, plan_filling,
                     seed_class)
from seeds import build_seed, closed_seed, parse_seed_id
from triangulation import (Triangulation, export_gluing_table, first_homology,
                           import_gluing_table, iso_signature,
                           triangulation_from_dict, triangulation_to_dict)

from .config import FillConfig
from .export import to_json, write_atomic
from .message_log import MessageLog

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(text: str, args, log: MessageLog) -> None:
    """Send command output to --out when given, otherwise to the log."""
    out = getattr(args, 'out', None)
    if out:
        write_atomic(out, text)
        log.add_system(f"wrote {out}")
    else:
        log.add_block(text.rstrip('\n'))


def cmd_fill(args, log: MessageLog) -> int:
    seed = None if args.seed == 'auto' else args.seed
    result = fill(args.rs, args.tu, seed)
    if args.format == 'json':
        _emit(to_json(result), args, log)
        return EXIT_OK

    plan = result.plan
    core, first, second = result.counts
    lines = [
        f"filling   M3({args.rs}, {args.tu})",
        f"knot      {plan.knot}",
        f"seed      {plan.seed.short_name}" + (" (cusps swapped)" if plan.swapped else ""),
        f"class     {seed_class(plan.knot.primary)}",
        f"slopes    boundary 1 <- {plan.slope1}, boundary 2 <- {plan.slope2}",
        f"counts    {core} + {first} + {second} = {result.total}",
        f"isosig    {iso_signature(result.triangulation)}",
        "",
        export_gluing_table(result.triangulation).rstrip('\n'),
    ]
    _emit('\n'.join(lines) + '\n', args, log)
    return EXIT_OK


def cmd_classify(args, log: MessageLog) -> int:
    knot = classify_pair(args.rs, args.tu)
    log.add_info(str(knot) if knot is not None else "not a knot filling")
    return EXIT_OK


def cmd_count(args, log: MessageLog) -> int:
    cls: BoundaryClass = args.boundary
    if cls.is_permissible:
        count = chain_tet_count(cls, args.slope)
        log.add_info(str(count))
        return EXIT_OK
    count = lst_tet_count(cls, args.slope)
    if args.oracle:
        distance = farey_distance(cls.triple, args.slope)
        log.add_info(f"{count} (oracle {max(distance - 1, 0)}, interval {interval_of(args.slope)})")
    else:
        log.add_info(str(count))
    return EXIT_OK


def _family_source(primary: Slope, kind: Optional[KnotKind]):
    """The tabulated generator and labels when the family is known, else the closed form."""
    try:
        row = family_by_primary(primary, kind)
        return row.family.generator, row.members, row.kind
    except UnknownFamily:
        kind = kind or KnotKind.A
        return generator_for(kind, primary), {}, kind


def cmd_family(args, log: MessageLog) -> int:
    generator, members, kind = _family_source(args.primary, args.type)
    low, high = args.range
    t0, t1, u0, u1 = generator
    lines = [f"family ({args.primary.p},{args.primary.q})_{kind}: "
             f"t_n = {t0} + {t1}n, u_n = {u0} + {u1}n",
             f"{'n':>4}  {'t/u':>10}  {'label':<10}  total"]
    for n in range(low, high + 1):
        secondary = Slope(t0 + t1 * n, u0 + u1 * n)
        label = members.get(n, '')
        if exceptional(secondary):
            total = '-'
            label = label or exceptional_label(secondary) or ''
        else:
            total = str(plan_filling(args.primary, secondary).total)
        lines.append(f"{n:>4}  {str(secondary):>10}  {label:<10}  {total}")
    log.add_block('\n'.join(lines))
    return EXIT_OK


def _row_reporter(log: MessageLog, verbose: bool):
    def report(event) -> None:
        row = event.report
        if row.ok:
            log.add_success(str(row))
        else:
            log.add_error(str(row))
        if verbose:
            for note in row.notes:
                log.add_warning(f"  {note}")
    return report


def cmd_verify_census(args, log: MessageLog) -> int:
    events = EventManager()
    events.subscribe('row_verified', _row_reporter(log, args.verbose))
    events.subscribe('family_verified', _row_reporter(log, args.verbose))
    workers = args.parallel if args.parallel else FillConfig.DEFAULT_WORKERS

    FillConfig.debug(f"verifying census with {workers} worker(s)")
    census: CensusReport = verify_all(load_census(), workers, events)
    ok = census.ok
    if args.families:
        reports = verify_families(load_families(), FillConfig.FAMILY_EXTRA_RANGE, events)
        passed = sum(1 for r in reports if r.ok)
        log.add_system(f"families {passed}/{len(reports)} ok")
        ok = ok and passed == len(reports)
    summary = census.summary()
    if census.ok:
        log.add_success(summary)
    else:
        log.add_error(summary)
    return EXIT_OK if ok else EXIT_FAILED


def read_triangulation(path: Path) -> Triangulation:
    """A gluing table, or the JSON form when the file ends in .json."""
    text = Path(path).read_text()
    if Path(path).suffix == '.json':
        data = json.loads(text)
        if 'triangulation' in data:
            data = data['triangulation']
        return triangulation_from_dict(data)
    return import_gluing_table(text)


def cmd_homology(args, log: MessageLog) -> int:
    log.add_info(str(first_homology(read_triangulation(args.file))))
    return EXIT_OK


def cmd_isosig(args, log: MessageLog) -> int:
    log.add_info(iso_signature(read_triangulation(args.file)))
    return EXIT_OK


def cmd_export_seed(args, log: MessageLog) -> int:
    seed_id = parse_seed_id(args.seed)
    t = closed_seed(seed_id) if args.closed else build_seed(seed_id).core
    if args.format == 'json':
        _emit(to_json(triangulation_to_dict(t)), args, log)
    else:
        _emit(export_gluing_table(t), args, log)
    return EXIT_OK


COMMANDS = {
    'fill': cmd_fill,
    'classify': cmd_classify,
    'count': cmd_count,
    'family': cmd_family,
    'verify-census': cmd_verify_census,
    'homology': cmd_homology,
    'isosig': cmd_isosig,
    'export-seed': cmd_export_seed,
}


def parse_range(text: str) -> Tuple[int, int]:
    """"a..b" with a <= b."""
    try:
        low, high = (int(v) for v in text.split('..'))
    except ValueError:
        raise ValueError(f"range should look like a..b, got '{text}'")
    if low > high:
        raise ValueError(f"range {text} is empty")
    return low, high
