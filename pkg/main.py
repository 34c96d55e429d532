"""
Main entry point for the magic manifold filling tools.
"""

import argparse
import sys
from typing import List, Optional

from blessed import Terminal

from app.commands import COMMANDS, EXIT_OK, EXIT_USAGE, parse_range
from app.config import FillConfig
from app.message_log import MessageLog
from farey import BoundaryClass, Slope
from filling import KnotKind
from seeds import UnknownSeed, list_seeds, parse_seed_id

# Options whose values may start with '-' (negative slopes and ranges).
VALUE_FLAGS = ('--rs', '--tu', '--slope', '--primary', '--range')


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _boundary(text: str) -> BoundaryClass:
    try:
        return BoundaryClass.from_tag(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _seed(text: str) -> str:
    if text.lower() == 'auto':
        return 'auto'
    try:
        return parse_seed_id(text).value
    except UnknownSeed as e:
        raise argparse.ArgumentTypeError(str(e))


def _range(text: str):
    try:
        return parse_range(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _workers(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("--parallel needs at least one worker")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='main.py',
        description="Triangulate knot complements obtained by filling the magic manifold",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  main.py classify --rs -1/2 --tu -3/2     # Type A
  main.py fill --rs -1/2 --tu -3/2          # 3-tetrahedron triangulation
  main.py count --boundary Uh --slope -6    # 2
  main.py family --primary 1 --range -8..7  # the (1,1) family
  main.py verify-census --parallel 4        # 229/229 ok
        """
    )
    parser.add_argument('-d', '--debug', action='store_true',
                        help=f'Print debug traces (sets {FillConfig.DEBUG_ENV_VAR})')
    parser.add_argument('--settings', help='YAML settings file to overlay on the defaults')
    parser.add_argument('--no-color', action='store_true', help='Plain output even on a terminal')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    fill = sub.add_parser('fill', help='Triangulate M3(rs, tu)')
    fill.add_argument('--rs', type=_slope, required=True)
    fill.add_argument('--tu', type=_slope, required=True)
    fill.add_argument('--seed', type=_seed, default='auto',
                      help='auto or one of ' + ', '.join(list_seeds()))
    fill.add_argument('--format', choices=['table', 'json'], default=FillConfig.DEFAULT_FORMAT)
    fill.add_argument('--out', help='Write the result to FILE instead of stdout')

    classify = sub.add_parser('classify', help='Knot type of a filling pair')
    classify.add_argument('--rs', type=_slope, required=True)
    classify.add_argument('--tu', type=_slope, required=True)

    count = sub.add_parser('count', help='Tetrahedra needed to fill one boundary')
    count.add_argument('--boundary', type=_boundary, required=True,
                       help='P, Q, R, Rp, Uh or Vh')
    count.add_argument('--slope', type=_slope, required=True)
    count.add_argument('--oracle', action='store_true',
                       help='Also print the breadth-first Farey path length')

    family = sub.add_parser('family', help='Slopes and counts along a family')
    family.add_argument('--primary', type=_slope, required=True)
    family.add_argument('--type', type=KnotKind, choices=list(KnotKind))
    family.add_argument('--range', type=_range, required=True, help='a..b')

    verify = sub.add_parser('verify-census', help='Rebuild and check every census row')
    verify.add_argument('--parallel', type=_workers, metavar='N')
    verify.add_argument('--families', action='store_true',
                        help='Also check the family tables and their growth')
    verify.add_argument('-v', '--verbose', action='store_true', help='Show per-row notes')

    homology = sub.add_parser('homology', help='H1 of a gluing table file')
    homology.add_argument('file')

    isosig = sub.add_parser('isosig', help='Isomorphism signature of a gluing table file')
    isosig.add_argument('file')

    export = sub.add_parser('export-seed', help='Gluing table of a seed')
    export.add_argument('seed', type=_seed)
    export.add_argument('--closed', action='store_true', help='Attach the cusps first')
    export.add_argument('--format', choices=['table', 'json'], default='table')
    export.add_argument('--out')
    return parser


def join_values(argv: List[str]) -> List[str]:
    """Turn '--rs -1/2' into '--rs=-1/2' so argparse does not read -1/2 as a flag."""
    joined = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VALUE_FLAGS and i + 1 < len(argv):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def run(argv: Optional[List[str]] = None, log: Optional[MessageLog] = None) -> int:
    """Parse and run one command; returns the exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(join_values(argv))
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.debug:
        FillConfig.enable_debug()
    if args.settings:
        FillConfig.load_settings(args.settings)
    if args.no_color:
        FillConfig.USE_COLOR = False

    flush = log is None
    if log is None:
        log = MessageLog(term=Terminal())
    FillConfig.debug(f"command {args.command}: {vars(args)}")

    try:
        code = COMMANDS[args.command](args, log)
    except (ValueError, LookupError, OSError) as e:
        log.add_error(f"Error: {e}")
        code = EXIT_USAGE
        if FillConfig.debug_enabled():
            import traceback
            traceback.print_exc()
    if flush:
        log.flush()
    return code


def main():
    """Entry point for the command line."""
    sys.exit(run())


if __name__ == "__main__":
    main()
