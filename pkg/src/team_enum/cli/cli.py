"""Team enumeration command line interface entrypoint."""

import argparse
import logging
import sys
import time
from collections.abc import Sequence
from contextlib import ExitStack
from pathlib import Path
from random import Random
from typing import TextIO

from team_enum.enumerators.config import Algorithm, EnumConfig
from team_enum.enumerators.dispatch import enumerate_solutions
from team_enum.enumerators.exceptions import SizeLimitError
from team_enum.enumerators.merge import merge_disjunction
from team_enum.enumerators.polyspace import PolyspaceEnumerator
from team_enum.enumerators.stream import SolutionStream
from team_enum.formula.family import chain_formula, random_formula
from team_enum.formula.nodes import Formula
from team_enum.formula.parser import parse_disjunction, parse_formula
from team_enum.formula.printer import format_formula
from team_enum.formula.reduce import reduce, restrict_team
from team_enum.orbit.generate import enumerate_orbit
from team_enum.seeds.stepper import seeds_at_level
from team_enum.team.assignment import Assignment
from team_enum.team.order import OrderKind
from team_enum.team.team import Team
from team_enum.version import __version__

from .report import RunReport

logger = logging.getLogger(__name__)

EXIT_INPUT = 2
EXIT_SIZE = 3

ORDERS = {"emission": None, "size-lex": OrderKind.SIZE_THEN_LEX}


def _formula_text(args: argparse.Namespace) -> str:
    if args.formula is not None:
        return Path(args.formula).read_text(encoding="utf-8")
    return str(args.expr)


def _add_formula_source(parser: argparse.ArgumentParser, *, required: bool) -> None:
    source = parser.add_mutually_exclusive_group(required=required)
    source.add_argument("--expr", help="formula text")
    source.add_argument("--formula", help="file holding the formula text")


def _stream(
    formulas: list[Formula], config: EnumConfig
) -> tuple[SolutionStream, RunReport]:
    if len(formulas) == 1:
        reduced = reduce(formulas[0])
        report = RunReport(width=reduced.width)
        if not reduced.contradictory:
            report.zero = reduced.expand_assignment(Assignment.first(reduced.width))
        return enumerate_solutions(reduced, config), report
    disjuncts = [reduce(f) for f in formulas]
    return merge_disjunction(disjuncts, config), RunReport()


def cmd_enum(args: argparse.Namespace) -> int:
    """Print the satisfying teams, or only their counts."""
    config = EnumConfig(
        max_size=args.max_size,
        algorithm=Algorithm(args.algo),
        order=ORDERS[args.order],
        interleave_budget=args.budget,
    )
    formulas = parse_disjunction(_formula_text(args))
    stream, report = _stream(formulas, config)

    start = time.perf_counter()
    with ExitStack() as stack:
        profile: TextIO | None = None
        if args.profile is not None:
            path = Path(args.profile)
            profile = stack.enter_context(path.open("a", encoding="utf-8"))
        for index, team in enumerate(stream, start=1):
            report.record(team, stream.delay)
            if profile is not None:
                profile.write(f"{index}\t{len(team)}\t{stream.delay}\n")
            if not args.count_only:
                print(team)
    report.wall_time = time.perf_counter() - start

    if isinstance(stream.producer, PolyspaceEnumerator):
        report.peak_assignments = stream.producer.peak_retained_assignments
    if args.count_only:
        for line in report.lines():
            print(line)
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    """Print a member of a benchmark formula family."""
    if args.kind == "chain":
        print(chain_formula(args.k))
    else:
        rng = Random(args.seed)
        print(random_formula(rng, args.vars, args.atoms, args.literals))
    return 0


def cmd_orbit(args: argparse.Namespace) -> int:
    """Print the orbit of a team, one team per line."""
    if args.expr is None and args.formula is None:
        team = Team.parse(args.team)
        for member in enumerate_orbit(team):
            print(member)
        return 0
    reduced = reduce(parse_formula(_formula_text(args)))
    team = restrict_team(reduced, Team.parse(args.team, len(reduced.original_order)))
    for member in enumerate_orbit(team):
        print(reduced.expand_team(member))
    return 0


def cmd_seeds(args: argparse.Namespace) -> int:
    """Print the zero-containing satisfying teams of one cardinality."""
    reduced = reduce(parse_formula(_formula_text(args)))
    for team in seeds_at_level(reduced, args.level):
        print(reduced.expand_team(team))
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    """Print the forced literals and the remaining atom conjunction."""
    reduced = reduce(parse_formula(_formula_text(args)))
    order = reduced.original_order
    print("true:\t" + ", ".join(x for x in order if x in reduced.forced_true))
    print("false:\t" + ", ".join(x for x in order if x in reduced.forced_false))
    print("free:\t" + ", ".join(reduced.free_vars))
    if reduced.contradictory:
        print("formula:\t0")
    else:
        print("formula:\t" + format_formula(reduced.to_formula()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="team-enum",
        description="Enumerate satisfying teams of dependence logic formulas.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enum", help="enumerate satisfying teams")
    _add_formula_source(p_enum, required=True)
    p_enum.add_argument(
        "--algo", choices=[a.value for a in Algorithm], default=Algorithm.ORBIT.value
    )
    p_enum.add_argument("--max-size", type=int, help="largest cardinality, default 2^n")
    p_enum.add_argument("--order", choices=list(ORDERS), default="emission")
    p_enum.add_argument("--budget", type=int, help="seed units per orbit emission")
    p_enum.add_argument("--count-only", action="store_true", help="print the report")
    p_enum.add_argument("--profile", help="append index, level and steps as TSV")
    p_enum.set_defaults(handler=cmd_enum)

    p_family = sub.add_parser("family", help="print a benchmark formula")
    kinds = p_family.add_subparsers(dest="kind", required=True)
    p_chain = kinds.add_parser("chain", help="dep(x1;xk) & ... & dep(x(k-1);xk)")
    p_chain.add_argument("--k", type=int, required=True)
    p_random = kinds.add_parser("random", help="random atoms over x1..xn")
    p_random.add_argument("--vars", type=int, required=True)
    p_random.add_argument("--atoms", type=int, required=True)
    p_random.add_argument("--literals", type=int, default=0)
    p_random.add_argument("--seed", type=int, default=0)
    p_family.set_defaults(handler=cmd_family)

    p_orbit = sub.add_parser("orbit", help="print the orbit of a team")
    p_orbit.add_argument("--team", required=True, help="e.g. 000,010,100")
    _add_formula_source(p_orbit, required=False)
    p_orbit.set_defaults(handler=cmd_orbit)

    p_seeds = sub.add_parser("seeds", help="print zero-containing satisfying teams")
    _add_formula_source(p_seeds, required=True)
    p_seeds.add_argument("--level", "--seed-level", type=int, required=True)
    p_seeds.set_defaults(handler=cmd_seeds)

    p_reduce = sub.add_parser("reduce", help="print the reduced formula")
    _add_formula_source(p_reduce, required=True)
    p_reduce.set_defaults(handler=cmd_reduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit status."""
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", force=True)
    try:
        status: int = args.handler(args)
    except SizeLimitError as e:
        logger.error("%s", e)  # noqa: TRY400
        return EXIT_SIZE
    except (ValueError, OSError) as e:
        logger.error("%s", e)  # noqa: TRY400
        return EXIT_INPUT
    return status


def cli() -> None:
    """Team enumeration CLI."""
    sys.exit(main())


if __name__ == "__main__":
    cli()
