"""
Shared plumbing for the command modules: argument validation, group and
subset parsing with located errors, and report output.
"""
import argparse
import math
import sys
from typing import List, Optional, Sequence, TextIO

from pydantic import BaseModel

from config import APP_NAME, APP_VERSION, SYMMETRIC_MAX_DEGREE, TABLE_ORDER_CAP
from models.errors import InvalidSpec
from models.schemas import OutputFormat, ScenarioSpec
from services.group_core import FiniteGroup, make_group
from services.subset_algebra import Subset, SubsetFamily, parse_subset


def build_scenario(args: argparse.Namespace, subsets: Optional[Sequence[str]] = None, **params) -> ScenarioSpec:
    """Validate the raw command-line inputs of one invocation"""
    return ScenarioSpec(
        group=args.spec,
        subsets=list(subsets or []),
        params={k: v for k, v in params.items() if v is not None},
        output_format=args.format,
    )


def load_group(scenario: ScenarioSpec) -> FiniteGroup:
    return make_group(scenario.group)


def parse_subsets(group: FiniteGroup, scenario: ScenarioSpec) -> List[Subset]:
    """
    Parse every subset literal. Error columns count from the start of the
    command line ``SPEC SUBSET1 SUBSET2 ...`` joined with single spaces.
    """
    column = len(scenario.group) + 2
    subsets = []
    for literal in scenario.subsets:
        subsets.append(parse_subset(group, literal, column))
        column += len(literal) + 1
    return subsets


def parse_family(group: FiniteGroup, scenario: ScenarioSpec) -> SubsetFamily:
    return SubsetFamily(tuple(parse_subsets(group, scenario)))


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def emit(args: argparse.Namespace, report: BaseModel, lines: Sequence[str], stream: Optional[TextIO] = None) -> None:
    """Write ``report`` as JSON or ``lines`` as text, depending on ``--format``"""
    stream = stream or sys.stdout
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        stream.write(report.model_dump_json(indent=2) + "\n")
        return
    if fmt is OutputFormat.CSV:
        raise InvalidSpec(f"CSV output is only available for the walk command, not '{args.command}'")
    if not args.no_header:
        stream.write(f"# {APP_NAME} {APP_VERSION}\n")
    for line in lines:
        stream.write(line + "\n")


def max_symmetric_degree() -> int:
    """Largest M for which sym:M fits under both the degree limit and TABLE_ORDER_CAP"""
    return max((m for m in range(1, SYMMETRIC_MAX_DEGREE + 1) if math.factorial(m) <= TABLE_ORDER_CAP), default=0)


def add_spec_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "spec",
        help=(
            "group descriptor: cyclic:N, ea:P,K, dihedral:M, "
            f"sym:M (M <= {max_symmetric_degree()} with TABLE_ORDER_CAP={TABLE_ORDER_CAP}), "
            "q8, prod(X,Y), table:PATH, perm:[(0,1,2);(0,1)]"
        ),
    )
