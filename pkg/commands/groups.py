"""
group command
"""
import argparse

from commands.utils import add_spec_argument, build_scenario, emit, load_group
from models.errors import EXIT_OK
from models.schemas import GroupReport
from services.group_core import format_cayley_table


def cmd_group(args: argparse.Namespace) -> int:
    """Build a group and print its order, identity and optionally its table"""
    group = load_group(build_scenario(args))
    report = GroupReport(
        name=group.name,
        group_id=group.group_id,
        order=group.order,
        identity=group.label(0),
        labels=list(group.labels) if group.labels else None,
        table=group.mul_table.tolist() if args.table else None,
    )

    lines = [
        f"group: {report.name}",
        f"id: {report.group_id}",
        f"order: {report.order}",
        f"identity: {report.identity}",
    ]
    if args.table:
        lines.extend(format_cayley_table(group).splitlines())
    elif report.labels:
        lines.append("labels: " + " ".join(report.labels))
    emit(args, report, lines)
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("group", help="build a group and print its order and identity")
    add_spec_argument(parser)
    parser.add_argument("--table", action="store_true", help="also print the Cayley table")
    parser.set_defaults(handler=cmd_group)
