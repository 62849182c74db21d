"""
product and stabilize commands
"""
import argparse

from commands.utils import add_spec_argument, build_scenario, emit, load_group, parse_subsets, yes_no
from models.errors import EXIT_OK
from models.schemas import ProductReport
from services.subset_algebra import fold_product, stabilizes_at_G


def cmd_product(args: argparse.Namespace) -> int:
    """Fold the subset product A_1·…·A_n and say whether it is all of G"""
    scenario = build_scenario(args, args.subsets)
    group = load_group(scenario)
    subsets = parse_subsets(group, scenario)
    result = fold_product(subsets)
    report = ProductReport(
        group=group.name,
        factors=[str(s) for s in subsets],
        result=str(result),
        cardinality=result.cardinality,
        equals_group=result.is_full(),
    )
    emit(args, report, [
        f"group: {report.group}",
        f"product: {' · '.join(report.factors)} = {report.result}",
        f"cardinality: {report.cardinality} of {group.order}",
        f"equals G: {yes_no(report.equals_group)}",
    ])
    return EXIT_OK


def cmd_stabilize(args: argparse.Namespace) -> int:
    """Iterate A^k until it reaches G or cycles"""
    scenario = build_scenario(args, [args.subset], max_steps=args.max_steps)
    group = load_group(scenario)
    (subset,) = parse_subsets(group, scenario)
    report = stabilizes_at_G(subset, args.max_steps)

    lines = [f"group: {group.name}", f"subset: {subset}"]
    if report.stabilizes:
        lines.append(f"stabilizes: yes, A^k = G from k = {report.k}")
    else:
        lines.append(f"stabilizes: no, powers cycle from k = {report.cycle_start} with period {report.cycle_period}")
    lines.append("sizes: " + " ".join(str(s) for s in report.sizes))
    emit(args, report, lines)
    return EXIT_OK


def register(subparsers) -> None:
    product_parser = subparsers.add_parser("product", help="fold a subset product and compare it with G")
    add_spec_argument(product_parser)
    product_parser.add_argument("subsets", nargs="+", help="subset literals: 0,1,5 | all | empty | comp:<literal>")
    product_parser.set_defaults(handler=cmd_product)

    stabilize_parser = subparsers.add_parser("stabilize", help="find k with A^k = G, or the cycle A^k falls into")
    add_spec_argument(stabilize_parser)
    stabilize_parser.add_argument("subset", help="subset literal")
    stabilize_parser.add_argument("--max-steps", type=int, default=None, help="iteration bound (default 4|G|)")
    stabilize_parser.set_defaults(handler=cmd_stabilize)
