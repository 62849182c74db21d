"""
examples command
"""
import argparse

from commands.utils import emit
from models.errors import EXIT_OK, ClaimDeviation
from services.scenarios import SCENARIOS, run_scenarios


def cmd_examples(args: argparse.Namespace) -> int:
    """Run the golden scenarios; a deviating claim raises ClaimDeviation after the report is written"""
    report = run_scenarios(args.name)
    lines = []
    for result in report.results:
        lines.append(f"{result.name}: {'holds' if result.holds else 'DEVIATES'} - {result.description}")
        lines.extend(f"  {detail}" for detail in result.details)
    emit(args, report, lines)
    if not report.all_hold:
        deviating = [r.name for r in report.results if not r.holds]
        raise ClaimDeviation(f"Scenarios deviate: {', '.join(deviating)}", {"scenarios": deviating})
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("examples", help="run the worked examples as golden scenarios")
    parser.add_argument("name", nargs="?", default="all", choices=["all"] + list(SCENARIOS))
    parser.set_defaults(handler=cmd_examples)
