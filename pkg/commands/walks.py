"""
walk command
"""
import argparse
import csv
import logging
import sys

from commands.utils import add_spec_argument, build_scenario, emit, load_group, parse_subsets
from config import ALLOWED_PROBABILITY_BACKENDS, DEFAULT_TOL
from models.errors import EXIT_OK
from models.schemas import ConvergenceReport, OutputFormat
from services.random_walk import convergence_probe, uniform_on
from utils import format_number

logger = logging.getLogger(__name__)


def write_tv_csv(report: ConvergenceReport, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["n", "tv"])
    writer.writerows(report.to_csv_rows())


def cmd_walk(args: argparse.Namespace) -> int:
    """Trace tv(P^(n), U) for P uniform on the given carrier"""
    scenario = build_scenario(
        args, [args.subset], tol=args.tol, max_n=args.max_n, max_steps=args.max_steps, backend=args.backend
    )
    group = load_group(scenario)
    (carrier,) = parse_subsets(group, scenario)
    report = convergence_probe(uniform_on(carrier, args.backend), args.tol, args.max_n, args.max_steps)

    if args.csv:
        with open(args.csv, "w", newline="") as f:
            write_tv_csv(report, f)
        logger.info(f"Wrote {len(report.tv_trace)} rows to {args.csv}")

    if OutputFormat(args.format) is OutputFormat.CSV:
        write_tv_csv(report, sys.stdout)
        return EXIT_OK

    stabilization = report.stabilization
    lines = [
        f"group: {report.group}",
        f"carrier: {report.carrier}",
        f"backend: {report.backend}",
    ]
    if stabilization.stabilizes:
        lines.append(f"stabilizes: yes, k = {stabilization.k}")
    else:
        lines.append(f"stabilizes: no, cycle from k = {stabilization.cycle_start} "
                     f"with period {stabilization.cycle_period}")
    if report.converged:
        lines.append(f"converged: yes, tv < {format_number(report.tol)} at n = {report.n_at_tol}")
    else:
        lines.append(f"converged: no within n = {len(report.tv_trace)}")
    lines.append(f"last tv: {format_number(report.tv_trace[-1])}")
    emit(args, report, lines)
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("walk", help="random walk driven by the uniform probability on a carrier")
    add_spec_argument(parser)
    parser.add_argument("subset", help="carrier subset literal")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL, help="stop once tv drops below this")
    parser.add_argument("--max-n", type=int, default=None, help="largest convolution power traced")
    parser.add_argument("--max-steps", type=int, default=None, help="stabilization iteration bound")
    parser.add_argument("--csv", metavar="PATH", default=None, help="write the tv trace as n,tv rows")
    parser.add_argument("--backend", choices=sorted(ALLOWED_PROBABILITY_BACKENDS), default=None)
    parser.set_defaults(handler=cmd_walk)
