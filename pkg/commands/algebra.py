"""
theorem2, decide and sweep commands
"""
import argparse

from commands.utils import add_spec_argument, build_scenario, emit, load_group, parse_family, yes_no
from config import ALLOWED_INTEGER_BACKENDS
from models.errors import EXIT_OK, ClaimDeviation
from models.schemas import DecisionReport
from services.group_algebra import d_of_family, decide_by_sign, theorem3_decide, truth_check, verify_theorem2
from services.sweeps import theorem2_sweep
from utils import truncate_string


def cmd_theorem2(args: argparse.Namespace) -> int:
    """Verify N_B(g) - (-1)^n N_B̄(g) = d(B) for every g"""
    scenario = build_scenario(args, args.subsets, bruteforce_cap=args.bruteforce_cap, backend=args.backend)
    group = load_group(scenario)
    family = parse_family(group, scenario)
    report = verify_theorem2(
        family,
        bruteforce_cap=args.bruteforce_cap,
        include_counts=args.counts,
        backend=args.backend,
    )

    lines = [
        f"family: {report.family}",
        f"d(B) = {report.d}",
    ]
    for check in report.checks:
        mark = "ok" if check.passed else "FAIL"
        suffix = f" (witness g={group.label(check.witness)})" if check.witness is not None else ""
        detail = f": {check.detail}" if check.detail else ""
        lines.append(f"[{mark}] {check.name}{detail}{suffix}")
    if report.counts is not None:
        lines.append("g N_B(g) N_B̄(g)")
        for g, (p, q) in enumerate(zip(report.counts, report.counts_complement)):
            lines.append(f"{group.label(g)} {p} {q}")
    lines.append(report.summary_line())
    emit(args, report, lines)
    if not report.passed:
        raise ClaimDeviation(
            f"Counting identity failed for {report.family} on {report.group}",
            {"failed_checks": [c.name for c in report.checks if not c.passed], "witness": report.witness},
        )
    return EXIT_OK


def cmd_decide(args: argparse.Namespace) -> int:
    """Decide the product from cardinalities alone, optionally checked against the direct product"""
    scenario = build_scenario(args, args.subsets, check=args.check)
    group = load_group(scenario)
    family = parse_family(group, scenario)
    theorem3 = theorem3_decide(family)
    by_sign = decide_by_sign(family)
    truth = truth_check(family, [theorem3, by_sign]) if args.check else None
    report = DecisionReport(
        group=group.name,
        family=family.describe(),
        d=d_of_family(family),
        theorem3=theorem3,
        by_sign=by_sign,
        truth=truth,
    )

    lines = [
        f"family: {report.family}",
        f"d(B) = {report.d}",
        f"pairwise cardinalities: {report.theorem3.value}",
        f"sign of d(B): {report.by_sign.value}",
    ]
    if truth is not None:
        lines.extend([
            f"product is G: {yes_no(truth.product_is_group)}",
            f"complement product is G: {yes_no(truth.complement_product_is_group)}",
            f"products equal: {yes_no(truth.products_equal)}",
            f"decisions consistent: {yes_no(truth.consistent)}",
        ])
    emit(args, report, lines)
    if truth is not None and not truth.consistent:
        raise ClaimDeviation(
            f"Cardinality decisions contradict the direct product for {report.family}",
            {"theorem3": theorem3.value, "by_sign": by_sign.value},
        )
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run the randomized counting-identity sweep"""
    report = theorem2_sweep(
        group_specs=args.groups,
        ns=args.ns,
        families_per_group=args.families,
        seed=args.seed,
        parallel=args.parallel,
        bruteforce_cap=args.bruteforce_cap,
    )
    lines = [
        f"groups: {' '.join(report.groups)}",
        f"n: {' '.join(str(n) for n in report.ns)}",
        f"families per (group, n): {report.families_per_group}",
        f"seed: {report.seed}",
        f"passed: {report.passed} of {report.total}",
    ]
    lines.extend(f"FAIL {truncate_string(f.summary_line(), 160)}" for f in report.failures)
    emit(args, report, lines)
    if report.passed != report.total:
        raise ClaimDeviation(
            f"{report.total - report.passed} of {report.total} sweep families failed",
            {"seed": report.seed},
        )
    return EXIT_OK


def register(subparsers) -> None:
    theorem2_parser = subparsers.add_parser("theorem2", help="verify the counting identity for a family")
    add_spec_argument(theorem2_parser)
    theorem2_parser.add_argument("subsets", nargs="+", help="nonempty subset literals A_1 ... A_n")
    theorem2_parser.add_argument("--counts", action="store_true", help="print N_B(g) and N_B̄(g) for every g")
    theorem2_parser.add_argument("--bruteforce-cap", type=int, default=None,
                                 help="largest ∏|A_i| cross-checked by tuple enumeration")
    theorem2_parser.add_argument("--backend", choices=sorted(ALLOWED_INTEGER_BACKENDS), default=None)
    theorem2_parser.set_defaults(handler=cmd_theorem2)

    decide_parser = subparsers.add_parser("decide", help="decide A_1···A_n = G from cardinalities")
    add_spec_argument(decide_parser)
    decide_parser.add_argument("subsets", nargs="+", help="at least two nonempty subset literals")
    decide_parser.add_argument("--check", action="store_true", help="compare with the directly computed products")
    decide_parser.set_defaults(handler=cmd_decide)

    sweep_parser = subparsers.add_parser("sweep", help="randomized counting-identity sweep")
    sweep_parser.add_argument("--groups", nargs="+", default=None, help="group descriptors (default: built-in grid)")
    sweep_parser.add_argument("--ns", nargs="+", type=int, default=None, help="family sizes (default: 2 3 4)")
    sweep_parser.add_argument("--families", type=int, default=None, help="random families per (group, n)")
    sweep_parser.add_argument("--seed", type=int, default=None)
    sweep_parser.add_argument("--parallel", action="store_true", help="run (group, n) jobs in a process pool")
    sweep_parser.add_argument("--bruteforce-cap", type=int, default=None)
    sweep_parser.set_defaults(handler=cmd_sweep)
