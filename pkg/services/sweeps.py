"""
Randomized verification of the counting identity across a grid of groups and
family sizes.

Each (group, n) job draws its families from its own seed sequence, so the
report is the same whether jobs run in order or in a process pool.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import RANDOM_SEED, SWEEP_BRUTEFORCE_CAP, SWEEP_FAMILIES_PER_GROUP
from models.errors import InvalidSpec
from models.schemas import SweepReport, VerificationReport
from services.group_algebra import verify_theorem2
from services.group_core import make_group
from services.subset_algebra import random_family

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_GROUPS: Tuple[str, ...] = tuple(f"cyclic:{n}" for n in range(2, 13)) + (
    "ea:2,2",
    "ea:3,3",
    "sym:3",
    "dihedral:4",
    "q8",
)
DEFAULT_SWEEP_NS: Tuple[int, ...] = (2, 3, 4)

SweepJob = Tuple[str, int, int, int, int, int]


def _run_job(job: SweepJob) -> Tuple[int, int, List[VerificationReport]]:
    """Verify ``families`` random families for one (group, n); returns (total, passed, failures)"""
    spec, group_idx, n, families, seed, cap = job
    group = make_group(spec)
    rng = np.random.default_rng(np.random.SeedSequence([seed, group_idx, n]))
    failures = []
    for _ in range(families):
        report = verify_theorem2(random_family(group, n, rng), bruteforce_cap=cap)
        if not report.passed:
            failures.append(report)
    return families, families - len(failures), failures


def theorem2_sweep(
    group_specs: Optional[Sequence[str]] = None,
    ns: Optional[Sequence[int]] = None,
    families_per_group: Optional[int] = None,
    seed: Optional[int] = None,
    parallel: bool = False,
    bruteforce_cap: Optional[int] = None,
) -> SweepReport:
    group_specs = list(group_specs or DEFAULT_SWEEP_GROUPS)
    ns = list(ns or DEFAULT_SWEEP_NS)
    families_per_group = SWEEP_FAMILIES_PER_GROUP if families_per_group is None else families_per_group
    seed = RANDOM_SEED if seed is None else seed
    cap = SWEEP_BRUTEFORCE_CAP if bruteforce_cap is None else bruteforce_cap
    if families_per_group < 1:
        raise InvalidSpec(f"families_per_group must be >= 1, got {families_per_group}")
    if any(n < 1 for n in ns):
        raise InvalidSpec(f"Family sizes must be >= 1, got {ns}")

    # build once up front so bad descriptors fail before any work is scheduled
    names = [make_group(spec).name for spec in group_specs]
    jobs: List[SweepJob] = [
        (spec, idx, n, families_per_group, seed, cap)
        for idx, spec in enumerate(group_specs)
        for n in ns
    ]

    if parallel:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_job, jobs))
    else:
        results = [_run_job(job) for job in jobs]

    total = sum(r[0] for r in results)
    passed = sum(r[1] for r in results)
    failures = [report for r in results for report in r[2]]
    logger.info(f"Counting identity sweep: {passed}/{total} families passed over {len(group_specs)} groups")
    return SweepReport(
        groups=names,
        ns=ns,
        families_per_group=families_per_group,
        seed=seed,
        total=total,
        passed=passed,
        failures=failures,
    )
