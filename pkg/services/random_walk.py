"""
Probabilities on a finite group, their convolution powers P^(n), and total
variation distance to the uniform probability.

The rational backend keeps every weight an exact ``Fraction``; the float
backend uses float64 and is only compared up to FLOAT_SUM_TOLERANCE.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import numpy as np

from config import (
    ALLOWED_PROBABILITY_BACKENDS,
    DEFAULT_MAX_N,
    FLOAT_SUM_TOLERANCE,
    PROBABILITY_BACKEND,
)
from kernels import exact_kernel
from models.errors import EmptySubset, InvalidSpec
from models.schemas import ConvergenceReport
from services.group_core import FiniteGroup
from services.subset_algebra import Subset, stabilizes_at_G

logger = logging.getLogger(__name__)

Weight = Union[Fraction, float]


class ProbDist:
    """Nonnegative weights summing to one, indexed by group elements"""

    __slots__ = ("group", "weights", "backend")

    def __init__(self, group: FiniteGroup, weights: Sequence[Weight], backend: Optional[str] = None):
        backend = backend or PROBABILITY_BACKEND
        if backend not in ALLOWED_PROBABILITY_BACKENDS:
            raise InvalidSpec(f"Unknown probability backend '{backend}'")
        if len(weights) != group.order:
            raise InvalidSpec(f"Expected {group.order} weights, got {len(weights)}")
        if backend == "rational":
            values = exact_kernel.from_values([Fraction(w) for w in weights])
            if sum(values) != 1:
                raise InvalidSpec(f"Weights sum to {sum(values)}, expected exactly 1")
        else:
            values = np.array([float(w) for w in weights], dtype=np.float64)
            if abs(values.sum() - 1.0) > FLOAT_SUM_TOLERANCE:
                raise InvalidSpec(f"Weights sum to {values.sum()!r}, expected 1")
        if any(w < 0 for w in values):
            raise InvalidSpec("Weights must be nonnegative")
        self.group = group
        self.weights = values
        self.backend = backend

    def weight(self, g: int) -> Weight:
        return self.weights[g]

    def to_list(self) -> List[Weight]:
        return list(self.weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbDist):
            return NotImplemented
        return self.group == other.group and self.to_list() == other.to_list()

    def __repr__(self) -> str:
        return f"ProbDist({self.group.name}, {self.backend})"


def uniform(group: FiniteGroup, backend: Optional[str] = None) -> ProbDist:
    """U(g) = 1/|G|"""
    return ProbDist(group, [Fraction(1, group.order)] * group.order, backend)


def uniform_on(a: Subset, backend: Optional[str] = None) -> ProbDist:
    if a.is_empty():
        raise EmptySubset("Cannot spread probability over the empty subset")
    w = Fraction(1, a.cardinality)
    return ProbDist(a.group, [w if bit else Fraction(0) for bit in a.mask], backend)


def point_mass(group: FiniteGroup, g: int = 0, backend: Optional[str] = None) -> ProbDist:
    return ProbDist(group, [Fraction(int(i == g)) for i in range(group.order)], backend)


def carrier(p: ProbDist) -> Subset:
    """{g : P(g) != 0}"""
    return Subset(p.group, np.array([w != 0 for w in p.weights], dtype=bool))


def convolve_prob(p: ProbDist, q: ProbDist) -> ProbDist:
    p.group.check_same(q.group)
    if p.backend != q.backend:
        raise InvalidSpec(f"Cannot mix {p.backend} and {q.backend} backends")
    table = p.group.mul_table
    if p.backend == "rational":
        out = exact_kernel.convolve(table, p.weights, q.weights)
    else:
        out = np.zeros(p.group.order, dtype=np.float64)
        for x in np.flatnonzero(p.weights):
            out[table[x]] += p.weights[x] * q.weights
    return ProbDist(p.group, list(out), p.backend)


def n_fold(p: ProbDist, n: int, method: str = "iterate") -> ProbDist:
    """P^(n); ``squaring`` is the fast path when only the final power matters"""
    if n < 1:
        raise InvalidSpec(f"n must be >= 1, got {n}")
    if method == "iterate":
        result = p
        for _ in range(n - 1):
            result = convolve_prob(result, p)
        return result
    if method != "squaring":
        raise InvalidSpec(f"Unknown n_fold method '{method}'")
    result: Optional[ProbDist] = None
    base = p
    while n:
        if n & 1:
            result = base if result is None else convolve_prob(result, base)
        n >>= 1
        if n:
            base = convolve_prob(base, base)
    return result


def total_variation(p: ProbDist, q: ProbDist) -> Weight:
    """½ Σ_g |p(g) - q(g)|"""
    p.group.check_same(q.group)
    if p.backend == "rational" and q.backend == "rational":
        return sum((abs(a - b) for a, b in zip(p.weights, q.weights)), Fraction(0)) / 2
    return 0.5 * float(sum(abs(float(a) - float(b)) for a, b in zip(p.weights, q.weights)))


def tv_to_uniform(p: ProbDist) -> Weight:
    return total_variation(p, uniform(p.group, p.backend))


def convergence_probe(
    p: ProbDist,
    tol: float,
    max_n: Optional[int] = None,
    max_steps: Optional[int] = None,
) -> ConvergenceReport:
    """
    Trace tv(P^(n), U) for n = 1..max_n, stopping at the first n below ``tol``,
    and run the stabilization test on the carrier of P. Both findings are
    reported side by side; neither is derived from the other.
    """
    if tol <= 0:
        raise InvalidSpec(f"tol must be positive, got {tol}")
    max_n = DEFAULT_MAX_N if max_n is None else max_n
    if max_n < 1:
        raise InvalidSpec(f"max_n must be >= 1, got {max_n}")

    stabilization = stabilizes_at_G(carrier(p), max_steps)
    target = uniform(p.group, p.backend)
    trace: List[Weight] = []
    n_at_tol = None
    current = p
    for n in range(1, max_n + 1):
        if n > 1:
            current = convolve_prob(current, p)
        tv = total_variation(current, target)
        trace.append(tv)
        if tv < tol:
            n_at_tol = n
            break
    logger.debug(f"Probe on {p.group.name}: converged={n_at_tol is not None} after {len(trace)} steps")
    return ConvergenceReport(
        group=p.group.name,
        carrier=str(carrier(p)),
        backend=p.backend,
        tol=tol,
        converged=n_at_tol is not None,
        n_at_tol=n_at_tol,
        tv_trace=trace,
        stabilization=stabilization,
    )
