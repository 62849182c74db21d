"""
Exact computation in the integer group algebra ZG.

For a family B = (A_1, ..., A_n) of nonempty subsets, N_B(g) counts the tuples
(a_1, ..., a_n) in A_1 × ... × A_n with a_1·...·a_n = g. The counting vector is
the product [A_1]...[A_n] in ZG, and for every g

    N_B(g) - (-1)^n N_B̄(g) = d(B) = (∏|A_i| - (-1)^n ∏|Ā_i|) / |G|

where B̄ is the family of complements. Everything here is exact: a violation
of that identity is reported as ``InternalInconsistency``, never returned.
"""
import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from config import BRUTEFORCE_CAP
from kernels import Kernel, get_kernel
from models.errors import EmptySubset, InternalInconsistency, InvalidSpec, TooLarge
from models.schemas import CheckResult, Decision, TruthCheck, Trichotomy, VerificationReport
from services.group_core import FiniteGroup
from services.subset_algebra import (
    Subset,
    SubsetFamily,
    complement,
    fold_product,
    inverse_set,
    power,
    product,
    subgroup_index,
)

logger = logging.getLogger(__name__)


class GroupAlgebraVector:
    """Element of ZG: one exact integer coefficient per group element"""

    __slots__ = ("group", "coeffs", "kernel")

    def __init__(self, group: FiniteGroup, coeffs: Union[np.ndarray, Sequence[int]], kernel: Optional[Kernel] = None):
        self.kernel = kernel or get_kernel()
        if len(coeffs) != group.order:
            raise InvalidSpec(f"Vector length {len(coeffs)} does not match group order {group.order}")
        self.group = group
        self.coeffs = self.kernel.from_values(list(coeffs))

    @classmethod
    def zero(cls, group: FiniteGroup, kernel: Optional[Kernel] = None) -> "GroupAlgebraVector":
        return cls(group, [0] * group.order, kernel)

    def coefficient(self, g: int) -> int:
        return int(self.coeffs[g])

    def to_list(self) -> List[int]:
        return [int(c) for c in self.coeffs]

    def total(self) -> int:
        return sum(self.to_list())

    def support(self) -> Subset:
        return Subset(self.group, np.array([c != 0 for c in self.coeffs], dtype=bool))

    def _combine(self, other: "GroupAlgebraVector", sign: int) -> "GroupAlgebraVector":
        self.group.check_same(other.group)
        values = [a + sign * b for a, b in zip(self.to_list(), other.to_list())]
        return GroupAlgebraVector(self.group, values, self.kernel)

    def __add__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        return self._combine(other, 1)

    def __sub__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        return self._combine(other, -1)

    def __neg__(self) -> "GroupAlgebraVector":
        return self.scale(-1)

    def scale(self, k: int) -> "GroupAlgebraVector":
        return GroupAlgebraVector(self.group, [k * c for c in self.to_list()], self.kernel)

    def __mul__(self, other: Union["GroupAlgebraVector", int]) -> "GroupAlgebraVector":
        if isinstance(other, GroupAlgebraVector):
            return convolve(self, other)
        return self.scale(int(other))

    def __rmul__(self, k: int) -> "GroupAlgebraVector":
        return self.scale(int(k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraVector):
            return NotImplemented
        return self.group == other.group and self.to_list() == other.to_list()

    def __repr__(self) -> str:
        return f"GroupAlgebraVector({self.group.name}, {self.to_list()})"


@dataclass(frozen=True)
class CountReport:
    family: SubsetFamily
    counts: GroupAlgebraVector
    counts_complement: GroupAlgebraVector
    d: int

    @property
    def n(self) -> int:
        return len(self.family)


def indicator(a: Subset, backend: Optional[str] = None) -> GroupAlgebraVector:
    """[A] = Σ_{x∈A} x; the empty set gives the zero vector"""
    return GroupAlgebraVector(a.group, a.mask.astype(np.int64).tolist(), get_kernel(backend))


def convolve(u: GroupAlgebraVector, v: GroupAlgebraVector) -> GroupAlgebraVector:
    u.group.check_same(v.group)
    kernel = u.kernel
    v_coeffs = v.coeffs if v.kernel is kernel else kernel.from_values(v.to_list())
    coeffs = kernel.convolve(u.group.mul_table, u.coeffs, v_coeffs)
    return GroupAlgebraVector(u.group, list(coeffs), kernel)


def _fold_indicators(subsets: Sequence[Subset], backend: Optional[str]) -> GroupAlgebraVector:
    result = indicator(subsets[0], backend)
    for s in subsets[1:]:
        result = convolve(result, indicator(s, backend))
    return result


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _d_numerator(family: SubsetFamily) -> int:
    order = family.group.order
    sizes = family.cardinalities()
    return math.prod(sizes) - _sign(len(sizes)) * math.prod(order - s for s in sizes)


def d_of_family(family: SubsetFamily) -> int:
    """d(B); |G| always divides the numerator, so the result is an exact integer"""
    d, remainder = divmod(_d_numerator(family), family.group.order)
    if remainder:
        raise InternalInconsistency(
            f"|G|={family.group.order} does not divide the numerator of d(B) for {family.describe()}"
        )
    return d


def count_products(family: SubsetFamily, backend: Optional[str] = None) -> CountReport:
    counts = _fold_indicators(family.members, backend)
    counts_complement = _fold_indicators(family.complements(), backend)
    d = d_of_family(family)
    sign = _sign(len(family))
    for g, (p, q) in enumerate(zip(counts.to_list(), counts_complement.to_list())):
        if p - sign * q != d:
            raise InternalInconsistency(
                f"N_B({g}) - (-1)^n N_B̄({g}) = {p - sign * q} != d(B) = {d} for {family.describe()}"
            )
    return CountReport(family, counts, counts_complement, d)


def count_products_bruteforce(family: SubsetFamily, cap: Optional[int] = None) -> GroupAlgebraVector:
    """Tally a_1·…·a_n over every tuple of A_1 × … × A_n (independent oracle for N_B)"""
    cap = BRUTEFORCE_CAP if cap is None else cap
    tuples = math.prod(family.cardinalities())
    if tuples > cap:
        raise TooLarge(f"{tuples} tuples exceed the brute-force cap {cap}", cap)
    table = family.group.mul_table
    partial = family.members[0].indices()
    for member in family.members[1:]:
        partial = table[partial[:, None], member.indices()[None, :]].ravel()
    tally = np.bincount(partial, minlength=family.group.order)
    return GroupAlgebraVector(family.group, tally.tolist(), get_kernel("exact"))


# Decisions

def decide_by_sign(family: SubsetFamily) -> Decision:
    n = len(family)
    d = d_of_family(family)
    if d == 0:
        if n % 2:
            raise InternalInconsistency(f"d(B) = 0 with odd n = {n} for {family.describe()}")
        return Decision.PRODUCTS_EQUAL
    if n % 2:
        return Decision.INDETERMINATE
    return Decision.PRODUCT_IS_G if d > 0 else Decision.COMPLEMENT_PRODUCT_IS_G


def mann_pair(a1: Subset, a2: Subset) -> Trichotomy:
    a1.group.check_same(a2.group)
    if a1.is_empty() or a2.is_empty():
        raise EmptySubset("Both subsets must be nonempty")
    excess = a1.cardinality + a2.cardinality - a1.group.order
    if excess > 0:
        return Trichotomy.ABOVE
    if excess < 0:
        return Trichotomy.BELOW
    return Trichotomy.EQUAL


def theorem3_decide(family: SubsetFamily) -> Decision:
    """
    Decide from pairwise cardinalities: a pair summing above |G| forces the
    product to be G, a pair below forces the complements' product to be G.
    When every pair sums to exactly |G| both outcomes occur.
    """
    if len(family) < 2:
        raise InvalidSpec("theorem3_decide needs a family of at least two subsets")
    order = family.group.order
    sums = [a + b for a, b in combinations(family.cardinalities(), 2)]
    if any(s > order for s in sums):
        return Decision.PRODUCT_IS_G
    if any(s < order for s in sums):
        return Decision.COMPLEMENT_PRODUCT_IS_G
    return Decision.INDETERMINATE


def truth_check(family: SubsetFamily, decisions: Sequence[Decision]) -> TruthCheck:
    """Compare decisions with the directly computed products"""
    direct = fold_product(family.members)
    complement_product = fold_product(family.complements())
    truth = {
        Decision.PRODUCT_IS_G: direct.is_full(),
        Decision.COMPLEMENT_PRODUCT_IS_G: complement_product.is_full(),
        Decision.PRODUCTS_EQUAL: direct == complement_product,
        Decision.INDETERMINATE: True,
    }
    return TruthCheck(
        product_is_group=truth[Decision.PRODUCT_IS_G],
        complement_product_is_group=truth[Decision.COMPLEMENT_PRODUCT_IS_G],
        products_equal=truth[Decision.PRODUCTS_EQUAL],
        consistent=all(truth[d] for d in decisions),
    )


def trichotomy_holds(a1: Subset, a2: Subset, branch: Trichotomy) -> bool:
    if branch is Trichotomy.ABOVE:
        return product(a1, a2).is_full()
    if branch is Trichotomy.BELOW:
        return product(complement(a1), complement(a2)).is_full()
    return product(a1, a2) == product(complement(a1), complement(a2))


# Counting identity verification

def verify_theorem2(
    family: SubsetFamily,
    bruteforce_cap: Optional[int] = None,
    include_counts: bool = False,
    backend: Optional[str] = None,
) -> VerificationReport:
    """
    Check the counting identity coefficient-wise and as a vector identity,
    the total count, divisibility, agreement with brute force (when under the
    cap) and agreement of the support with the subset product. Failures are
    report content, not exceptions.
    """
    group = family.group
    n = len(family)
    sign = _sign(n)
    checks: List[CheckResult] = []

    d, remainder = divmod(_d_numerator(family), group.order)
    checks.append(CheckResult(name="divisibility", passed=remainder == 0,
                              detail=f"numerator mod |G| = {remainder}"))

    counts = _fold_indicators(family.members, backend)
    counts_complement = _fold_indicators(family.complements(), backend)
    p, q = counts.to_list(), counts_complement.to_list()

    witness = next((g for g in range(group.order) if p[g] - sign * q[g] != d), None)
    checks.append(CheckResult(name="identity", passed=witness is None, witness=witness,
                              detail=f"N_B(g) - ({sign}) N_B̄(g) = {d} for every g"))

    total = math.prod(family.cardinalities())
    checks.append(CheckResult(name="total_count", passed=sum(p) == total,
                              detail=f"Σ N_B(g) = {sum(p)}, ∏|A_i| = {total}"))

    full = indicator(Subset.full(group), backend)
    vector_ok = counts - counts_complement.scale(sign) == full.scale(d)
    checks.append(CheckResult(name="vector_identity", passed=vector_ok,
                              detail="∏[A_i] - (-1)^n ∏[Ā_i] = d(B)[G]"))

    # reversing B changes N_B in a non-abelian group, but not the constant d(B)
    members = tuple(reversed(family.members))
    p_rev = _fold_indicators(members, backend).to_list()
    q_rev = _fold_indicators(tuple(complement(a) for a in members), backend).to_list()
    reorder_witness = next((g for g in range(group.order) if p_rev[g] - sign * q_rev[g] != d), None)
    checks.append(CheckResult(name="order_invariance", passed=reorder_witness is None, witness=reorder_witness,
                              detail=f"reversed family, counts {'changed' if p_rev != p else 'unchanged'}"))

    support = counts.support()
    direct = fold_product(family.members)
    support_witness = next((g for g in range(group.order) if (g in support) != (g in direct)), None)
    checks.append(CheckResult(name="support_consistency", passed=support_witness is None,
                              witness=support_witness))

    bruteforce_checked = False
    cap = BRUTEFORCE_CAP if bruteforce_cap is None else bruteforce_cap
    if total <= cap:
        oracle = count_products_bruteforce(family, cap).to_list()
        oracle_witness = next((g for g in range(group.order) if oracle[g] != p[g]), None)
        checks.append(CheckResult(name="bruteforce_agreement", passed=oracle_witness is None,
                                  witness=oracle_witness))
        bruteforce_checked = True

    passed = all(c.passed for c in checks)
    first_witness = next((c.witness for c in checks if not c.passed and c.witness is not None), None)
    if not passed:
        logger.error(f"Counting identity failed for {family.describe()} on {group.name}: "
                     f"{[c.name for c in checks if not c.passed]}")
    return VerificationReport(
        group=group.name,
        family=family.describe(),
        n=n,
        cardinalities=list(family.cardinalities()),
        d=d,
        passed=passed,
        witness=first_witness,
        bruteforce_checked=bruteforce_checked,
        checks=checks,
        counts=p if include_counts else None,
        counts_complement=q if include_counts else None,
    )


# Covering consequences and witnesses

def half_cover_check(a: Subset, b: Optional[Subset] = None) -> Dict[str, bool]:
    """
    Equalities guaranteed when |A| > |G|/2 (and, for those involving B,
    |B| >= |G|/2), each mapped to whether the computed product is G.
    Empty when the hypothesis on A fails.
    """
    order = a.group.order
    if 2 * a.cardinality <= order:
        return {}
    a_inv = inverse_set(a)
    claims = {
        "A·A = G": product(a, a).is_full(),
        "A·A⁻¹ = G": product(a, a_inv).is_full(),
        "A⁻¹·A = G": product(a_inv, a).is_full(),
    }
    if b is not None and 2 * b.cardinality >= order:
        a.group.check_same(b.group)
        claims["A·B = G"] = product(a, b).is_full()
        claims["B·A = G"] = product(b, a).is_full()
    return claims


def complement_swap(a: Subset) -> Tuple[Subset, Subset]:
    """(A·Ā, Ā·A); the two agree for every A since |A| + |Ā| = |G|"""
    a_bar = complement(a)
    return product(a, a_bar), product(a_bar, a)


def index_two_power_witness(h: Subset, n: int) -> Subset:
    """H^n for a subgroup of index 2: equals H, so never G"""
    if subgroup_index(h) != 2:
        raise InvalidSpec(f"{h} is not a subgroup of index 2")
    return power(h, n)


def prefix_cover_witness(prefix: SubsetFamily, last: Subset) -> Subset:
    """A_1…A_{n-1} = G forces A_1…A_n = G for any A_n containing 1 with |A_n| = |G|/2"""
    group = prefix.group
    group.check_same(last.group)
    if not fold_product(prefix.members).is_full():
        raise InvalidSpec(f"Prefix {prefix.describe()} does not cover {group.name}")
    if 0 not in last or 2 * last.cardinality != group.order:
        raise InvalidSpec(f"{last} must contain the identity and have |G|/2 elements")
    return fold_product(list(prefix.members) + [last])
