"""
Golden scenarios: worked examples and boundary cases for subset products
that cover a group, each checked by direct computation.

Fixture choices:
  * ex1 (subgroup H times G \\ H) runs on Z4 with H = {0,2}, on S3 with H
    generated by a transposition and on D4 with H the rotations.
  * ex3 takes A_2 to be the complement of A_1 = {e, a, b} in (Z/3)^3, the only
    reading with |A_1| + |A_2| = |G|.
  * ex4 (index-2 subgroup A_1, {e, t} inside A_2, |G| > 4) is instantiated on
    Z6 with A_1 = {0,2,4}, A_2 = {0,1} and on D4 with A_1 the rotations and
    A_2 = {e, s}.
  * complement-swap checks A·Ā = Ā·A.
"""
import logging
from typing import Callable, Dict, List

from models.errors import InvalidSpec
from models.schemas import Decision, ExamplesReport, ScenarioResult, Trichotomy
from services.group_algebra import (
    complement_swap,
    count_products_bruteforce,
    half_cover_check,
    index_two_power_witness,
    mann_pair,
    prefix_cover_witness,
    theorem3_decide,
)
from services.group_core import FiniteGroup, make_group
from services.subset_algebra import (
    Subset,
    SubsetFamily,
    complement,
    generated_subgroup,
    inverse_set,
    product,
    subgroup_index,
)

logger = logging.getLogger(__name__)

# one group per isomorphism class, orders 2 to 8
SMALL_GROUPS = (
    "cyclic:2", "cyclic:3", "cyclic:4", "ea:2,2", "cyclic:5", "cyclic:6", "sym:3", "cyclic:7",
    "cyclic:8", "prod(cyclic:2,cyclic:4)", "ea:2,3", "dihedral:4", "q8",
)


class _Checks:
    def __init__(self):
        self.lines: List[str] = []
        self.ok = True

    def claim(self, description: str, holds: bool) -> None:
        self.ok = self.ok and bool(holds)
        self.lines.append(f"[{'ok' if holds else 'FAIL'}] {description}")


def _element_of_order(group: FiniteGroup, k: int) -> int:
    return next(g for g in range(group.order) if group.element_order(g) == k)


def _nonempty_subsets(group: FiniteGroup) -> List[Subset]:
    n = group.order
    return [
        Subset(group, [(bits >> i) & 1 == 1 for i in range(n)])
        for bits in range(1, 2**n)
    ]


def subgroup_times_complement() -> ScenarioResult:
    checks = _Checks()
    z4, s3, d4 = make_group("cyclic:4"), make_group("sym:3"), make_group("dihedral:4")
    fixtures = [
        (z4, generated_subgroup(z4, [2])),
        (s3, generated_subgroup(s3, [_element_of_order(s3, 2)])),
        (d4, generated_subgroup(d4, ["r"])),
    ]
    for group, h in fixtures:
        a2 = complement(h)
        c = product(h, a2)
        checks.claim(f"{group.name}: |H| + |G\\H| = |G| with H = {h}", h.cardinality + a2.cardinality == group.order)
        checks.claim(f"{group.name}: H·(G\\H) = {c} != G", not c.is_full())
        checks.claim(f"{group.name}: mann_pair gives Equal", mann_pair(h, a2) is Trichotomy.EQUAL)
    h = fixtures[0][1]
    checks.claim("cyclic:4: {0,2}·{1,3} = {1,3}", product(h, complement(h)) == Subset.from_indices(z4, [1, 3]))
    return ScenarioResult(name="ex1", description="Subgroup times its complement is not G",
                          holds=checks.ok, details=checks.lines)


def klein_subgroups_cover() -> ScenarioResult:
    checks = _Checks()
    v4 = make_group("ea:2,2")
    a1 = Subset.from_indices(v4, ["e", "a"])
    a2 = Subset.from_indices(v4, ["e", "b"])
    checks.claim("|A1| + |A2| = |G|", a1.cardinality + a2.cardinality == v4.order)
    checks.claim("A1·A2 = G", product(a1, a2).is_full())
    checks.claim("A1 ∩ A2 = {e}", (a1 & a2) == Subset.from_indices(v4, ["e"]))
    counts = count_products_bruteforce(SubsetFamily.of(a1, a2))
    checks.claim("every g has exactly one factorization", counts.to_list() == [1] * v4.order)
    b1, b2 = complement(a1), complement(a2)
    checks.claim("Ā1·Ā2 = G", product(b1, b2).is_full())
    checks.claim("Ā1 ∩ Ā2 is nonempty", not (b1 & b2).is_empty())
    return ScenarioResult(name="ex2", description="Two order-2 subgroups of the Klein group cover it",
                          holds=checks.ok, details=checks.lines)


def disjoint_covering_pair() -> ScenarioResult:
    checks = _Checks()
    g = make_group("ea:3,3")
    a1 = Subset.from_indices(g, ["e", "a", "b"])
    a2 = complement(a1)
    checks.claim("|A1| + |A2| = |G| = 27", a1.cardinality + a2.cardinality == g.order == 27)
    checks.claim("A1 ∩ A2 = ∅", (a1 & a2).is_empty())
    counts = count_products_bruteforce(SubsetFamily.of(a1, a2))
    checks.claim("A1·A2 = G by brute force (N_B(g) > 0 for all g)", all(c > 0 for c in counts.to_list()))
    checks.claim("A1·A2 = G by subset product", product(a1, a2).is_full())
    for lhs, (x, y) in (("e", ("a", "a2")), ("a", ("b", "ab2")), ("b", ("a", "a2b"))):
        xi, yi = g.index_of(x), g.index_of(y)
        checks.claim(f"{lhs} = {x}·{y} with {x} ∈ A1, {y} ∈ A2",
                     g.mul_index(xi, yi) == g.index_of(lhs) and xi in a1 and yi in a2)
    return ScenarioResult(name="ex3", description="Disjoint covering pair in the elementary abelian 3-group",
                          holds=checks.ok, details=checks.lines)


def cardinality_bound_not_necessary() -> ScenarioResult:
    checks = _Checks()
    z6 = make_group("cyclic:6")
    d4 = make_group("dihedral:4")
    fixtures = [
        (z6, generated_subgroup(z6, [2]), Subset.from_indices(z6, [0, 1])),
        (d4, generated_subgroup(d4, ["r"]), Subset.from_indices(d4, ["e", "s"])),
    ]
    for group, a1, a2 in fixtures:
        checks.claim(f"{group.name}: A1 = {a1} has index 2 and |G| > 4",
                     subgroup_index(a1) == 2 and group.order > 4)
        checks.claim(f"{group.name}: |A1| + |A2| = {a1.cardinality + a2.cardinality} < |G|",
                     a1.cardinality + a2.cardinality < group.order)
        checks.claim(f"{group.name}: A1·A2 = G", product(a1, a2).is_full())
        checks.claim(f"{group.name}: Ā1·Ā2 = G", product(complement(a1), complement(a2)).is_full())
    return ScenarioResult(name="ex4", description="The cardinality bound is sufficient but not necessary",
                          holds=checks.ok, details=checks.lines)


def subgroup_complement_disjoint() -> ScenarioResult:
    checks = _Checks()
    for spec in ("cyclic:4", "cyclic:6", "sym:3", "dihedral:4", "q8"):
        group = make_group(spec)
        subgroups = {generated_subgroup(group, [g]) for g in range(group.order)}
        proper = [h for h in subgroups if not h.is_full()]
        disjoint = all((product(h, complement(h)) & h).is_empty() for h in proper)
        checks.claim(f"{spec}: H·(G\\H) ∩ H = ∅ for all {len(proper)} proper cyclic subgroups", disjoint)
    return ScenarioResult(name="subgroup-complement", description="A subgroup times its complement misses the subgroup",
                          holds=checks.ok, details=checks.lines)


def half_size_subgroup() -> ScenarioResult:
    checks = _Checks()
    fixtures = (("cyclic:4", [2]), ("cyclic:6", [2]), ("dihedral:4", ["r"]), ("sym:3", None))
    for spec, gens in fixtures:
        group = make_group(spec)
        if gens is None:
            gens = [_element_of_order(group, 3)]
        a = generated_subgroup(group, gens)
        a_inv = inverse_set(a)
        checks.claim(f"{spec}: |A| = |G|/2 for A = {a}", 2 * a.cardinality == group.order)
        checks.claim(f"{spec}: A·A = A != G", product(a, a) == a and not a.is_full())
        checks.claim(f"{spec}: A·A⁻¹ = A⁻¹·A = A", product(a, a_inv) == a == product(a_inv, a))
    return ScenarioResult(name="half-size-subgroup",
                          description="|A| = |G|/2 does not force A·A = G",
                          holds=checks.ok, details=checks.lines)


def half_cover_exhaustive() -> ScenarioResult:
    checks = _Checks()
    for spec in ("cyclic:5", "sym:3"):
        group = make_group(spec)
        subsets = _nonempty_subsets(group)
        tested = 0
        holds = True
        for a in subsets:
            if 2 * a.cardinality <= group.order:
                continue
            for b in subsets:
                claims = half_cover_check(a, b)
                tested += 1
                holds = holds and all(claims.values())
        checks.claim(f"{spec}: |A| > |G|/2 gives A² = AB = BA = AA⁻¹ = A⁻¹A = G over {tested} pairs", holds)
    return ScenarioResult(name="half-cover", description="Large subsets square to G",
                          holds=checks.ok, details=checks.lines)


def complement_swap_exhaustive() -> ScenarioResult:
    checks = _Checks()
    for spec in SMALL_GROUPS:
        group = make_group(spec)
        proper = [a for a in _nonempty_subsets(group) if not a.is_full()]
        holds = all(left == right for left, right in map(complement_swap, proper))
        checks.claim(f"{spec}: A·Ā = Ā·A for all {len(proper)} nonempty proper subsets", holds)
    return ScenarioResult(name="complement-swap", description="A subset commutes with its complement as a set product",
                          holds=checks.ok, details=checks.lines)


def all_pairs_equal_witnesses() -> ScenarioResult:
    checks = _Checks()
    z4 = make_group("cyclic:4")
    h = Subset.from_indices(z4, [0, 2])
    family = SubsetFamily.of(h, h, h)
    checks.claim("cyclic:4: {0,2}^3 falls in the all-pairs-equal case", theorem3_decide(family) is Decision.INDETERMINATE)
    checks.claim("cyclic:4: {0,2}^3 = {0,2} != G", index_two_power_witness(h, 3) == h)

    prefix = SubsetFamily.of(Subset.from_indices(z4, [0, 1]), Subset.from_indices(z4, [0, 2]))
    last = Subset.from_indices(z4, [0, 3])
    family = SubsetFamily(prefix.members + (last,))
    checks.claim("cyclic:4: {0,1}·{0,2}·{0,3} falls in the all-pairs-equal case",
                 theorem3_decide(family) is Decision.INDETERMINATE)
    checks.claim("cyclic:4: prefix {0,1}·{0,2} = G gives C = G", prefix_cover_witness(prefix, last).is_full())

    d4 = make_group("dihedral:4")
    rotations = generated_subgroup(d4, ["r"])
    checks.claim("dihedral:4: rotations^4 = rotations != G", index_two_power_witness(rotations, 4) == rotations)
    return ScenarioResult(name="all-pairs-equal",
                          description="Both C = G and C != G occur when all pairwise sums equal |G|",
                          holds=checks.ok, details=checks.lines)


SCENARIOS: Dict[str, Callable[[], ScenarioResult]] = {
    "ex1": subgroup_times_complement,
    "ex2": klein_subgroups_cover,
    "ex3": disjoint_covering_pair,
    "ex4": cardinality_bound_not_necessary,
    "subgroup-complement": subgroup_complement_disjoint,
    "half-size-subgroup": half_size_subgroup,
    "half-cover": half_cover_exhaustive,
    "complement-swap": complement_swap_exhaustive,
    "all-pairs-equal": all_pairs_equal_witnesses,
}


def run_scenarios(name: str = "all") -> ExamplesReport:
    if name == "all":
        names = list(SCENARIOS)
    elif name in SCENARIOS:
        names = [name]
    else:
        raise InvalidSpec(f"Unknown scenario '{name}', expected one of {['all'] + list(SCENARIOS)}")
    results = []
    for scenario in names:
        result = SCENARIOS[scenario]()
        if not result.holds:
            logger.warning(f"Scenario {scenario} deviates: {[line for line in result.details if 'FAIL' in line]}")
        results.append(result)
    return ExamplesReport(results=results)
