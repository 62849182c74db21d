"""
Subsets of a finite group as boolean masks: products, complements,
inverse sets, powers and stabilization on the whole group.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from models.errors import EmptySubset, GroupMismatch, Inconclusive, InvalidSpec, ParseError
from models.schemas import StabilizationReport
from services.group_core import FiniteGroup
from utils import format_elements

logger = logging.getLogger(__name__)


class Subset:
    """Immutable subset of ``group`` stored as a read-only boolean mask"""

    __slots__ = ("group", "mask", "cardinality", "_key")

    def __init__(self, group: FiniteGroup, mask: Union[np.ndarray, Sequence[bool]]):
        mask = np.array(mask, dtype=bool, copy=True)
        if mask.shape != (group.order,):
            raise InvalidSpec(f"Mask length {mask.shape} does not match group order {group.order}")
        mask.setflags(write=False)
        self.group = group
        self.mask = mask
        self.cardinality = int(mask.sum())
        self._key = mask.tobytes()

    @classmethod
    def from_indices(cls, group: FiniteGroup, indices: Iterable[int]) -> "Subset":
        mask = np.zeros(group.order, dtype=bool)
        for i in indices:
            mask[group.index_of(i)] = True
        return cls(group, mask)

    @classmethod
    def full(cls, group: FiniteGroup) -> "Subset":
        return cls(group, np.ones(group.order, dtype=bool))

    @classmethod
    def empty(cls, group: FiniteGroup) -> "Subset":
        return cls(group, np.zeros(group.order, dtype=bool))

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def is_empty(self) -> bool:
        return self.cardinality == 0

    def is_full(self) -> bool:
        return self.cardinality == self.group.order

    def __len__(self) -> int:
        return self.cardinality

    def __contains__(self, index: int) -> bool:
        return bool(self.mask[index])

    def __iter__(self):
        return iter(int(i) for i in self.indices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.group == other.group and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.group.group_id, self._key))

    def __or__(self, other: "Subset") -> "Subset":
        self.group.check_same(other.group)
        return Subset(self.group, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self.group.check_same(other.group)
        return Subset(self.group, self.mask & other.mask)

    def __mul__(self, other: "Subset") -> "Subset":
        return product(self, other)

    def __repr__(self) -> str:
        return f"Subset({self})"

    def __str__(self) -> str:
        return format_elements(self, self.group.labels)


@dataclass(frozen=True)
class SubsetFamily:
    """Ordered tuple B = (A_1, ..., A_n) of nonempty subsets of one group"""

    members: Tuple[Subset, ...]
    group: FiniteGroup = field(init=False, repr=False)

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise InvalidSpec("A subset family needs at least one member")
        group = members[0].group
        for position, member in enumerate(members, start=1):
            if member.group != group:
                raise GroupMismatch(f"Member {position} belongs to {member.group.name}, expected {group.name}")
            if member.is_empty():
                raise EmptySubset(f"Member {position} of the family is empty")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "group", group)

    @classmethod
    def of(cls, *members: Subset) -> "SubsetFamily":
        return cls(tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Subset:
        return self.members[i]

    def complements(self) -> Tuple[Subset, ...]:
        """B̄; members may be empty"""
        return tuple(complement(a) for a in self.members)

    def cardinalities(self) -> Tuple[int, ...]:
        return tuple(a.cardinality for a in self.members)

    def describe(self) -> str:
        return " · ".join(str(a) for a in self.members)


def product(a: Subset, b: Subset) -> Subset:
    """A·B = {x·y : x ∈ A, y ∈ B}"""
    a.group.check_same(b.group)
    group = a.group
    out = np.zeros(group.order, dtype=bool)
    if a.is_empty() or b.is_empty():
        return Subset(group, out)
    table = group.mul_table
    a_idx, b_idx = a.indices(), b.indices()
    if a.cardinality <= b.cardinality:
        for x in a_idx:
            out[table[x, b_idx]] = True
    else:
        for y in b_idx:
            out[table[a_idx, y]] = True
    return Subset(group, out)


def fold_product(subsets: Iterable[Subset]) -> Subset:
    """Left fold A_1·A_2·…·A_n"""
    subsets = list(subsets)
    if not subsets:
        raise InvalidSpec("Cannot fold an empty sequence of subsets")
    result = subsets[0]
    for s in subsets[1:]:
        result = product(result, s)
    return result


def complement(a: Subset) -> Subset:
    return Subset(a.group, ~a.mask)


def inverse_set(a: Subset) -> Subset:
    mask = np.zeros(a.group.order, dtype=bool)
    mask[a.group.inv_table[a.indices()]] = True
    return Subset(a.group, mask)


def intersection(a: Subset, b: Subset) -> Subset:
    return a & b


def power(a: Subset, k: int) -> Subset:
    if a.is_empty():
        raise EmptySubset("Powers of the empty subset are not defined")
    if k < 1:
        raise InvalidSpec(f"Power exponent must be >= 1, got {k}")
    result = a
    for _ in range(k - 1):
        result = product(result, a)
    return result


def stabilizes_at_G(a: Subset, max_steps: Optional[int] = None) -> StabilizationReport:
    """
    Iterate X <- X·A from X = A and report the first k with A^k = G, or the
    cycle the powers fall into when G is never reached.
    """
    if a.is_empty():
        raise EmptySubset("Stabilization needs a nonempty subset")
    group = a.group
    bound = 4 * group.order if max_steps is None else max_steps
    if bound < 1:
        raise InvalidSpec(f"max_steps must be >= 1, got {bound}")

    seen: dict[bytes, int] = {}
    sizes: list[int] = []
    current = a
    for step in range(1, bound + 1):
        sizes.append(current.cardinality)
        if current.is_full():
            logger.debug(f"{a} stabilizes on {group.name} at k={step}")
            return StabilizationReport(stabilizes=True, k=step, sizes=sizes)
        key = current.mask.tobytes()
        if key in seen:
            start = seen[key]
            sizes.pop()
            return StabilizationReport(
                stabilizes=False, cycle_start=start, cycle_period=step - start, sizes=sizes
            )
        seen[key] = step
        current = product(current, a)
    raise Inconclusive(bound)


def covering_subproduct(family: SubsetFamily) -> Optional[Tuple[int, int]]:
    """
    First (i, j), 1-based with i < j, whose contiguous subproduct A_i…A_j is G.
    Any product containing such a subproduct is G.
    """
    members = family.members
    for i in range(len(members)):
        current = members[i]
        for j in range(i + 1, len(members)):
            current = product(current, members[j])
            if current.is_full():
                return i + 1, j + 1
    return None


def mann_covers(a: Subset, b: Subset) -> bool:
    """|A| + |B| > |G| forces A·B = G"""
    a.group.check_same(b.group)
    return a.cardinality + b.cardinality > a.group.order


# Subgroups

def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> Subset:
    """Smallest subgroup containing ``generators``"""
    mask = np.zeros(group.order, dtype=bool)
    mask[0] = True
    gens = [group.index_of(g) for g in generators]
    frontier = [0]
    while frontier:
        new = np.unique(group.mul_table[np.ix_(frontier, gens)]) if gens else np.array([], dtype=int)
        new = new[~mask[new]]
        mask[new] = True
        frontier = new.tolist()
    return Subset(group, mask)


def is_subgroup(a: Subset) -> bool:
    if a.is_empty() or 0 not in a:
        return False
    return product(a, inverse_set(a)) == a


def subgroup_index(h: Subset) -> int:
    if not is_subgroup(h):
        raise InvalidSpec(f"{h} is not a subgroup of {h.group.name}")
    return h.group.order // h.cardinality


# Random subsets

def random_subset(group: FiniteGroup, rng: np.random.Generator) -> Subset:
    """Uniform over the 2^n - 1 nonempty subsets"""
    while True:
        mask = rng.integers(0, 2, size=group.order).astype(bool)
        if mask.any():
            return Subset(group, mask)


def random_family(group: FiniteGroup, n: int, rng: np.random.Generator) -> SubsetFamily:
    return SubsetFamily(tuple(random_subset(group, rng) for _ in range(n)))


# Subset literals

def parse_subset(group: FiniteGroup, text: str, column: int = 1) -> Subset:
    """
    ``0,1,5`` (indices or labels), ``all`` for G, ``empty`` for ∅,
    ``comp:<literal>`` for a complement. ``column`` offsets error positions.
    """
    text = text.strip()
    if text == "all":
        return Subset.full(group)
    if text == "empty":
        return Subset.empty(group)
    if text.startswith("comp:"):
        return complement(parse_subset(group, text[5:], column + 5))
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
        column += 1
    mask = np.zeros(group.order, dtype=bool)
    offset = 0
    for token in text.split(","):
        stripped = token.strip()
        if not stripped:
            raise ParseError(f"Empty element in subset literal '{text}'", 1, column + offset)
        try:
            mask[group.index_of(stripped)] = True
        except InvalidSpec as e:
            raise ParseError(e.message, 1, column + offset + token.find(stripped))
        offset += len(token) + 1
    return Subset(group, mask)
