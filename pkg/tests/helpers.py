from pathlib import Path
from typing import List

from services.group_core import FiniteGroup
from services.subset_algebra import Subset

DATA_DIR = Path(__file__).parent / "data"
Q8_TABLE = DATA_DIR / "q8.txt"


def nonempty_subsets(group: FiniteGroup) -> List[Subset]:
    n = group.order
    return [Subset(group, [(bits >> i) & 1 == 1 for i in range(n)]) for bits in range(1, 2**n)]


def naive_product(a: Subset, b: Subset) -> Subset:
    """Double loop over A × B"""
    group = a.group
    return Subset.from_indices(group, {group.mul_index(x, y) for x in a for y in b})
