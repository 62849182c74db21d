import numpy as np
import pytest

from models.errors import EmptySubset, GroupMismatch, Inconclusive, InvalidSpec, ParseError
from services.group_core import make_group
from services.subset_algebra import (
    Subset,
    SubsetFamily,
    complement,
    covering_subproduct,
    fold_product,
    generated_subgroup,
    intersection,
    inverse_set,
    is_subgroup,
    mann_covers,
    parse_subset,
    power,
    product,
    random_family,
    random_subset,
    stabilizes_at_G,
    subgroup_index,
)
from tests.helpers import naive_product, nonempty_subsets


def S(group, *indices):
    return Subset.from_indices(group, indices)


def test_product_examples(z4, v4):
    assert product(S(z4, 0, 1, 2), S(z4, 0, 1)).is_full()
    assert product(S(v4, "e", "a"), S(v4, "e", "b")).is_full()
    h = S(z4, 0, 2)
    result = product(h, complement(h))
    assert result == S(z4, 1, 3)
    assert intersection(result, h).is_empty()


def test_product_with_empty_subset(z4):
    assert product(Subset.empty(z4), S(z4, 1)).is_empty()
    assert product(S(z4, 1), Subset.empty(z4)).is_empty()


@pytest.mark.parametrize("descriptor", ["sym:3", "dihedral:4", "q8", "cyclic:7"])
def test_product_matches_double_loop(descriptor, rng):
    group = make_group(descriptor)
    for _ in range(50):
        a, b = random_subset(group, rng), random_subset(group, rng)
        assert product(a, b) == naive_product(a, b)
        assert a * b == product(a, b)


def test_product_rejects_mixed_groups(z4, z6):
    with pytest.raises(GroupMismatch):
        product(S(z4, 1), S(z6, 1))


def test_complement_and_inverse(z4, s3):
    assert complement(S(z4, 0, 2)) == S(z4, 1, 3)
    assert inverse_set(S(z4, 1)) == S(z4, 3)
    for a in nonempty_subsets(s3):
        assert inverse_set(inverse_set(a)) == a
        assert complement(complement(a)) == a
    for g in range(s3.order):
        assert inverse_set(S(s3, g)) == S(s3, int(s3.inv_table[g]))


def test_fold_product(z4):
    assert fold_product([S(z4, 1), S(z4, 1), S(z4, 1)]) == S(z4, 3)
    with pytest.raises(InvalidSpec):
        fold_product([])


def test_power_examples(z4, z6):
    assert power(S(z6, 1, 2), 2) == S(z6, 2, 3, 4)
    assert power(S(z6, 1, 2), 5).is_full()
    for k in range(1, 6):
        assert power(S(z4, 0, 2), k) == S(z4, 0, 2)
    with pytest.raises(EmptySubset):
        power(Subset.empty(z4), 2)
    with pytest.raises(InvalidSpec):
        power(S(z4, 1), 0)


def test_stabilizes_at_k(z6):
    report = stabilizes_at_G(S(z6, 1, 2))
    assert report.stabilizes
    assert report.k == 5
    assert report.sizes == [2, 3, 4, 5, 6]
    assert report.cycle is None


def test_cycles_without_reaching_group(z4):
    report = stabilizes_at_G(S(z4, 1, 3))
    assert not report.stabilizes
    assert report.cycle == (1, 2)
    assert report.sizes == [2, 2]


def test_whole_group_stabilizes_immediately(s3):
    report = stabilizes_at_G(Subset.full(s3))
    assert report.stabilizes and report.k == 1


def test_stabilization_errors(z4, z6):
    with pytest.raises(EmptySubset):
        stabilizes_at_G(Subset.empty(z4))
    with pytest.raises(Inconclusive) as exc:
        stabilizes_at_G(S(z6, 1, 2), max_steps=2)
    assert exc.value.max_steps == 2


@pytest.mark.parametrize("descriptor", ["cyclic:6", "sym:3", "ea:2,2"])
def test_power_sizes_never_shrink(descriptor):
    group = make_group(descriptor)
    for a in nonempty_subsets(group):
        sizes = stabilizes_at_G(a).sizes
        assert all(x <= y for x, y in zip(sizes, sizes[1:]))


def test_covering_subproduct(z4):
    family = SubsetFamily.of(S(z4, 0, 1), S(z4, 0, 2), S(z4, 0, 3))
    assert covering_subproduct(family) == (1, 2)
    assert fold_product(family.members).is_full()
    assert covering_subproduct(SubsetFamily.of(S(z4, 0, 2), S(z4, 0, 2))) is None


def test_mann_covers(z4):
    assert mann_covers(S(z4, 0, 1, 2), S(z4, 0, 1))
    assert not mann_covers(S(z4, 0, 2), S(z4, 1, 3))


def test_subgroups(z6, d4, s3):
    assert generated_subgroup(z6, [2]) == S(z6, 0, 2, 4)
    assert generated_subgroup(z6, []) == S(z6, 0)
    assert generated_subgroup(d4, ["r", "s"]).is_full()
    assert generated_subgroup(d4, ["r"]).cardinality == 4
    assert is_subgroup(S(z6, 0, 3))
    assert not is_subgroup(S(z6, 0, 1))
    assert not is_subgroup(S(z6, 2, 4))
    assert subgroup_index(S(z6, 0, 2, 4)) == 2
    assert subgroup_index(generated_subgroup(s3, [1])) in (2, 3)
    with pytest.raises(InvalidSpec):
        subgroup_index(S(z6, 0, 1))


def test_family_validation(z4, z6):
    with pytest.raises(EmptySubset):
        SubsetFamily.of(S(z4, 1), Subset.empty(z4))
    with pytest.raises(GroupMismatch):
        SubsetFamily.of(S(z4, 1), S(z6, 1))
    with pytest.raises(InvalidSpec):
        SubsetFamily(())
    family = SubsetFamily.of(S(z4, 0), S(z4, 1, 2))
    assert family.cardinalities() == (1, 2)
    assert family.complements() == (S(z4, 1, 2, 3), S(z4, 0, 3))
    assert family.describe() == "{0} · {1,2}"


def test_random_subsets_are_nonempty(z4):
    rng = np.random.default_rng(0)
    family = random_family(z4, 200, rng)
    assert len(family) == 200
    assert all(not a.is_empty() for a in family)
    # every nonempty subset of Z4 turns up
    assert len(set(family.members)) == 15


def test_subset_string_uses_labels(d4, z4):
    assert str(S(d4, "e", "s")) == "{e,s}"
    assert str(S(z4, 3, 1)) == "{1,3}"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0,2", [0, 2]),
        ("{0,2}", [0, 2]),
        (" 1 , 3 ", [1, 3]),
        ("all", [0, 1, 2, 3]),
        ("empty", []),
        ("comp:0,2", [1, 3]),
        ("comp:all", []),
    ],
)
def test_parse_subset(z4, text, expected):
    assert parse_subset(z4, text) == Subset.from_indices(z4, expected)


def test_parse_subset_with_labels(d4):
    assert parse_subset(d4, "e,s") == S(d4, 0, 4)
    assert parse_subset(d4, "r,r2,r3") == S(d4, 1, 2, 3)


@pytest.mark.parametrize(
    "text, column",
    [
        ("0,,2", 3),
        ("0,9", 3),
        ("{0,x}", 4),
        ("comp:1,y", 8),
    ],
)
def test_parse_subset_errors_are_located(z4, text, column):
    with pytest.raises(ParseError) as exc:
        parse_subset(z4, text)
    assert exc.value.column == column
