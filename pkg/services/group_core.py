"""
Finite groups as explicit, validated Cayley tables.

Every group is normalized so that the identity has index 0. Built-in
constructors go through the same validation as user-supplied tables.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from config import (
    ASSOCIATIVITY_FULL_CHECK_MAX_ORDER,
    ASSOCIATIVITY_SAMPLE_FACTOR,
    CLOSURE_CAP,
    RANDOM_SEED,
    SYMMETRIC_MAX_DEGREE,
    TABLE_ORDER_CAP,
)
from models.errors import (
    ClosureTooLarge,
    GroupMismatch,
    InvalidSpec,
    MalformedTable,
    NotAGroup,
    ParseError,
)
from utils import fingerprint_table

logger = logging.getLogger(__name__)

# Sampled associativity checks are processed in chunks of this many triples
_ASSOCIATIVITY_CHUNK = 1_000_000


@dataclass(frozen=True)
class GroupElement:
    group: "FiniteGroup" = field(repr=False)
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise InvalidSpec(f"Element index {self.index} out of range for group of order {self.group.order}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.group.mul(self, other)

    def inverse(self) -> "GroupElement":
        return self.group.inv(self)

    def __str__(self) -> str:
        return self.group.label(self.index)


class FiniteGroup:
    """
    A finite group given by its multiplication table.

    ``mul_table[g, h]`` holds the index of ``g·h``; the identity is index 0.
    Instances are immutable and compare equal when their tables are equal.
    Use ``from_cayley_table`` or ``make_group`` rather than calling this directly.
    """

    def __init__(self, mul_table: np.ndarray, labels: Optional[Sequence[str]] = None, name: str = "group"):
        table = np.array(mul_table, dtype=np.int32, copy=True)
        table.setflags(write=False)
        self.mul_table = table
        self.order = int(table.shape[0])
        self.identity_index = 0
        inv_table = np.argmax(table == 0, axis=1).astype(np.int32)
        inv_table.setflags(write=False)
        self.inv_table = inv_table
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self.group_id = fingerprint_table(self.order, table.tobytes())
        self._label_index = {lab: i for i, lab in enumerate(self.labels)} if self.labels else {}

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and other.group_id == self.group_id

    def __hash__(self) -> int:
        return hash(self.group_id)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def check_same(self, other: "FiniteGroup") -> None:
        if other.group_id != self.group_id:
            raise GroupMismatch(f"Operands belong to different groups: {self.name} and {other.name}")

    # Element arithmetic
    def element(self, index: int) -> GroupElement:
        return GroupElement(self, int(index))

    def elements(self) -> list[GroupElement]:
        return [GroupElement(self, i) for i in range(self.order)]

    def identity(self) -> GroupElement:
        return GroupElement(self, 0)

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self.check_same(g.group)
        self.check_same(h.group)
        return GroupElement(self, int(self.mul_table[g.index, h.index]))

    def inv(self, g: GroupElement) -> GroupElement:
        self.check_same(g.group)
        return GroupElement(self, int(self.inv_table[g.index]))

    def mul_index(self, g: int, h: int) -> int:
        return int(self.mul_table[g, h])

    def element_order(self, g: Union[int, GroupElement]) -> int:
        index = g.index if isinstance(g, GroupElement) else int(g)
        x, k = index, 1
        while x != 0:
            x = int(self.mul_table[x, index])
            k += 1
        return k

    # Labels
    def label(self, index: int) -> str:
        if self.labels is None:
            return str(index)
        return self.labels[index]

    def index_of(self, token: Union[int, str]) -> int:
        """Resolve an element index or label"""
        if isinstance(token, str) and token in self._label_index:
            return self._label_index[token]
        try:
            index = int(token)
        except (TypeError, ValueError):
            raise InvalidSpec(f"Unknown element '{token}' in group {self.name}")
        if not 0 <= index < self.order:
            raise InvalidSpec(f"Element index {index} out of range for group of order {self.order}")
        return index


# Validation

def _first_repeat(values: Sequence[int]) -> Optional[Tuple[int, int]]:
    seen: dict[int, int] = {}
    for pos, value in enumerate(values):
        value = int(value)
        if value in seen:
            return seen[value], pos
        seen[value] = pos
    return None


def _check_latin_square(table: np.ndarray) -> None:
    n = table.shape[0]
    expected = np.arange(n)
    bad_rows = np.flatnonzero(~(np.sort(table, axis=1) == expected).all(axis=1))
    if bad_rows.size:
        r = int(bad_rows[0])
        c1, c2 = _first_repeat(table[r])
        raise NotAGroup(f"Row {r} repeats entry {int(table[r, c1])} at columns {c1} and {c2}", (r, c1, c2))
    bad_cols = np.flatnonzero(~(np.sort(table, axis=0) == expected[:, None]).all(axis=0))
    if bad_cols.size:
        c = int(bad_cols[0])
        r1, r2 = _first_repeat(table[:, c])
        raise NotAGroup(f"Column {c} repeats entry {int(table[r1, c])} at rows {r1} and {r2}", (c, r1, r2))


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    expected = np.arange(n)
    candidates = np.flatnonzero((table == expected).all(axis=1))
    if candidates.size == 0:
        raise NotAGroup("No element e satisfies e·g = g for all g")
    e = int(candidates[0])
    bad = np.flatnonzero(table[:, e] != expected)
    if bad.size:
        g = int(bad[0])
        raise NotAGroup(f"Left identity {e} is not a right identity: {g}·{e} != {g}", (g, e))
    return e


def _check_inverses(table: np.ndarray, e: int) -> None:
    right_inverse = np.argmax(table == e, axis=1)
    bad = np.flatnonzero(table[right_inverse, np.arange(table.shape[0])] != e)
    if bad.size:
        g = int(bad[0])
        raise NotAGroup(f"Element {g} has no two-sided inverse", (g, int(right_inverse[g])))


def _check_associativity(table: np.ndarray, full_check_max_order: int, sample_factor: int, seed: int) -> None:
    n = table.shape[0]
    if n <= full_check_max_order:
        for a in range(n):
            lhs = table[table[a], :]  # (a·b)·c indexed [b, c]
            rhs = table[a][table]     # a·(b·c) indexed [b, c]
            mismatch = np.argwhere(lhs != rhs)
            if mismatch.size:
                b, c = (int(x) for x in mismatch[0])
                raise NotAGroup(f"Associativity fails for ({a}, {b}, {c})", (a, b, c))
        return
    rng = np.random.default_rng(seed)
    remaining = sample_factor * n * n
    logger.info(f"Sampling {remaining} triples for associativity of order-{n} table")
    while remaining > 0:
        size = min(remaining, _ASSOCIATIVITY_CHUNK)
        a, b, c = rng.integers(0, n, size=(3, size))
        lhs = table[table[a, b], c]
        rhs = table[a, table[b, c]]
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            i = int(bad[0])
            raise NotAGroup(f"Associativity fails for ({a[i]}, {b[i]}, {c[i]})", (int(a[i]), int(b[i]), int(c[i])))
        remaining -= size


def _check_labels(labels: Sequence[str], n: int) -> Tuple[str, ...]:
    labels = tuple(str(lab) for lab in labels)
    if len(labels) != n:
        raise MalformedTable(f"Expected {n} labels, got {len(labels)}")
    if any(not lab or any(ch.isspace() for ch in lab) for lab in labels):
        raise MalformedTable("Labels must be non-empty and whitespace-free")
    if len(set(labels)) != n:
        raise MalformedTable("Labels must be unique")
    return labels


def from_cayley_table(
    table: Union[np.ndarray, Sequence[Sequence[int]]],
    labels: Optional[Sequence[str]] = None,
    name: str = "table",
    full_check_max_order: Optional[int] = None,
    sample_factor: Optional[int] = None,
    seed: Optional[int] = None,
) -> FiniteGroup:
    """Validate a multiplication table and return the group, identity moved to index 0"""
    try:
        raw = np.asarray(table)
        array = raw.astype(np.int64)
    except (TypeError, ValueError, OverflowError) as e:
        raise MalformedTable(f"Table is not a rectangular integer array: {e}")
    if raw.dtype.kind not in "iufb" or (raw.dtype.kind == "f" and not np.array_equal(array, raw)):
        raise MalformedTable("Table entries must be integers")
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise MalformedTable(f"Table must be a non-empty square array, got shape {array.shape}")
    n = array.shape[0]
    if array.min() < 0 or array.max() >= n:
        raise MalformedTable(f"Table entries must lie in 0..{n - 1}")
    if labels is not None:
        labels = _check_labels(labels, n)

    _check_latin_square(array)
    e = _find_identity(array)
    _check_inverses(array, e)
    _check_associativity(
        array,
        ASSOCIATIVITY_FULL_CHECK_MAX_ORDER if full_check_max_order is None else full_check_max_order,
        ASSOCIATIVITY_SAMPLE_FACTOR if sample_factor is None else sample_factor,
        RANDOM_SEED if seed is None else seed,
    )

    if e != 0:
        # Swap e and 0; the permutation is an involution
        perm = np.arange(n)
        perm[0], perm[e] = e, 0
        array = perm[array[np.ix_(perm, perm)]]
        if labels is not None:
            labels = tuple(labels[int(i)] for i in perm)
    return FiniteGroup(array, labels, name)


# Constructors

def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _check_table_order(order: int, table_cap: Optional[int] = None) -> None:
    cap = TABLE_ORDER_CAP if table_cap is None else table_cap
    if order > cap:
        raise ClosureTooLarge(f"Cayley table of order {order} exceeds TABLE_ORDER_CAP={cap}", cap)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec(f"cyclic(n) needs n >= 1, got {n}")
    _check_table_order(n)
    idx = np.arange(n)
    return from_cayley_table((idx[:, None] + idx[None, :]) % n, name=f"cyclic:{n}")


def _power_label(letters: str, exponents: Sequence[int]) -> str:
    parts = [
        letter if exp == 1 else f"{letter}{exp}"
        for letter, exp in zip(letters, exponents)
        if exp
    ]
    return "".join(parts) or "e"


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """(Z/p)^k; element index is the base-p number whose digit i is the exponent of generator i"""
    if not _is_prime(p):
        raise InvalidSpec(f"elementary_abelian(p, k) needs p prime, got {p}")
    if k < 1:
        raise InvalidSpec(f"elementary_abelian(p, k) needs k >= 1, got {k}")
    n = p**k
    _check_table_order(n)
    idx = np.arange(n)
    weights = p ** np.arange(k)
    digits = (idx[:, None] // weights) % p
    summed = (digits[:, None, :] + digits[None, :, :]) % p
    table = summed @ weights
    labels = None
    if k <= 26:
        letters = "abcdefghijklmnopqrstuvwxyz"[:k]
        labels = [_power_label(letters, row) for row in digits.tolist()]
    return from_cayley_table(table, labels, name=f"ea:{p},{k}")


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the m-gon, order 2m; index i + m*j stands for r^i s^j"""
    if m < 1:
        raise InvalidSpec(f"dihedral(m) needs m >= 1, got {m}")
    n = 2 * m
    _check_table_order(n)
    idx = np.arange(n)
    rot, ref = idx % m, idx // m
    sign = np.where(ref == 1, -1, 1)
    new_rot = (rot[:, None] + sign[:, None] * rot[None, :]) % m
    new_ref = (ref[:, None] + ref[None, :]) % 2
    labels = []
    for i in range(n):
        r = "" if rot[i] == 0 else ("r" if rot[i] == 1 else f"r{rot[i]}")
        s = "s" if ref[i] else ""
        labels.append(r + s or "e")
    return from_cayley_table(new_rot + m * new_ref, labels, name=f"dihedral:{m}")


def _normalize_permutation(perm: Sequence[int], degree: int) -> Tuple[int, ...]:
    perm = tuple(int(x) for x in perm) + tuple(range(len(perm), degree))
    if sorted(perm) != list(range(degree)):
        raise InvalidSpec(f"{perm} is not a permutation of 0..{degree - 1}")
    return perm


def from_permutations(
    generators: Iterable[Sequence[int]],
    name: str = "perm",
    closure_cap: Optional[int] = None,
    table_cap: Optional[int] = None,
) -> FiniteGroup:
    """
    Group generated by permutations in one-line notation (``perm[i]`` is the image of i).

    Closure is computed breadth-first by right multiplication with generators.
    The product g·h is composition ``(g·h)(i) = g(h(i))``.
    """
    cap = CLOSURE_CAP if closure_cap is None else closure_cap
    generators = [tuple(g) for g in generators]
    degree = max((len(g) for g in generators), default=1) or 1
    gens = [_normalize_permutation(g, degree) for g in generators]

    identity = tuple(range(degree))
    index = {identity: 0}
    elements = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = tuple(x[i] for i in s)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                if len(elements) > cap:
                    raise ClosureTooLarge(f"Closure exceeds CLOSURE_CAP={cap} elements", cap)
                queue.append(y)
    n = len(elements)
    _check_table_order(n, table_cap)
    logger.debug(f"Permutation closure of degree {degree} has {n} elements")

    perms = np.array(elements, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    if degree <= 15:
        weights = degree ** np.arange(degree, dtype=np.int64)
        keys = perms @ weights
        order = np.argsort(keys)
        sorted_keys = keys[order]
        for i in range(n):
            composed = perms[i][perms]  # row j holds g_i ∘ g_j
            table[i] = order[np.searchsorted(sorted_keys, composed @ weights)]
    else:
        for i in range(n):
            for j, row in enumerate(perms[i][perms]):
                table[i, j] = index[tuple(int(x) for x in row)]

    labels = ["".join(str(x) for x in p) for p in elements] if degree <= 10 else None
    return from_cayley_table(table, labels, name=name)


def symmetric(m: int) -> FiniteGroup:
    if not 1 <= m <= SYMMETRIC_MAX_DEGREE:
        raise InvalidSpec(f"symmetric(m) needs 1 <= m <= {SYMMETRIC_MAX_DEGREE}, got {m}")
    cycle = list(range(1, m)) + [0]
    transposition = [1, 0] + list(range(2, m)) if m >= 2 else [0]
    return from_permutations([cycle, transposition], name=f"sym:{m}")


def quaternion() -> FiniteGroup:
    """Quaternion group Q8 as a regular permutation group of degree 8"""
    i = [2, 3, 1, 0, 6, 7, 5, 4]
    j = [4, 5, 7, 6, 1, 0, 2, 3]
    return from_permutations([i, j], name="q8")


def direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """Index i1*|H| + i2 stands for the pair (i1, i2)"""
    n1, n2 = first.order, second.order
    _check_table_order(n1 * n2)
    idx = np.arange(n1 * n2)
    i1, i2 = idx // n2, idx % n2
    t1 = first.mul_table.astype(np.int64)
    t2 = second.mul_table.astype(np.int64)
    table = t1[i1[:, None], i1[None, :]] * n2 + t2[i2[:, None], i2[None, :]]
    labels = [f"({first.label(int(a))}.{second.label(int(b))})" for a, b in zip(i1, i2)]
    return from_cayley_table(table, labels, name=f"prod({first.name},{second.name})")


# Cayley table text format

def parse_cayley_text(text: str, name: str = "table") -> FiniteGroup:
    """
    Parse ``order n`` followed by n rows of n indices and an optional
    ``labels`` line. Blank lines and ``#`` comments are ignored.
    """
    lines = [
        (number, raw.split("#", 1)[0])
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, body) for number, body in lines if body.strip()]
    if not lines:
        raise ParseError("Empty Cayley table file", 1, 1)

    number, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "order":
        raise ParseError("Expected 'order <n>'", number, header.find(header.strip()) + 1)
    try:
        n = int(tokens[1])
    except ValueError:
        raise ParseError(f"Invalid order '{tokens[1]}'", number, header.find(tokens[1]) + 1)
    if n < 1:
        raise ParseError(f"Order must be positive, got {n}", number, header.find(tokens[1]) + 1)

    rows: list[list[int]] = []
    labels = None
    for number, body in lines[1:]:
        tokens = body.split()
        if tokens[0] == "labels":
            if labels is not None:
                raise ParseError("Duplicate labels line", number, body.find("labels") + 1)
            labels = tokens[1:]
            if len(labels) != n:
                raise ParseError(f"Expected {n} labels, got {len(labels)}", number, body.find("labels") + 1)
            continue
        if len(rows) == n:
            raise ParseError(f"Extra row beyond order {n}", number, body.find(tokens[0]) + 1)
        if len(tokens) != n:
            raise ParseError(f"Expected {n} entries, got {len(tokens)}", number, body.find(tokens[0]) + 1)
        row = []
        column = 0
        for token in tokens:
            column = body.find(token, column)
            try:
                row.append(int(token))
            except ValueError:
                raise ParseError(f"Invalid entry '{token}'", number, column + 1)
            column += len(token)
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"Expected {n} rows, got {len(rows)}", lines[-1][0], 1)
    return from_cayley_table(rows, labels, name=name)


def load_cayley_table(path: Union[str, Path]) -> FiniteGroup:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InvalidSpec(f"Cannot read Cayley table file {path}: {e}")
    return parse_cayley_text(text, name=f"table:{path}")


def format_cayley_table(group: FiniteGroup) -> str:
    lines = [f"order {group.order}"]
    lines.extend(" ".join(str(int(x)) for x in row) for row in group.mul_table)
    if group.labels is not None:
        lines.append("labels " + " ".join(group.labels))
    return "\n".join(lines) + "\n"


# Constructor descriptors

@dataclass(frozen=True)
class GroupSpec:
    """Parsed constructor descriptor; ``str()`` gives the canonical text form"""

    kind: str
    args: Tuple = ()
    children: Tuple["GroupSpec", ...] = ()

    def __str__(self) -> str:
        if self.kind == "prod":
            return f"prod({self.children[0]},{self.children[1]})"
        if self.kind == "q8":
            return "q8"
        if self.kind == "perm":
            gens = ";".join("".join("(" + ",".join(map(str, c)) + ")" for c in g) for g in self.args)
            return f"perm:[{gens}]"
        return f"{self.kind}:" + ",".join(str(a) for a in self.args)


_INT_ARITY = {"cyclic": 1, "ea": 2, "dihedral": 1, "sym": 1}


class _DescriptorParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, 1, self.pos + 1)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.error(f"Expected '{char}', found '{found}'")
        self.pos += 1

    def name(self) -> str:
        start = self.pos
        while self.peek().isalnum():
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected a constructor name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected an integer")
        return int(self.text[start:self.pos])

    def descriptor(self) -> GroupSpec:
        start = self.pos
        kind = self.name()
        if kind == "q8":
            return GroupSpec("q8")
        if kind == "prod":
            self.expect("(")
            first = self.descriptor()
            self.expect(",")
            second = self.descriptor()
            self.expect(")")
            return GroupSpec("prod", children=(first, second))
        if kind not in _INT_ARITY and kind not in ("table", "perm"):
            self.pos = start
            raise self.error(f"Unknown group constructor '{kind}'")
        self.expect(":")
        if kind == "table":
            begin = self.pos
            while self.peek() and self.peek() not in ",)":
                self.pos += 1
            if begin == self.pos:
                raise self.error("Expected a file path")
            return GroupSpec("table", (self.text[begin:self.pos],))
        if kind == "perm":
            return GroupSpec("perm", self.generators())
        args = [self.integer()]
        for _ in range(_INT_ARITY[kind] - 1):
            self.expect(",")
            args.append(self.integer())
        return GroupSpec(kind, tuple(args))

    def generators(self) -> Tuple:
        self.expect("[")
        gens = [self.cycles()]
        while self.peek() == ";":
            self.pos += 1
            gens.append(self.cycles())
        self.expect("]")
        return tuple(gens)

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        cycles = []
        while self.peek() == "(":
            self.pos += 1
            cycle = [self.integer()]
            while self.peek() == ",":
                self.pos += 1
                cycle.append(self.integer())
            self.expect(")")
            if len(set(cycle)) != len(cycle):
                raise self.error("Cycle repeats a point")
            cycles.append(tuple(cycle))
        if not cycles:
            raise self.error("Expected a cycle '(a,b,...)'")
        return tuple(cycles)

    def parse(self) -> GroupSpec:
        self.text = self.text.strip()
        spec = self.descriptor()
        if self.pos != len(self.text):
            raise self.error(f"Unexpected trailing input '{self.text[self.pos:]}'")
        return spec


def parse_group_descriptor(text: str) -> GroupSpec:
    return _DescriptorParser(text).parse()


def cycles_to_permutation(cycles: Sequence[Sequence[int]], degree: int) -> list[int]:
    perm = list(range(degree))
    # Cycles compose right to left, matching (g·h)(i) = g(h(i))
    for cycle in reversed(cycles):
        step = list(range(degree))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            step[a] = b
        perm = [step[x] for x in perm]
    return perm


def _reads_file(spec: GroupSpec) -> bool:
    return spec.kind == "table" or any(_reads_file(child) for child in spec.children)


class GroupBuilder:
    """Builds groups from descriptors, caching results by canonical descriptor.

    Descriptors that read a table file are rebuilt on every call so edits to
    the file are picked up.
    """

    def __init__(self):
        self.closure_cap = CLOSURE_CAP
        self._cache: dict[str, FiniteGroup] = {}

    def build(self, spec: Union[str, GroupSpec]) -> FiniteGroup:
        if isinstance(spec, str):
            spec = parse_group_descriptor(spec)
        key = str(spec)
        if not _reads_file(spec):
            if key not in self._cache:
                self._cache[key] = self._build(spec)
                logger.debug(f"Built {key} of order {self._cache[key].order}")
            return self._cache[key]
        return self._build(spec)

    def _build(self, spec: GroupSpec) -> FiniteGroup:
        if spec.kind == "cyclic":
            return cyclic(*spec.args)
        if spec.kind == "ea":
            return elementary_abelian(*spec.args)
        if spec.kind == "dihedral":
            return dihedral(*spec.args)
        if spec.kind == "sym":
            return symmetric(*spec.args)
        if spec.kind == "q8":
            return quaternion()
        if spec.kind == "prod":
            return direct_product(self.build(spec.children[0]), self.build(spec.children[1]))
        if spec.kind == "table":
            return load_cayley_table(spec.args[0])
        if spec.kind == "perm":
            degree = 1 + max(max(c) for g in spec.args for c in g)
            gens = [cycles_to_permutation(g, degree) for g in spec.args]
            return from_permutations(gens, name=str(spec), closure_cap=self.closure_cap)
        raise InvalidSpec(f"Unknown group constructor '{spec.kind}'")


# Global builder instance
group_builder = GroupBuilder()


def make_group(spec: Union[str, GroupSpec]) -> FiniteGroup:
    return group_builder.build(spec)
