"""Green's preorders, the posets of K-classes, and the height computations.

Dominance is computed per element as the principal (left/right/two-sided)
ideal, stored as one bitmask per element: ``below[b]`` has bit ``a`` set
exactly when a <=_K b. Two elements are K-equivalent precisely when their
dominance masks coincide, so classes fall out of a single grouping pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSemigroup, Ideal
from .errors import EmptyIdealError, InvalidIdealError

ORDERED_RELATIONS = ("L", "R", "J", "H")
RELATIONS = ORDERED_RELATIONS + ("D",)


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=1024)
def below_masks(s: FiniteSemigroup, relation: str) -> tuple[int, ...]:
    """Per-element dominance bitmasks: bit a of below[b] says a <=_K b."""
    table = s.table
    n = s.order
    if relation == "L":
        masks = []
        for b in range(n):
            m = 1 << b
            for x in range(n):
                m |= 1 << table[x][b]
            masks.append(m)
        return tuple(masks)
    if relation == "R":
        masks = []
        for b in range(n):
            m = 1 << b
            for v in table[b]:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)
    if relation == "H":
        left = below_masks(s, "L")
        right = below_masks(s, "R")
        return tuple(a & b for a, b in zip(left, right))
    if relation == "J":
        left = below_masks(s, "L")
        right = below_masks(s, "R")
        masks = []
        for b in range(n):
            m = 0
            for x in iter_bits(right[b]):
                m |= left[x]
            masks.append(m)
        return tuple(masks)
    raise ValueError(f"no preorder is associated with relation {relation!r}")


def preorder(s: FiniteSemigroup, relation: str) -> list[list[bool]]:
    """The n x n boolean matrix of the preorder: entry [a][b] means a <=_K b."""
    masks = below_masks(s, relation)
    n = s.order
    return [[bool((masks[b] >> a) & 1) for b in range(n)] for a in range(n)]


@dataclass(frozen=True)
class GreenStructure:
    """One Green's relation on one semigroup: classes, their order and depths.

    ``dag`` holds the Hasse reduction of the class order: dag[i] lists the
    classes covered by class i (one step further from the top). ``depth[i]``
    counts the classes in the longest chain from a maximal class down to i,
    inclusive, so the K-height is max(depth). For D, which carries no order,
    ``dag`` and ``depth`` are None and only the partition is populated.
    """

    relation: str
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    dag: tuple[tuple[int, ...], ...] | None
    depth: tuple[int, ...] | None

    @property
    def class_count(self) -> int:
        return len(self.classes)


def _group_by_mask(masks):
    """Partition element indices by mask value; classes ordered by least member."""
    seen: dict[int, int] = {}
    class_of = []
    classes: list[list[int]] = []
    for a, m in enumerate(masks):
        c = seen.get(m)
        if c is None:
            c = len(classes)
            seen[m] = c
            classes.append([])
        class_of.append(c)
        classes[c].append(a)
    return class_of, classes


def _d_partition(s: FiniteSemigroup):
    """Join of the L- and R-partitions via union-find."""
    n = s.order
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for relation in ("L", "R"):
        _, classes = _group_by_mask(below_masks(s, relation))
        for members in classes:
            for other in members[1:]:
                union(members[0], other)

    roots: dict[int, int] = {}
    class_of = []
    classes: list[list[int]] = []
    for a in range(n):
        r = find(a)
        c = roots.get(r)
        if c is None:
            c = len(classes)
            roots[r] = c
            classes.append([])
        class_of.append(c)
        classes[c].append(a)
    return class_of, classes


@lru_cache(maxsize=1024)
def k_classes(s: FiniteSemigroup, relation: str) -> GreenStructure:
    """Classes of one Green's relation, with the Hasse diagram and depths.

    ``relation`` is one of L, R, J, H, D. Class indices are assigned by the
    smallest contained element, making every field deterministic.
    """
    if relation == "D":
        class_of, classes = _d_partition(s)
        return GreenStructure(
            "D",
            tuple(class_of),
            tuple(tuple(c) for c in classes),
            None,
            None,
        )
    masks = below_masks(s, relation)
    class_of, classes = _group_by_mask(masks)
    count = len(classes)
    reps = [members[0] for members in classes]

    # strictly-below masks on class indices
    lt = [0] * count
    for i in range(count):
        mi = masks[reps[i]]
        for j in range(count):
            if i != j and (mi >> reps[j]) & 1:
                lt[i] |= 1 << j
    gt = [0] * count
    for i in range(count):
        for j in iter_bits(lt[i]):
            gt[j] |= 1 << i

    dag = []
    for i in range(count):
        covered = [j for j in iter_bits(lt[i]) if not (lt[i] & gt[j])]
        dag.append(tuple(covered))

    depth = [0] * count
    order_by_height = sorted(range(count), key=lambda c: gt[c].bit_count())
    for c in order_by_height:
        above = [depth[p] for p in iter_bits(gt[c])]
        depth[c] = 1 + max(above, default=0)

    return GreenStructure(
        relation,
        tuple(class_of),
        tuple(tuple(c) for c in classes),
        tuple(dag),
        tuple(depth),
    )


def k_height(s: FiniteSemigroup, relation: str) -> int:
    """Number of classes in the longest chain of K-classes (at least 1)."""
    if relation not in ORDERED_RELATIONS:
        raise ValueError(f"heights are defined for {ORDERED_RELATIONS}, not {relation!r}")
    structure = k_classes(s, relation)
    return max(structure.depth)


def _strictly_below(masks, a):
    out = []
    mask = masks[a]
    for b in iter_bits(mask):
        if b != a and not (masks[b] >> a) & 1:
            out.append(b)
    return out


def longest_chain_oracle(s: FiniteSemigroup, relation: str) -> int:
    """Longest strictly decreasing element sequence, found directly.

    Works element by element from the preorder alone, with no class
    condensation, as an independent cross-check of :func:`k_height`.
    """
    return len(longest_chain_elements(s, relation))


def longest_chain_elements(s: FiniteSemigroup, relation: str) -> tuple[int, ...]:
    """One longest strictly <=_K-decreasing element chain (deterministic)."""
    if relation not in ORDERED_RELATIONS:
        raise ValueError(f"chains are defined for {ORDERED_RELATIONS}, not {relation!r}")
    masks = below_masks(s, relation)
    best: dict[int, tuple[int, ...]] = {}

    def chain_from(a):
        got = best.get(a)
        if got is None:
            tails = [chain_from(b) for b in _strictly_below(masks, a)]
            longest = max(tails, key=len, default=())
            got = (a,) + longest
            best[a] = got
        return got

    overall: tuple[int, ...] = ()
    for a in range(s.order):
        c = chain_from(a)
        if len(c) > len(overall):
            overall = c
    return overall


def height_within_ideal(s: FiniteSemigroup, ideal: Ideal, relation: str) -> int:
    """Height of the subposet of K-classes of ``s`` contained in ``ideal``.

    The classes are classes of ``s`` itself, not of the ideal viewed as a
    semigroup in its own right.
    """
    if relation not in ORDERED_RELATIONS:
        raise ValueError(f"heights are defined for {ORDERED_RELATIONS}, not {relation!r}")
    if ideal.parent != s:
        raise InvalidIdealError("ideal belongs to a different semigroup")
    if not ideal.members:
        raise EmptyIdealError("an ideal must be nonempty")
    structure = k_classes(s, relation)
    masks = below_masks(s, relation)
    inside = [
        i
        for i, members in enumerate(structure.classes)
        if all(m in ideal.members for m in members)
    ]
    reps = {i: structure.classes[i][0] for i in inside}
    best: dict[int, int] = {}

    def chain_from(i):
        got = best.get(i)
        if got is None:
            below = [
                j
                for j in inside
                if j != i and (masks[reps[i]] >> reps[j]) & 1
            ]
            got = 1 + max((chain_from(j) for j in below), default=0)
            best[i] = got
        return got

    # an ideal is a union of K-classes, so a nonempty ideal contains one
    return max(chain_from(i) for i in inside)


def idempotent_height(s: FiniteSemigroup) -> int:
    """Height of the idempotent poset, where e >= f means ef = fe = f."""
    table = s.table
    idempotents = [e for e in range(s.order) if table[e][e] == e]
    if not idempotents:
        raise ValueError("finite semigroup without idempotents: invalid input")

    def strictly_below(e):
        return [
            f
            for f in idempotents
            if f != e and table[e][f] == f and table[f][e] == f
        ]

    best: dict[int, int] = {}

    def chain_from(e):
        got = best.get(e)
        if got is None:
            got = 1 + max((chain_from(f) for f in strictly_below(e)), default=0)
            best[e] = got
        return got

    return max(chain_from(e) for e in idempotents)


@dataclass(frozen=True)
class HeightReport:
    """The five heights of one semigroup together with its structural flags."""

    H_L: int
    H_R: int
    H_J: int
    H_H: int
    H_E: int
    left_stable: bool
    right_stable: bool
    group_bound: bool
    regular: bool
    inverse: bool
    semisimple: bool
    completely_semisimple: bool
    completely_simple: bool
    has_zero: bool


def to_dot(s: FiniteSemigroup, relation: str) -> str:
    """Render the Hasse diagram of the K-class poset as a Graphviz digraph.

    Output ordering is fixed (nodes and edges sorted by class index) so that
    repeated runs diff cleanly.
    """
    structure = k_classes(s, relation)
    if structure.dag is None:
        raise ValueError(f"relation {relation!r} has no associated order to export")
    lines = [f'digraph "green_{relation}" {{', "  rankdir=TB;"]
    for i, members in enumerate(structure.classes):
        label = "{" + ",".join(s.name_of(m) for m in members) + "}"
        lines.append(f'  c{i} [label="{label}"];')
    for i, covered in enumerate(structure.dag):
        for j in covered:
            lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
