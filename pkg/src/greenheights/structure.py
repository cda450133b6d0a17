"""Structural predicates and decompositions built on the Green machinery.

Several functions double as self-tests: facts that hold for every finite
semigroup (stability, the minimal-ideal descriptions, Green's idempotent
criterion for regularity) are recomputed from the definitions, and a
disagreement raises InternalCheckError because it can only mean a bug here,
never a property of the validated input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSemigroup, Ideal, build_semigroup, opposite, unique_names
from .errors import InternalCheckError, NoZeroError
from .green import below_masks, iter_bits, k_classes, k_height


def _require_zero(s: FiniteSemigroup) -> int:
    if s.zero is None:
        raise NoZeroError("this operation needs a semigroup with a zero element")
    return s.zero


def is_left_stable(s: FiniteSemigroup) -> bool:
    """Whether a <=_L b together with a J b always forces a L b."""
    left = below_masks(s, "L")
    two_sided = below_masks(s, "J")
    n = s.order
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            if (left[b] >> a) & 1 and two_sided[a] == two_sided[b]:
                if not (left[a] >> b) & 1:
                    return False
    return True


def is_right_stable(s: FiniteSemigroup) -> bool:
    """Whether a <=_R b together with a J b always forces a R b."""
    right = below_masks(s, "R")
    two_sided = below_masks(s, "J")
    n = s.order
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            if (right[b] >> a) & 1 and two_sided[a] == two_sided[b]:
                if not (right[a] >> b) & 1:
                    return False
    return True


def is_stable(s: FiniteSemigroup) -> bool:
    return is_left_stable(s) and is_right_stable(s)


def group_bound_exponents(s: FiniteSemigroup) -> tuple[int, ...]:
    """For each element a, the least k with a^k H a^(2k).

    Such a k exists with k <= order because the power sequence enters its
    cycle, a subgroup, within order steps.
    """
    h_masks = below_masks(s, "H")
    table = s.table
    n = s.order
    out = []
    for a in range(n):
        powers = [a]
        for _ in range(2 * n):
            powers.append(table[powers[-1]][a])
        found = None
        for k in range(1, n + 1):
            if h_masks[powers[k - 1]] == h_masks[powers[2 * k - 1]]:
                found = k
                break
        if found is None:
            raise InternalCheckError(
                f"element {a} has no power inside a subgroup within {n} steps"
            )
        out.append(found)
    return tuple(out)


def is_group_bound(s: FiniteSemigroup) -> bool:
    """True for every finite semigroup; also checks the exponent bound H_H."""
    exponents = group_bound_exponents(s)
    bound = k_height(s, "H")
    if any(k > bound for k in exponents):
        raise InternalCheckError("a power-to-subgroup exponent exceeded the H-height")
    return True


def _sink_union(s: FiniteSemigroup, relation: str) -> set[int]:
    structure = k_classes(s, relation)
    out: set[int] = set()
    for i, covered in enumerate(structure.dag):
        if not covered:
            out.update(structure.classes[i])
    return out


def minimal_ideal(s: FiniteSemigroup) -> Ideal:
    """The unique minimum J-class, which every finite semigroup has.

    Cross-checks that it equals the union of the minimal L-classes and the
    union of the minimal R-classes.
    """
    structure = k_classes(s, "J")
    sinks = [i for i, covered in enumerate(structure.dag) if not covered]
    if len(sinks) != 1:
        raise InternalCheckError(f"expected one minimal J-class, found {len(sinks)}")
    members = frozenset(structure.classes[sinks[0]])
    for relation in ("L", "R"):
        if _sink_union(s, relation) != members:
            raise InternalCheckError(
                f"minimal {relation}-classes do not cover the minimal ideal"
            )
    return Ideal(s, members)


def is_simple(s: FiniteSemigroup) -> bool:
    return k_height(s, "J") == 1


def is_completely_simple(s: FiniteSemigroup) -> bool:
    return k_height(s, "H") == 1


def is_0_simple(s: FiniteSemigroup) -> bool:
    """Exactly two J-classes, {0} and the rest, with S*S not {0}."""
    zero = _require_zero(s)
    if s.order < 2:
        return False
    if k_classes(s, "J").class_count != 2:
        return False
    return any(v != zero for row in s.table for v in row)


def zero_minimal_classes(s: FiniteSemigroup, relation: str) -> list[int]:
    """Indices of the K-classes whose only strictly lower class is {0}."""
    zero = _require_zero(s)
    structure = k_classes(s, relation)
    masks = below_masks(s, relation)
    zero_class = structure.class_of[zero]
    out = []
    for c, members in enumerate(structure.classes):
        if c == zero_class:
            continue
        below = {structure.class_of[b] for b in iter_bits(masks[members[0]])} - {c}
        if below == {zero_class}:
            out.append(c)
    return out


def is_completely_0_simple(s: FiniteSemigroup) -> bool:
    return (
        is_0_simple(s)
        and bool(zero_minimal_classes(s, "L"))
        and bool(zero_minimal_classes(s, "R"))
    )


def left_socle(s: FiniteSemigroup) -> Ideal:
    """Union of {0} and all 0-minimal L-classes; validated as a two-sided ideal."""
    zero = _require_zero(s)
    structure = k_classes(s, "L")
    members = {zero}
    for c in zero_minimal_classes(s, "L"):
        members.update(structure.classes[c])
    return Ideal(s, frozenset(members))


def right_socle(s: FiniteSemigroup) -> Ideal:
    """Dual of the left socle, computed on the opposite table."""
    return Ideal(s, left_socle(opposite(s)).members)


def _restrict(s: FiniteSemigroup, elements) -> FiniteSemigroup:
    """Subsemigroup on a multiplicatively closed element set."""
    elems = sorted(elements)
    position = {e: i for i, e in enumerate(elems)}
    rows = []
    for a in elems:
        row = []
        for b in elems:
            p = s.table[a][b]
            if p not in position:
                raise InternalCheckError(f"set is not closed: {a}*{b} = {p} escapes")
            row.append(position[p])
        rows.append(row)
    names = None
    if s.names is not None:
        names = [s.names[e] for e in elems]
    return build_semigroup(rows, names)


@dataclass(frozen=True)
class PrincipalFactor:
    """The factor attached to one J-class: the class itself for the minimal
    ideal, otherwise the class with a zero adjoined and escaping products sent
    to that zero."""

    j_class: frozenset[int]
    factor: FiniteSemigroup
    kind: str  # "simple" | "zero_simple" | "null"


@lru_cache(maxsize=512)
def principal_factors(s: FiniteSemigroup) -> tuple[PrincipalFactor, ...]:
    """One factor per J-class, classified as simple, zero_simple or null."""
    structure = k_classes(s, "J")
    minimal = minimal_ideal(s).members
    out = []
    for members in structure.classes:
        j_set = frozenset(members)
        if j_set == minimal:
            factor = _restrict(s, members)
            if k_height(factor, "H") != 1:
                raise InternalCheckError("the minimal ideal is not completely simple")
            out.append(PrincipalFactor(j_set, factor, "simple"))
            continue
        elems = sorted(members)
        position = {e: i for i, e in enumerate(elems)}
        zero_index = len(elems)
        rows = []
        stays = False
        for a in elems:
            row = []
            for b in elems:
                p = s.table[a][b]
                if p in position:
                    row.append(position[p])
                    stays = True
                else:
                    row.append(zero_index)
            row.append(zero_index)
            rows.append(row)
        rows.append([zero_index] * (zero_index + 1))
        names = None
        if s.names is not None:
            names = unique_names([s.names[e] for e in elems] + ["0"])
        factor = build_semigroup(rows, names)
        if not stays:
            kind = "null"
        else:
            if not is_0_simple(factor):
                raise InternalCheckError("a non-null principal factor is not 0-simple")
            kind = "zero_simple"
        out.append(PrincipalFactor(j_set, factor, kind))
    return tuple(out)


def _inverses_of(s: FiniteSemigroup, a: int) -> list[int]:
    table = s.table
    return [
        b
        for b in range(s.order)
        if table[table[a][b]][a] == a and table[table[b][a]][b] == b
    ]


def is_regular(s: FiniteSemigroup) -> bool:
    """Every element has an inverse; cross-checked against the idempotent
    criterion (every L-class and every R-class contains an idempotent)."""
    n = s.order
    definitional = all(_inverses_of(s, a) for a in range(n))
    table = s.table
    idempotents = [e for e in range(n) if table[e][e] == e]
    by_idempotents = True
    for relation in ("L", "R"):
        structure = k_classes(s, relation)
        with_idem = {structure.class_of[e] for e in idempotents}
        if len(with_idem) != structure.class_count:
            by_idempotents = False
            break
    if definitional != by_idempotents:
        raise InternalCheckError("regularity checks disagree")
    return definitional


def is_inverse(s: FiniteSemigroup) -> bool:
    """Every element has exactly one inverse; cross-checked against the
    one-idempotent-per-class criterion."""
    n = s.order
    definitional = all(len(_inverses_of(s, a)) == 1 for a in range(n))
    table = s.table
    idempotents = [e for e in range(n) if table[e][e] == e]
    by_idempotents = True
    for relation in ("L", "R"):
        structure = k_classes(s, relation)
        counts = [0] * structure.class_count
        for e in idempotents:
            counts[structure.class_of[e]] += 1
        if any(c != 1 for c in counts):
            by_idempotents = False
            break
    if definitional != by_idempotents:
        raise InternalCheckError("inverse-semigroup checks disagree")
    return definitional


def is_semisimple(s: FiniteSemigroup) -> bool:
    """No null principal factor."""
    return all(pf.kind != "null" for pf in principal_factors(s))


def is_completely_semisimple(s: FiniteSemigroup) -> bool:
    """Every principal factor completely simple or completely 0-simple.

    For finite semigroups this must coincide with regularity, so the two are
    cross-checked.
    """
    result = True
    for pf in principal_factors(s):
        if pf.kind == "null":
            result = False
            break
        if pf.kind == "zero_simple" and not is_completely_0_simple(pf.factor):
            result = False
            break
    if result != is_regular(s):
        raise InternalCheckError(
            "complete semisimplicity and regularity disagree on a finite semigroup"
        )
    return result
