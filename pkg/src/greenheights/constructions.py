"""Every finite construction used by the analysis: Rees quotients, the null
ideal extension U(S), the two extremal families, square-free word semigroups,
and the named fixture tables."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .core import (
    FiniteSemigroup,
    Ideal,
    adjoin_identity,
    build_semigroup,
    direct_product,
    ideal_closure,
    opposite,
    unique_names,
)
from .errors import (
    InternalCheckError,
    InvalidIdealError,
    NoZeroError,
    RangeError,
    UnknownFixtureError,
)
from .green import below_masks, k_height

WORD_LETTERS = "xyzuvw"


def rees_quotient(s: FiniteSemigroup, ideal: Ideal) -> FiniteSemigroup:
    """Collapse an ideal to a single fresh zero.

    Surviving elements keep their relative order; the fresh zero gets the last
    index. Quotienting by the whole semigroup gives the trivial semigroup.
    """
    if not isinstance(ideal, Ideal) or ideal.parent != s:
        raise InvalidIdealError("expected an ideal of the semigroup being quotiented")
    survivors = [a for a in range(s.order) if a not in ideal.members]
    position = {a: i for i, a in enumerate(survivors)}
    zero_index = len(survivors)
    rows = []
    for a in survivors:
        row = []
        for b in survivors:
            p = s.table[a][b]
            row.append(position.get(p, zero_index))
        row.append(zero_index)
        rows.append(row)
    rows.append([zero_index] * (zero_index + 1))
    names = None
    if s.names is not None:
        names = unique_names([s.names[a] for a in survivors] + ["0"])
    return build_semigroup(rows, names)


def u_of(s: FiniteSemigroup) -> FiniteSemigroup:
    """The null ideal extension of a semigroup with zero z.

    Adds one fresh element x_t per t in S with an identity adjoined, with
    a*x_t = x_t, x_t*a = x_(ta) and x_t*x_u = x_z. The fresh elements follow
    the originals, x_1 first and then x_t in element order; the result has
    order 2|S|+1 and zero x_z.
    """
    if s.zero is None:
        raise NoZeroError("the null ideal extension needs a zero element")
    z = s.zero
    n = s.order
    total = 2 * n + 1

    def x(t: int) -> int:
        return n + 1 + t

    rows = [[0] * total for _ in range(total)]
    for a in range(n):
        row = rows[a]
        for b in range(n):
            row[b] = s.table[a][b]
        row[n] = n
        for t in range(n):
            row[x(t)] = x(t)
    row = rows[n]
    for b in range(n):
        row[b] = x(b)
    row[n] = x(z)
    for t in range(n):
        row[x(t)] = x(z)
    for t in range(n):
        row = rows[x(t)]
        for b in range(n):
            row[b] = x(s.table[t][b])
        row[n] = x(z)
        for u in range(n):
            row[x(u)] = x(z)
    base = s.element_names()
    names = unique_names(list(base) + ["x_1"] + [f"x_{b}" for b in base])
    out = build_semigroup(rows, names)
    if out.zero != x(z):
        raise InternalCheckError("the extension did not put its zero at x_z")
    return out


def nm_family(n: int, m: int) -> FiniteSemigroup:
    """A J-trivial semigroup of order m with side heights (n, m).

    Valid for 1 <= n <= m <= 2**n - 1. Built recursively: the trivial
    semigroup at the base; an adjoined identity while m <= 2**(n-1); otherwise
    the null ideal extension of the previous full-range member, cut back by
    the tail of its (total) R-order.
    """
    if n < 1 or m < n or m > 2**n - 1:
        raise RangeError(f"need 1 <= n <= m <= 2^n - 1, got n={n}, m={m}")
    if n == 1:
        return build_semigroup([[0]], ["e"])
    if m <= 2 ** (n - 1):
        return adjoin_identity(nm_family(n - 1, m - 1))
    previous = nm_family(n - 1, 2 ** (n - 1) - 1)
    extended = u_of(previous)
    size = extended.order  # 2**n - 1
    ranks = [mask.bit_count() for mask in below_masks(extended, "R")]
    if sorted(ranks) != list(range(1, size + 1)):
        raise InternalCheckError("expected a total R-order on the extension")
    tail = frozenset(a for a in range(size) if ranks[a] <= size - m + 1)
    result = rees_quotient(extended, Ideal(extended, tail))
    if result.order != m:
        raise InternalCheckError(f"expected order {m}, built {result.order}")
    return result


def asym_family(n: int) -> FiniteSemigroup:
    """The family with equal side heights 2^n + n - 3 and two-sided height
    2^(n+1) - 4.

    The formulas are degenerate at n=1 (they would give height 0), so that
    case is flagged with a warning and returns the trivial semigroup.
    """
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    if n == 1:
        warnings.warn(
            "asym_family(1) is degenerate (formulas give height 0); "
            "returning the trivial semigroup",
            RuntimeWarning,
            stacklevel=2,
        )
        return build_semigroup([[0]], ["e"])
    left_part = nm_family(n, 2**n - 1)
    order = left_part.order
    has_left_identity = any(
        all(left_part.table[e][a] == a for a in range(order)) for e in range(order)
    )
    if not has_left_identity:
        raise InternalCheckError("the recursive construction lost its left identity")
    right_part = opposite(left_part)
    product = direct_product(left_part, right_part)
    zs = left_part.zero
    zt = right_part.zero
    nt = right_part.order
    members = frozenset(
        {zs * nt + j for j in range(nt)} | {i * nt + zt for i in range(left_part.order)}
    )
    result = rees_quotient(product, Ideal(product, members))
    side = 2**n + n - 3
    two_sided = 2 ** (n + 1) - 4
    measured = (k_height(result, "L"), k_height(result, "R"), k_height(result, "J"))
    if measured != (side, side, two_sided):
        raise InternalCheckError(
            f"expected heights {(side, side, two_sided)}, measured {measured}"
        )
    return result


def squarefree_words(k: int) -> FiniteSemigroup:
    """Words with pairwise distinct letters over a k-letter alphabet, plus 0.

    The product is concatenation, collapsing to 0 as soon as a letter repeats.
    Words are indexed by (length, lexicographic) order with 0 last.
    """
    if not 1 <= k <= 6:
        raise RangeError(f"need 1 <= k <= 6, got {k}")
    words: list[tuple[int, ...]] = []
    for length in range(1, k + 1):
        words.extend(itertools.permutations(range(k), length))
    words.sort(key=lambda w: (len(w), w))
    index = {w: i for i, w in enumerate(words)}
    zero = len(words)
    total = zero + 1
    rows = [[zero] * total for _ in range(total)]
    for w1 in words:
        row = rows[index[w1]]
        for w2 in words:
            joined = w1 + w2
            if len(set(joined)) == len(joined):
                row[index[w2]] = index[joined]
    names = ["".join(WORD_LETTERS[i] for i in w) for w in words] + ["0"]
    return build_semigroup(rows, names)


# Named fixture tables. "bicyclic_truncation_none" records that the one
# infinite example in this area has no finite stand-in: requesting it is an
# error by design.
FIXTURE_NAMES = ("fig1_s", "fig1_u", "fig2_u2")


def fixture(name: str) -> FiniteSemigroup:
    """Return one of the named reference tables."""
    if name == "fig1_s":
        return build_semigroup(
            [[0, 1, 2], [2, 2, 2], [2, 2, 2]],
            ["e", "a", "z"],
        )
    if name == "fig1_u":
        return u_of(fixture("fig1_s"))
    if name == "fig2_u2":
        return build_semigroup(
            [
                [0, 4, 2, 4, 4],
                [1, 4, 3, 4, 4],
                [4, 4, 4, 4, 4],
                [4, 4, 4, 4, 4],
                [4, 4, 4, 4, 4],
            ],
            ["a", "b", "c", "d", "0"],
        )
    if name == "bicyclic_truncation_none":
        raise UnknownFixtureError(
            "bicyclic_truncation_none: the bicyclic monoid is infinite and has "
            "no finite truncation, so no table is provided"
        )
    raise UnknownFixtureError(f"unknown fixture {name!r}")


@dataclass(frozen=True)
class ConstructionRecipe:
    """A CLI-facing description of one construction call.

    kinds and parameters:
      rees_quotient     (source_id, seed elements...)  quotient by the ideal
                        closure of the seed
      u_of              (source_id,)
      nm_family         (n, m)
      asym_family       (n,)
      squarefree_words  (k,)
      fixture           (name,)
    """

    kind: str
    parameters: tuple

    def __post_init__(self):
        kinds = (
            "rees_quotient",
            "u_of",
            "nm_family",
            "asym_family",
            "squarefree_words",
            "fixture",
        )
        if self.kind not in kinds:
            raise RangeError(f"unknown construction kind {self.kind!r}")
        object.__setattr__(self, "parameters", tuple(self.parameters))


def realize_recipe(recipe: ConstructionRecipe, resolve=fixture) -> FiniteSemigroup:
    """Build the semigroup a recipe describes.

    ``resolve`` maps a source id (by default a fixture name) to a semigroup;
    the command line passes a resolver that also accepts file paths.
    """
    kind = recipe.kind
    params = recipe.parameters
    if kind == "nm_family":
        n, m = params
        return nm_family(int(n), int(m))
    if kind == "asym_family":
        (n,) = params
        return asym_family(int(n))
    if kind == "squarefree_words":
        (k,) = params
        return squarefree_words(int(k))
    if kind == "fixture":
        (name,) = params
        return fixture(str(name))
    if kind == "u_of":
        (source,) = params
        return u_of(resolve(source))
    source, *seed = params
    base = resolve(source)
    return rees_quotient(base, ideal_closure(base, [int(e) for e in seed]))
