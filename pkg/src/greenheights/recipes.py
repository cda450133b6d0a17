"""One-line recipe strings for building semigroups, shared by the command
line and the sweep harness.

Grammar (one recipe per string):
    nm:<n>,<m>            the J-trivial family member with side heights (n, m)
    asym:<n>              the equal-side-heights family member
    sqfree:<k>            square-free words over k letters
    u-of:<source>         null ideal extension of a source with zero
    rees:<source>,<e+e+..> Rees quotient by the ideal closure of the listed
                          elements (0-based indices joined by '+')
    fixture:<name>        a named reference table
    op:<source>           opposite (anti-isomorphic dual)
    prod:<source>,<source> direct product
    s1:<source>           adjoin a fresh identity

A <source> is either a fixture name or a path to an mtab v1 file.
"""

from __future__ import annotations

from pathlib import Path

from .core import (
    FiniteSemigroup,
    adjoin_identity,
    direct_product,
    ideal_closure,
    opposite,
    parse_mtab,
)
from .constructions import (
    FIXTURE_NAMES,
    asym_family,
    fixture,
    nm_family,
    rees_quotient,
    squarefree_words,
    u_of,
)
from .errors import ParseError

RECIPE_KINDS = ("nm", "asym", "sqfree", "u-of", "rees", "fixture", "op", "prod", "s1")


def looks_like_recipe(text: str) -> bool:
    kind, sep, _ = text.partition(":")
    return bool(sep) and kind in RECIPE_KINDS


def _default_read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _ints(text: str, count: int, recipe: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise ParseError(f"recipe {recipe!r}: expected {count} integer parameters")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"recipe {recipe!r}: parameters must be integers") from None


def build_from_string(text: str, read_file=None) -> FiniteSemigroup:
    """Build the semigroup a recipe string describes."""
    if read_file is None:
        read_file = _default_read

    def resolve(source: str) -> FiniteSemigroup:
        if source in FIXTURE_NAMES:
            return fixture(source)
        try:
            raw = read_file(source)
        except OSError as exc:
            raise ParseError(f"cannot read source {source!r}: {exc}") from None
        return parse_mtab(raw)

    kind, sep, rest = text.partition(":")
    if not sep or kind not in RECIPE_KINDS:
        raise ParseError(f"not a recognised recipe: {text!r}")
    if kind == "nm":
        n, m = _ints(rest, 2, text)
        return nm_family(n, m)
    if kind == "asym":
        (n,) = _ints(rest, 1, text)
        return asym_family(n)
    if kind == "sqfree":
        (k,) = _ints(rest, 1, text)
        return squarefree_words(k)
    if kind == "u-of":
        return u_of(resolve(rest))
    if kind == "fixture":
        return fixture(rest)
    if kind == "op":
        return opposite(resolve(rest))
    if kind == "s1":
        return adjoin_identity(resolve(rest))
    if kind == "prod":
        left, sep2, right = rest.partition(",")
        if not sep2:
            raise ParseError(f"recipe {text!r}: expected two sources")
        return direct_product(resolve(left), resolve(right))
    # rees
    source, sep2, elems = rest.partition(",")
    if not sep2 or not elems:
        raise ParseError(f"recipe {text!r}: expected 'rees:<source>,<e+e+..>'")
    base = resolve(source)
    try:
        seed = [int(p) for p in elems.split("+")]
    except ValueError:
        raise ParseError(f"recipe {text!r}: ideal elements must be integers") from None
    return rees_quotient(base, ideal_closure(base, seed))
