import warnings

import pytest

from greenheights import (
    ConstructionRecipe,
    Ideal,
    InvalidIdealError,
    NoZeroError,
    RangeError,
    UnknownFixtureError,
    analyze,
    asym_family,
    build_semigroup,
    direct_product,
    fixture,
    ideal_closure,
    k_classes,
    k_height,
    longest_chain_oracle,
    minimal_ideal,
    nm_family,
    opposite,
    realize_recipe,
    rees_quotient,
    squarefree_words,
    u_of,
)

from helpers import adjoin_zero, census, cyclic_group


def test_rees_quotient_by_everything_is_trivial():
    s = fixture("fig1_u")
    q = rees_quotient(s, ideal_closure(s, range(s.order)))
    assert q.order == 1


def test_rees_quotient_order_and_zero():
    s = fixture("fig1_u")
    socle = ideal_closure(s, [3])  # x_1 generates the fresh tail
    q = rees_quotient(s, socle)
    assert q.order == s.order - len(socle.members) + 1
    assert q.zero == q.order - 1


def test_rees_quotient_rejects_foreign_ideals():
    s = fixture("fig1_s")
    other = fixture("fig2_u2")
    ideal = ideal_closure(other, [4])
    with pytest.raises(InvalidIdealError):
        rees_quotient(s, ideal)


def test_rees_quotient_canonical_map_is_a_homomorphism():
    s = fixture("fig1_u")
    for seed in range(s.order):
        ideal = ideal_closure(s, [seed])
        q = rees_quotient(s, ideal)
        survivors = [a for a in range(s.order) if a not in ideal.members]
        position = {a: i for i, a in enumerate(survivors)}
        zero = len(survivors)

        def push(a):
            return position.get(a, zero)

        for a in range(s.order):
            for b in range(s.order):
                assert q.table[push(a)][push(b)] == push(s.table[a][b])


def test_quotient_by_completely_simple_minimal_ideal_preserves_heights():
    for s in census(3):
        q = rees_quotient(s, minimal_ideal(s))
        for relation in ("L", "R", "J"):
            assert k_height(s, relation) == k_height(q, relation)


def test_extension_requires_a_zero():
    with pytest.raises(NoZeroError):
        u_of(cyclic_group(3))


def test_extension_of_the_trivial_zero_semigroup_is_figure_one():
    s = build_semigroup([[0]])
    u = u_of(s)
    assert u.table == fixture("fig1_s").table


def test_extension_embeds_the_original_and_adds_a_null_ideal():
    s = fixture("fig1_s")
    u = u_of(s)
    n = s.order
    assert u.order == 2 * n + 1
    for a in range(n):
        for b in range(n):
            assert u.table[a][b] == s.table[a][b]
    fresh = list(range(n, 2 * n + 1))
    for x in fresh:
        for y in fresh:
            assert u.table[x][y] == u.zero
    assert Ideal(u, frozenset(fresh))  # the fresh part really is an ideal


def test_extension_height_laws_on_fixtures():
    s = fixture("fig1_s")
    u = u_of(s)
    assert k_height(u, "L") == k_height(s, "L") + 1 == 3
    assert k_height(u, "R") == 2 * k_height(s, "R") + 1 == 7


def test_iterated_extension_follows_the_doubling_law():
    s = fixture("fig1_s")
    uu = u_of(u_of(s))
    expected = 2 * (2 * k_height(s, "R") + 1) + 1
    assert k_height(uu, "R") == expected == longest_chain_oracle(uu, "R")


def test_nm_family_base_and_figure_case():
    assert nm_family(1, 1).order == 1
    s = nm_family(2, 3)
    assert s.table == fixture("fig1_s").table  # same table up to the stored names


def test_nm_family_full_sweep_small():
    for n in range(1, 5):
        for m in range(n, 2**n):
            s = nm_family(n, m)
            assert s.order == m
            assert k_height(s, "L") == n
            assert k_height(s, "R") == m
            assert k_height(s, "J") == m
            assert k_classes(s, "J").class_count == m  # J-trivial


def test_nm_family_rejects_out_of_range_parameters():
    for n, m in ((0, 1), (2, 1), (2, 4), (3, 8)):
        with pytest.raises(RangeError):
            nm_family(n, m)


def test_asym_family_small_values():
    u2 = asym_family(2)
    assert u2.order == 5
    assert u2.table == fixture("fig2_u2").table
    u3 = asym_family(3)
    assert u3.order == 37
    assert [k_height(u3, k) for k in "LRJ"] == [8, 8, 12]


def test_asym_family_flags_the_degenerate_case():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        s = asym_family(1)
    assert s.order == 1
    assert any(issubclass(w.category, RuntimeWarning) for w in caught)
    with pytest.raises(RangeError):
        asym_family(0)


def test_squarefree_words_orders_and_heights():
    expected_orders = {1: 2, 2: 5, 3: 16, 4: 65}
    for k, order in expected_orders.items():
        s = squarefree_words(k)
        assert s.order == order
        assert [k_height(s, rel) for rel in "LRJ"] == [k + 1] * 3
        assert k_height(s, "H") == 2
    with pytest.raises(RangeError):
        squarefree_words(0)
    with pytest.raises(RangeError):
        squarefree_words(7)


def test_squarefree_word_names_and_collapse():
    s = squarefree_words(2)
    assert s.names == ("x", "y", "xy", "yx", "0")
    x, y, xy, yx, zero = range(5)
    assert s.table[x][y] == xy
    assert s.table[y][x] == yx
    assert s.table[x][x] == zero
    assert s.table[xy][yx] == zero


def test_fixture_registry():
    assert fixture("fig1_s").order == 3
    assert fixture("fig1_u").order == 7
    assert fixture("fig2_u2").order == 5
    with pytest.raises(UnknownFixtureError):
        fixture("bicyclic_truncation_none")
    with pytest.raises(UnknownFixtureError):
        fixture("nope")


def test_fig2_u2_analysis_matches_the_displayed_posets():
    report = analyze(fixture("fig2_u2"))
    assert (report.H_L, report.H_R, report.H_J, report.H_H) == (3, 3, 4, 2)
    assert report.has_zero and not report.regular


def test_recipe_objects():
    s = realize_recipe(ConstructionRecipe("nm_family", (2, 3)))
    assert s.order == 3
    s = realize_recipe(ConstructionRecipe("u_of", ("fig1_s",)))
    assert s.order == 7
    s = realize_recipe(ConstructionRecipe("rees_quotient", ("fig1_u", 3)))
    assert s.order == 4
    with pytest.raises(RangeError):
        ConstructionRecipe("frobnicate", ())


def test_asymmetric_family_ingredients_at_n_two():
    # the order-9 product collapses onto the five-element table
    s = nm_family(2, 3)
    t = opposite(s)
    p = direct_product(s, t)
    assert p.order == 9
    members = frozenset(
        {s.zero * t.order + j for j in range(t.order)}
        | {i * t.order + t.zero for i in range(s.order)}
    )
    q = rees_quotient(p, Ideal(p, members))
    assert q.order == 5


def test_extension_laws_on_every_small_semigroup_with_zero():
    for order in (1, 2, 3):
        for s in census(order):
            if s.zero is None:
                continue
            u = u_of(s)
            assert k_height(u, "L") == k_height(s, "L") + 1
            assert k_height(u, "R") == 2 * k_height(s, "R") + 1


def test_adjoining_zero_then_quotienting_by_socle_bounds():
    # socle quotient inequalities on a few concrete cases
    from greenheights.structure import left_socle

    for base in census(3)[::6]:
        s = base if base.zero is not None else adjoin_zero(base)
        socle = left_socle(s)
        q = rees_quotient(s, socle)
        if s.order >= 2:
            assert k_height(s, "L") == k_height(q, "L") + 1
        assert k_height(s, "R") <= 2 * k_height(q, "R") + 1
        assert k_height(s, "J") <= k_height(q, "R") + k_height(q, "J") + 1


def test_socle_bounds_on_sampled_order_five_and_six_inputs():
    from helpers import sampled_zero_semigroups
    from greenheights.structure import left_socle

    for s in sampled_zero_semigroups(150):
        socle = left_socle(s)
        q = rees_quotient(s, socle)
        assert k_height(s, "L") == k_height(q, "L") + 1
        assert k_height(s, "R") <= 2 * k_height(q, "R") + 1
        assert k_height(s, "J") <= k_height(q, "R") + k_height(q, "J") + 1


def test_full_range_family_members_keep_a_left_identity():
    for n in range(1, 5):
        s = nm_family(n, 2**n - 1)
        assert any(
            all(s.table[e][a] == a for a in range(s.order))
            for e in range(s.order)
        )
