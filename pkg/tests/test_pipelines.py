"""Generative stress test: random construction pipelines keep the height laws.

Starting from small census members, apply random structure-preserving steps
(adjoin an identity, flip to the opposite, multiply by a tiny factor, collapse
a random principal ideal) and assert the unconditional height inequalities on
whatever comes out.
"""

from hypothesis import given, settings
from hypothesis import strategies as st

from greenheights import (
    adjoin_identity,
    direct_product,
    idempotent_height,
    ideal_closure,
    k_height,
    opposite,
    rees_quotient,
)

from helpers import census, left_zero


def _apply_step(s, step, pick):
    if step == "adjoin":
        return adjoin_identity(s)
    if step == "opposite":
        return opposite(s)
    if step == "product":
        return direct_product(s, left_zero(2))
    seed = pick % s.order
    return rees_quotient(s, ideal_closure(s, [seed]))


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(census(3)),
    st.lists(
        st.tuples(
            st.sampled_from(["adjoin", "opposite", "product", "collapse"]),
            st.integers(0, 7),
        ),
        max_size=4,
    ),
)
def test_random_pipelines_respect_the_height_inequalities(s, steps):
    for step, pick in steps:
        if s.order > 40:
            break
        s = _apply_step(s, step, pick)
    h = {rel: k_height(s, rel) for rel in "LRJH"}
    h_e = idempotent_height(s)
    assert h["H"] <= min(h["L"], h["R"])
    assert max(h["L"], h["R"]) <= h["J"]
    assert h["L"].bit_length() <= h["R"] <= 2 ** h["L"] - 1
    assert h["L"] <= h["J"] <= 2 ** h["L"] - 1
    if h["L"] >= 2 and h["R"] >= 2:
        smallest = min(h["L"], h["R"])
        assert h["J"] <= min(2**smallest - 1, h["L"] + h["R"] - 2)
    assert h_e <= min(h["L"], h["R"], h["H"])
