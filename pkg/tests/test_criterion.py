import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linres3.betti import betti_table, has_linear_resolution_oracle
from linres3.criterion import (
    d_shadow,
    find_bad_configuration,
    has_linear_resolution_criterion,
    induces_bad_configuration,
    level,
    scan_bad_configurations,
    socle_monomials,
)
from linres3.monomials import MonomialIdeal, contains, divides, monomials_of_degree, power_ideal

PINCHED = MonomialIdeal(3, tuple(m for m in monomials_of_degree(3, 3) if m != (1, 1, 1)))
J = MonomialIdeal(3, ((3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1), (0, 2, 1)))
SHADOWS = MonomialIdeal(3, ((3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2)))
TREE_EXAMPLE = MonomialIdeal(3, ((1, 3, 0), (1, 2, 1), (0, 3, 1), (2, 1, 1), (3, 0, 1), (2, 0, 2), (0, 2, 2)))

equigenerated = st.integers(2, 4).flatmap(
    lambda d: st.sets(st.sampled_from(monomials_of_degree(3, d)), min_size=1, max_size=12)
).map(lambda s: MonomialIdeal(3, tuple(s)))


def test_d_shadow_examples():
    assert d_shadow((2, 1, 0), 2) == {(2, 0, 0), (1, 1, 0)}
    assert d_shadow((1, 1, 1), 3) == {(1, 1, 1)}
    assert d_shadow((1, 1, 1), 4) == frozenset()
    assert d_shadow((2, 1, 1), 3) == {(2, 1, 0), (2, 0, 1), (1, 1, 1)}
    with pytest.raises(ValueError):
        d_shadow((1, 1, 1), -1)


@given(st.tuples(*[st.integers(0, 4)] * 3), st.integers(0, 6), st.integers(0, 2))
def test_d_shadow_is_all_degree_d_divisors(f, d, i):
    brute = {m for m in monomials_of_degree(3, d) if divides(m, f)}
    assert d_shadow(f, d) == brute
    g = list(f)
    g[i] += 1
    assert d_shadow(f, d) <= d_shadow(tuple(g), d)


def test_level():
    assert level((1, 1, 2)) == 2
    with pytest.raises(ValueError):
        level((1, 1))


def test_socle_examples():
    assert socle_monomials(PINCHED) == [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)]
    assert socle_monomials(J) == [(2, 0, 0), (0, 2, 0)]
    assert socle_monomials(MonomialIdeal(3, ((3, 0, 0), (0, 0, 3)))) == []


def test_bad_configuration_example_with_shadows():
    v = induces_bad_configuration(SHADOWS, (1, 1, 1))
    assert v and v.kind == "bad_configuration"
    w = v.witness
    assert w.shadow == {(1, 1, 1)}
    assert (w.hit_x, w.hit_y, w.hit_z) == ((2, 1, 0), (1, 2, 0), (1, 0, 2))
    assert find_bad_configuration(SHADOWS).inducer == (1, 1, 1)
    assert not has_linear_resolution_criterion(SHADOWS)


def test_pinched_and_j():
    v = has_linear_resolution_criterion(PINCHED)
    assert not v and v.kind == "bad_configuration" and v.witness.inducer == (1, 1, 1)
    assert has_linear_resolution_criterion(J)
    assert has_linear_resolution_criterion(power_ideal(3, 3))
    assert has_linear_resolution_criterion(TREE_EXAMPLE)


def test_non_presented_witness_is_a_pair():
    v = has_linear_resolution_criterion(MonomialIdeal(3, ((3, 0, 0), (0, 0, 3))))
    assert not v and v.kind == "disconnected_pair" and v.witness == (0, 1)


def test_input_validation():
    with pytest.raises(ValueError):
        has_linear_resolution_criterion(MonomialIdeal(3, ((1, 0, 0), (0, 2, 0))))
    with pytest.raises(ValueError):
        socle_monomials(power_ideal(4, 2))


@given(equigenerated)
def test_socle_matches_definition(ideal):
    d = ideal.degree
    brute = []
    for f in (m for k in range(3 * d + 1) for m in monomials_of_degree(3, k)):
        if contains(ideal, f):
            continue
        if all(contains(ideal, tuple(e + (i == j) for j, e in enumerate(f))) for i in range(3)):
            brute.append(f)
    assert sorted(socle_monomials(ideal)) == sorted(brute)


@given(equigenerated)
def test_two_routes_to_bad_configurations(ideal):
    d = ideal.degree
    high = [f for f in socle_monomials(ideal) if f.degree >= d]
    assert scan_bad_configurations(ideal, box=d + 1) == high
    assert (find_bad_configuration(ideal) is None) == (not high)


@settings(max_examples=150, deadline=None)
@given(equigenerated)
def test_criterion_agrees_with_oracle(ideal):
    assert has_linear_resolution_criterion(ideal).ok == has_linear_resolution_oracle(ideal)


def test_socle_gap_and_back_twists_on_random_quartics():
    rng = random.Random(3)
    monos = monomials_of_degree(3, 4)
    for _ in range(60):
        ideal = MonomialIdeal(3, tuple(rng.sample(monos, rng.randint(1, 15))))
        socle = socle_monomials(ideal)
        assert all(f.degree >= 3 for f in socle)
        q = betti_table(ideal).to_quotient().graded()
        twists = sorted(j - 3 for (i, j), r in q.items() if i == 3 for _ in range(r))
        assert twists == sorted(f.degree for f in socle)
