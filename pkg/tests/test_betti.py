import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linres3.betti import (
    betti_table,
    betti_tables,
    has_linear_resolution_oracle,
    hilbert_consistency_check,
    is_linearly_presented_oracle,
    regularity,
    socle_degrees_from_back_twists,
    standard_monomial_counts,
    upper_koszul_complex,
)
from linres3.homology import reduced_homology_ranks
from linres3.monomials import MonomialIdeal, contains, lcm, minimalize, monomials_of_degree, power_ideal

PINCHED = MonomialIdeal(3, tuple(m for m in monomials_of_degree(3, 3) if m != (1, 1, 1)))
J = MonomialIdeal(3, ((3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1), (0, 2, 1)))


def slow_betti(ideal, p=0):
    """Upper Koszul homology at every lcm of a subset of generators."""
    gens = ideal.generators
    points = set()
    for k in range(1, len(gens) + 1):
        for sub in itertools.combinations(gens, k):
            top = sub[0]
            for g in sub[1:]:
                top = lcm(top, g)
            points.add(top)
    out = {}
    for a in points:
        for k, r in reduced_homology_ranks(upper_koszul_complex(ideal, a), p).items():
            if r:
                out[(k + 1, a)] = r
    return out


def stable_betti(ideal):
    """Eliahou-Kervaire totals for a strongly stable ideal: sum over u of C(max(u) - 1, i)."""
    n = ideal.num_vars
    totals = [0] * n
    for g in ideal.generators:
        top = max(i for i in range(n) if g[i]) + 1
        for i in range(n):
            totals[i] += comb(top - 1, i)
    return [t for t in totals if t]


def test_principal_ideal():
    t = betti_table(MonomialIdeal(3, ((3, 0, 0),)))
    assert t.entries == {(0, (3, 0, 0)): 1}
    assert t.regularity() == 3 and t.projective_dimension() == 0


def test_square_of_maximal_ideal():
    t = betti_table(power_ideal(3, 2))
    assert t.graded() == {(0, 2): 6, (1, 3): 8, (2, 4): 3}
    assert [t.total(i) for i in range(3)] == stable_betti(power_ideal(3, 2))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_powers_of_maximal_ideal_match_eliahou_kervaire(d):
    ideal = power_ideal(3, d)
    t = betti_table(ideal)
    assert [t.total(i) for i in range(t.projective_dimension() + 1)] == stable_betti(ideal)
    assert t.regularity() == d


def test_lex_segment_matches_eliahou_kervaire():
    lex = MonomialIdeal(3, ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0)))
    t = betti_table(lex)
    assert [t.total(i) for i in range(t.projective_dimension() + 1)] == stable_betti(lex)


def test_pinched_power_ideal_table():
    t = betti_table(PINCHED)
    assert t.graded() == {(0, 3): 9, (1, 4): 12, (2, 5): 3, (2, 6): 1}
    assert t.regularity() == 4
    assert regularity(PINCHED, 2) == regularity(PINCHED, 3) == 4
    assert not has_linear_resolution_oracle(PINCHED)
    assert is_linearly_presented_oracle(PINCHED)


def test_two_far_apart_powers():
    ideal = MonomialIdeal(3, ((3, 0, 0), (0, 0, 3)))
    t = betti_table(ideal)
    assert t.graded() == {(0, 3): 2, (1, 6): 1}
    assert not is_linearly_presented_oracle(ideal)


def test_upper_koszul_examples():
    assert upper_koszul_complex(PINCHED, (1, 1, 1)).is_void
    # x^2y^2z^2 / xyz = xyz is the one missing cubic, so the top face is absent
    k = upper_koszul_complex(PINCHED, (2, 2, 2))
    assert k.faces == frozenset(itertools.chain.from_iterable(itertools.combinations(range(3), r) for r in range(3)))
    assert reduced_homology_ranks(k)[1] == 1
    # at x^2yz only x^2yz/y and x^2yz/z lie in the ideal: two points
    two = upper_koszul_complex(PINCHED, (2, 1, 1))
    assert two.faces == frozenset({(), (1,), (2,)})
    assert betti_table(PINCHED).entries[(1, (2, 1, 1))] == 1
    with pytest.raises(ValueError):
        upper_koszul_complex(PINCHED, (1, 1))


def test_subject_conversion():
    t = betti_table(J)
    q = t.to_quotient()
    assert q.subject == "S/I" and q.entries[(0, (0, 0, 0))] == 1
    assert q.to_ideal() == t and t.to_ideal() is t


def test_socle_degrees_from_back_twists():
    assert socle_degrees_from_back_twists(PINCHED) == [2, 2, 2, 3]
    assert socle_degrees_from_back_twists(power_ideal(3, 3)) == [2] * 6
    assert socle_degrees_from_back_twists(J) == [2, 2]
    assert socle_degrees_from_back_twists(MonomialIdeal(3, ((2, 0, 0), (1, 1, 0)))) == []


def test_json_shape():
    data = betti_table(power_ideal(3, 2)).to_json()
    assert data["regularity"] == 2 and data["projective_dimension"] == 2
    assert {"i": 1, "j": 3, "rank": 8} in data["graded"]


def test_box_guard():
    with pytest.raises(ValueError):
        betti_table(MonomialIdeal(3, ((400, 0, 0), (0, 400, 0), (0, 0, 400))))


def test_shared_scan_matches_single_calls():
    tables = betti_tables(PINCHED, (0, 2, 3))
    for t, c in zip(tables, (0, 2, 3)):
        assert t == betti_table(PINCHED, c)


def test_standard_monomial_counts():
    assert standard_monomial_counts(power_ideal(3, 2), 4) == [1, 3, 0, 0, 0]
    # (x^2): monomials of degree k not divisible by x^2 are those with x-degree 0 or 1
    assert standard_monomial_counts(MonomialIdeal(3, ((2, 0, 0),)), 3) == [1, 3, 5, 7]


ideals3 = st.sets(st.sampled_from(monomials_of_degree(3, 3)), min_size=1, max_size=10).map(
    lambda s: MonomialIdeal(3, tuple(s))
)
mixed = st.sets(st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=5).map(minimalize)


@settings(max_examples=30, deadline=None)
@given(ideals3)
def test_fast_table_matches_slow_route(ideal):
    assert betti_table(ideal).entries == slow_betti(ideal)


@settings(max_examples=30, deadline=None)
@given(mixed, st.sampled_from([0, 2]))
def test_fast_table_matches_slow_route_mixed_degrees(ideal, p):
    assert betti_table(ideal, p).entries == slow_betti(ideal, p)


@settings(max_examples=30, deadline=None)
@given(mixed)
def test_first_betti_numbers_are_generators(ideal):
    t = betti_table(ideal)
    assert {a for (i, a) in t.entries if i == 0} == set(ideal.generators)
    assert all(r == 1 for (i, _), r in t.entries.items() if i == 0)


def test_hilbert_consistency_on_random_cubics():
    rng = random.Random(7)
    monos = monomials_of_degree(3, 3)
    for _ in range(100):
        ideal = MonomialIdeal(3, tuple(rng.sample(monos, rng.randint(1, len(monos)))))
        assert hilbert_consistency_check(ideal, rng.choice([0, 2, 3]))


def test_hilbert_consistency_mixed_degrees_and_more_variables():
    assert hilbert_consistency_check(MonomialIdeal(3, ((2, 0, 0), (0, 3, 0), (1, 1, 1))))
    assert hilbert_consistency_check(power_ideal(4, 2))


def test_contains_agrees_with_counts():
    ideal = J
    for k in range(6):
        outside = sum(not contains(ideal, m) for m in monomials_of_degree(3, k))
        assert standard_monomial_counts(ideal, 5)[k] == outside
