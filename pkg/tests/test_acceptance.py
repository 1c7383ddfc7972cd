"""End-to-end acceptance checks.

The four exhaustive sweeps (d = 1..4 over characteristics 0, 2, 3) are run
once per session and shared.  Each test reads the aggregated flag counters;
every check is exact, and each test also asserts that its check actually ran
on the expected number of ideals so that a zero failure count is not vacuous.
"""
import time
from math import comb

import pytest

from linres3.betti import betti_table, hilbert_consistency_check
from linres3.criterion import find_bad_configuration, has_linear_resolution_criterion
from linres3.dualgraph import is_linearly_presented, simplex_graph
from linres3.harness import exhaustive_population, reisner_demo, run_sweep
from linres3.monomials import MonomialIdeal, format_monomial, monomials_of_degree, power_ideal
from linres3.quotients import tree_order

CHARS = (0, 2, 3)
POWERS = {1: 3, 2: 3, 3: 2, 4: 1}
SEARCH = {1: True, 2: True, 3: True, 4: False}

PINCHED = MonomialIdeal(3, tuple(m for m in monomials_of_degree(3, 3) if m != (1, 1, 1)))
J = MonomialIdeal(3, ((3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1), (0, 2, 1)))
SHADOWS = MonomialIdeal(3, ((3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2)))
TREE_EXAMPLE = MonomialIdeal(3, ((1, 3, 0), (1, 2, 1), (0, 3, 1), (2, 1, 1), (3, 0, 1), (2, 0, 2), (0, 2, 2)))
GOLDEN = (PINCHED, J, SHADOWS, TREE_EXAMPLE, power_ideal(3, 3))


@pytest.fixture(scope="session")
def sweeps():
    start = time.perf_counter()
    out = {}
    for d in (1, 2, 3, 4):
        out[d] = run_sweep(d, powers_up_to=POWERS[d], characteristics=CHARS, search_quotients=SEARCH[d])
    out["elapsed"] = time.perf_counter() - start
    return out


def fails(sweep, flag):
    return sweep.failures.get(flag, 0)


def checked(sweep, flag):
    return sweep.checks.get(flag, 0)


@pytest.mark.criterion(1, "criterion equals oracle on all 33860 ideals with d <= 4, chars 0/2/3")
def test_criterion_1_criterion_matches_oracle(sweeps):
    for d in (1, 2, 3, 4):
        s = sweeps[d]
        assert s.population == exhaustive_population(d) == 2 ** comb(d + 2, 2) - 1
        assert s.characteristics == CHARS
        for flag in ("criterion_vs_oracle", "lin_pres_vs_oracle", "bad_config_routes"):
            assert checked(s, flag) == s.population
            assert fails(s, flag) == 0, (d, flag, s.mismatches[:3])
    assert sum(sweeps[d].population for d in (1, 2, 3, 4)) == 7 + 63 + 1023 + 32767
    print(f"\n  sweeps took {sweeps['elapsed']:.1f}s")
    assert sweeps["elapsed"] < 300


@pytest.mark.criterion(2, "tree order exists and has linear quotients for every linear-resolution ideal")
def test_criterion_2_tree_order(sweeps):
    for d in (1, 2, 3, 4):
        s = sweeps[d]
        assert checked(s, "tree_order_exists") == s.counts["linearly_presented"]
        assert checked(s, "tree_order_quotients") == s.counts["linear_resolution"] > 0
        assert fails(s, "tree_order_exists") == fails(s, "tree_order_quotients") == 0


@pytest.mark.criterion(3, "colon check, prefix presentation and prefix oracle agree on every tree order")
def test_criterion_3_prefix_equivalence(sweeps):
    for d in (1, 2, 3, 4):
        s = sweeps[d]
        assert checked(s, "prefix_equivalence") == checked(s, "tree_order_exists")
        assert checked(s, "prefix_equivalence") >= s.counts["linear_resolution"]
        assert fails(s, "prefix_equivalence") == 0
        assert fails(s, "same_level_connected") == fails(s, "newest_pair") == 0


@pytest.mark.criterion(4, "exact quotient-order search agrees with the oracle for d <= 3")
def test_criterion_4_converse(sweeps):
    for d in (1, 2, 3):
        s = sweeps[d]
        assert checked(s, "quotient_search") == s.population
        assert fails(s, "quotient_search") == 0
        assert s.counts["quotient_order_found"] == s.counts["linear_resolution"]


@pytest.mark.criterion(5, "powers of linear-resolution ideals stay linear (d = 2: I^2, I^3; d = 3: I^2)")
def test_criterion_5_powers(sweeps):
    for d, k in ((2, 3), (3, 2)):
        s = sweeps[d]
        assert POWERS[d] >= k
        assert checked(s, "powers_linear") == s.counts["linear_resolution"] > 0
        assert fails(s, "powers_linear") == fails(s, "powers_criterion") == 0


@pytest.mark.criterion(6, "golden ideals: pinched power, J, shadow example, tree orders")
def test_criterion_6_golden():
    assert is_linearly_presented(PINCHED)
    v = has_linear_resolution_criterion(PINCHED)
    assert not v and format_monomial(v.witness.inducer) == "xyz"
    assert betti_table(PINCHED).regularity() == 4
    assert has_linear_resolution_criterion(J)
    assert format_monomial(find_bad_configuration(SHADOWS).inducer) == "xyz"
    assert str(tree_order(power_ideal(3, 3))) == "x^3, x^2y, xy^2, y^3, x^2z, xyz, y^2z, xz^2, yz^2, z^3"
    assert str(tree_order(TREE_EXAMPLE)) == "xy^3, xy^2z, y^3z, x^2yz, x^3z, x^2z^2, y^2z^2"


@pytest.mark.criterion(7, "socle degrees equal back twists on every depth-zero ideal with d <= 3")
def test_criterion_7_socle_back_twists(sweeps):
    for d in (1, 2, 3):
        s = sweeps[d]
        assert checked(s, "socle_back_twists") == s.population
        assert 0 < s.counts["depth_zero"] < s.population
        assert fails(s, "socle_back_twists") == fails(s, "socle_gap") == 0


@pytest.mark.criterion(8, "Hilbert series consistency for every Betti table computed above")
def test_criterion_8_hilbert(sweeps):
    for d in (1, 2, 3, 4):
        s = sweeps[d]
        assert checked(s, "hilbert") == s.population
        assert fails(s, "hilbert") == 0
    for ideal in GOLDEN:
        for c in CHARS:
            assert hilbert_consistency_check(ideal, c)


@pytest.mark.criterion(9, "Reisner ideal: regularity 3 in char 0, 4 in char 2, under 30 s")
def test_criterion_9_reisner():
    start = time.perf_counter()
    out = reisner_demo((0, 2))
    elapsed = time.perf_counter() - start
    assert out["characteristics"]["0"]["regularity"] == 3
    assert out["characteristics"]["2"]["regularity"] == 4
    assert elapsed < 30


@pytest.mark.criterion(10, "edge and vertex counts of the degree-d lattice for d <= 10")
def test_criterion_10_counts():
    for d in range(1, 11):
        assert simplex_graph(3, d).num_edges == 3 * comb(d + 1, 2)
    for d in range(0, 11):
        assert len(monomials_of_degree(3, d)) == comb(d + 2, 2)
