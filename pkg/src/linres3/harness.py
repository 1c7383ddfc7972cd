"""Exhaustive cross-validation of the criterion, the Betti oracle and the orders.

``validate_ideal`` runs every check on one ideal and records one boolean flag
per check (``True`` means consistent).  ``run_sweep`` aggregates the reports
over all equigenerated ideals of a given degree in three variables.  A failed
flag never aborts a sweep; mismatches are collected and reported.

Flags
-----
lin_pres_vs_oracle     dual-graph linear presentation agrees with beta_1 of the oracle
criterion_vs_oracle    combinatorial criterion agrees with reg(I) == d
char_independence      Betti tables agree across the requested characteristics
bad_config_routes      pointwise bad-configuration scan == socle monomials of degree >= d
socle_gap              no socle monomial has degree <= d - 2
socle_back_twists      socle degrees == {j - 3 : beta_{3,j}(S/I)}
hilbert                every Betti table computed reproduces the Hilbert function
tree_order_exists      linearly presented ideals admit a tree order
tree_order_quotients   linear resolution => tree order has linear quotients
prefix_equivalence     colon check <=> prefixes linearly presented <=> prefixes oracle-linear
same_level_connected   same-level generators stay connected in every tree-order prefix
newest_pair            the first non-presented prefix has a disconnected pair with its newest generator
quotient_search        exact search finds an order <=> oracle-linear
powers_linear          linear resolution => I^k oracle-linear for k <= powers_up_to
powers_criterion       criterion agrees with the oracle on those powers
"""
from __future__ import annotations

import itertools
import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .betti import (
    betti_table,
    betti_tables,
    hilbert_bound,
    hilbert_check_table,
    socle_degrees_from_table,
    standard_monomial_counts,
)
from .criterion import (
    find_bad_configuration,
    has_linear_resolution_criterion,
    scan_bad_configurations,
    socle_monomials,
)
from .dualgraph import disconnected_pairs, is_linearly_presented
from .homology import SimplicialComplex, check_characteristic
from .monomials import MonomialIdeal, format_monomial, monomials_of_degree, power
from .quotients import (
    TreeOrderError,
    find_linear_quotient_order,
    has_linear_quotients_in_order,
    newest_pair_witness,
    prefix_linear_presentation_check,
    tree_order,
)

EXHAUSTIVE_LIMIT = 4

FLAGS = (
    "lin_pres_vs_oracle",
    "criterion_vs_oracle",
    "char_independence",
    "bad_config_routes",
    "socle_gap",
    "socle_back_twists",
    "hilbert",
    "tree_order_exists",
    "tree_order_quotients",
    "prefix_equivalence",
    "same_level_connected",
    "newest_pair",
    "quotient_search",
    "powers_linear",
    "powers_criterion",
)


def enumerate_equigenerated(d: int, mode: str = "exhaustive", count: int = 0, seed: int = 0,
                            allow_large: bool = False):
    """Yield equigenerated ideals of degree ``d`` in ``k[x, y, z]``.

    Every nonempty set of degree-``d`` monomials is already a minimal
    generating set.  Exhaustive mode walks the subsets in bitmask order (bit
    ``i`` = ``i``-th monomial in canonical order).  Sample mode draws
    ``count`` distinct subsets with ``random.Random(seed)``.
    """
    monos = monomials_of_degree(3, d)
    total = (1 << len(monos)) - 1
    if mode == "exhaustive":
        if d > EXHAUSTIVE_LIMIT and not allow_large:
            raise ValueError(f"exhaustive sweeps stop at d = {EXHAUSTIVE_LIMIT}; sample or pass allow_large")
        masks = range(1, total + 1)
    elif mode == "sample":
        masks = sorted(random.Random(seed).sample(range(1, total + 1), min(count, total)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for mask in masks:
        yield MonomialIdeal(3, tuple(m for i, m in enumerate(monos) if mask >> i & 1))


@dataclass
class IdealReport:
    ideal: MonomialIdeal
    flags: dict = field(default_factory=dict)
    facts: dict = field(default_factory=dict)

    @property
    def failed(self) -> list:
        return [name for name in FLAGS if self.flags.get(name) is False]

    @property
    def consistent(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        return {
            "ideal": [format_monomial(g) for g in self.ideal.generators],
            "consistent": self.consistent,
            "failed": self.failed,
            "flags": {k: self.flags[k] for k in FLAGS if k in self.flags},
            "facts": self.facts,
        }


class _Oracle:
    """Betti tables per (ideal, characteristic), each checked against the Hilbert function once."""

    def __init__(self):
        self.tables = {}
        self.hilbert_ok = True
        self.hilbert_checked = 0

    def tables_for(self, ideal: MonomialIdeal, characteristics) -> list:
        todo = [c for c in characteristics if (ideal.generators, c) not in self.tables]
        if todo:
            counts = standard_monomial_counts(ideal, hilbert_bound(ideal))
            for c, t in zip(todo, betti_tables(ideal, todo)):
                self.tables[(ideal.generators, c)] = t
                self.hilbert_checked += 1
                if not hilbert_check_table(ideal, t, counts):
                    self.hilbert_ok = False
        return [self.tables[(ideal.generators, c)] for c in characteristics]

    def table(self, ideal: MonomialIdeal, characteristic: int):
        return self.tables_for(ideal, (characteristic,))[0]

    def linear(self, ideal: MonomialIdeal, characteristics) -> bool:
        """Oracle-linear in every one of ``characteristics``."""
        return all(t.regularity() == ideal.degree for t in self.tables_for(ideal, characteristics))


def _same_level_connected(prefix) -> bool:
    by_level: dict = {}
    for i, g in enumerate(prefix):
        by_level.setdefault(g[2], []).append(i)
    pairs = [p for idx in by_level.values() for p in itertools.combinations(idx, 2)]
    return next(iter(disconnected_pairs(prefix, pairs)), None) is None


def validate_ideal(ideal: MonomialIdeal, powers_up_to: int = 2, characteristics=(0,),
                   search_quotients: bool = True) -> IdealReport:
    chars = [check_characteristic(c) for c in characteristics]
    d = ideal.degree
    report = IdealReport(ideal)
    flags, facts = report.flags, report.facts
    oracle = _Oracle()

    tables = oracle.tables_for(ideal, chars)
    regs = {c: t.regularity() for c, t in zip(chars, tables)}
    facts["regularity"] = {str(c): r for c, r in regs.items()}
    flags["char_independence"] = all(t.entries == tables[0].entries for t in tables)

    presented = bool(is_linearly_presented(ideal))
    facts["linearly_presented"] = presented
    flags["lin_pres_vs_oracle"] = all(
        presented == all(j == d + 1 for (i, j) in t.graded() if i == 1) for t in tables
    )

    verdict = has_linear_resolution_criterion(ideal)
    linear = verdict.ok
    facts["linear_resolution"] = linear
    facts["witness_kind"] = verdict.kind or None
    flags["criterion_vs_oracle"] = all((r == d) == linear for r in regs.values())

    socle = socle_monomials(ideal)
    high = [f for f in socle if f.degree >= d]
    facts["bad_configuration"] = find_bad_configuration(ideal) is not None
    flags["bad_config_routes"] = scan_bad_configurations(ideal) == high and facts["bad_configuration"] == bool(high)
    flags["socle_gap"] = all(f.degree >= d - 1 for f in socle)
    socle_degrees = sorted(f.degree for f in socle)
    facts["depth_zero"] = bool(socle)
    flags["socle_back_twists"] = all(socle_degrees_from_table(t) == socle_degrees for t in tables)
    facts["socle_degrees"] = socle_degrees

    if presented:
        try:
            tree = tree_order(ideal)
        except TreeOrderError:
            tree = None
        flags["tree_order_exists"] = tree is not None
        if tree is not None:
            facts["tree_order"] = [format_monomial(m) for m in tree.monomials]
            colon = has_linear_quotients_in_order(ideal, tree.order)
            facts["tree_order_quotients"] = colon.ok
            if linear:
                flags["tree_order_quotients"] = colon.ok
            prefix = prefix_linear_presentation_check(ideal, tree.order)
            gens = tree.monomials
            prefix_oracle = all(
                oracle.linear(MonomialIdeal(3, tuple(gens[:j])), chars) for j in range(1, len(gens) + 1)
            )
            flags["prefix_equivalence"] = colon.ok == prefix.ok == prefix_oracle
            if linear:
                flags["same_level_connected"] = all(
                    _same_level_connected(gens[:j]) for j in range(2, len(gens) + 1)
                )
            if not prefix.ok:
                first_bad = prefix.witness[0]
                flags["newest_pair"] = newest_pair_witness(ideal, tree.order, first_bad) is not None

    if search_quotients:
        found = find_linear_quotient_order(ideal)
        facts["quotient_order_found"] = found is not None
        ok = (found is not None) == all(r == d for r in regs.values())
        if found is not None:
            ok = ok and has_linear_quotients_in_order(ideal, found).ok
        flags["quotient_search"] = ok

    if linear and powers_up_to >= 2:
        lin_ok = crit_ok = True
        for k in range(2, powers_up_to + 1):
            pk = power(ideal, k)
            pk_linear = oracle.linear(pk, chars)
            lin_ok = lin_ok and pk_linear
            crit_ok = crit_ok and has_linear_resolution_criterion(pk).ok == pk_linear
        flags["powers_linear"] = lin_ok
        flags["powers_criterion"] = crit_ok

    flags["hilbert"] = oracle.hilbert_ok
    facts["hilbert_checked"] = oracle.hilbert_checked
    return report


@dataclass
class SweepReport:
    degree: int
    mode: str
    population: int
    characteristics: tuple
    powers_up_to: int
    search_quotients: bool
    seed: int | None = None
    counts: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "degree": self.degree,
            "mode": self.mode,
            "seed": self.seed,
            "population": self.population,
            "characteristics": list(self.characteristics),
            "powers_up_to": self.powers_up_to,
            "search_quotients": self.search_quotients,
            "counts": self.counts,
            "checks": {k: self.checks.get(k, 0) for k in FLAGS},
            "failures": {k: self.failures.get(k, 0) for k in FLAGS},
            "mismatch_count": len(self.mismatches),
            "mismatches": self.mismatches,
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), indent=2)


def _validate_args(args):
    ideal, powers_up_to, chars, search = args
    return validate_ideal(ideal, powers_up_to, chars, search)


COUNTED = ("linearly_presented", "linear_resolution", "quotient_order_found", "bad_configuration", "depth_zero")


def run_sweep(d: int, mode: str = "exhaustive", powers_up_to: int = 2, characteristics=(0,),
              search_quotients: bool = True, samples: int = 0, seed: int = 0, threads: int = 1,
              allow_large: bool = False, keep_reports: bool = False):
    """Validate every ideal of the population and aggregate.

    With ``threads > 1`` the ideals are spread over worker processes; results
    are merged in enumeration order so the report does not depend on the
    worker count.  Returns the ``SweepReport``, plus the list of per-ideal
    reports when ``keep_reports`` is set.
    """
    start = time.perf_counter()
    chars = tuple(check_characteristic(c) for c in characteristics)
    ideals = enumerate_equigenerated(d, mode, samples, seed, allow_large)
    jobs = ((I, powers_up_to, chars, search_quotients) for I in ideals)
    if threads > 1:
        with ProcessPoolExecutor(threads) as pool:
            reports = list(pool.map(_validate_args, jobs, chunksize=64))
    else:
        reports = [_validate_args(job) for job in jobs]

    counts: Counter = Counter()
    checks: Counter = Counter()
    failures: Counter = Counter()
    mismatches = []
    for rep in reports:
        for key in COUNTED:
            counts[key] += bool(rep.facts.get(key))
        for name, value in rep.flags.items():
            checks[name] += 1
            failures[name] += not value
        if not rep.consistent:
            mismatches.append(rep.to_json())
    sweep = SweepReport(
        degree=d,
        mode=mode,
        population=len(reports),
        characteristics=chars,
        powers_up_to=powers_up_to,
        search_quotients=search_quotients,
        seed=seed if mode == "sample" else None,
        counts={k: counts[k] for k in COUNTED},
        checks=dict(checks),
        failures=dict(failures),
        mismatches=mismatches,
        elapsed_seconds=time.perf_counter() - start,
    )
    return (sweep, reports) if keep_reports else sweep


def exhaustive_population(d: int) -> int:
    return 2 ** comb(d + 2, 2) - 1


# The 6-vertex triangulation of the real projective plane (vertices 0..5).
RP2_FACETS = (
    (0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
    (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5),
)


def minimal_nonfaces(num_vertices: int, facets) -> list:
    """Minimal vertex sets that are not faces of the complex spanned by ``facets``."""
    complex_ = SimplicialComplex.from_facets(num_vertices, facets)
    out = []
    for k in range(1, num_vertices + 1):
        for sub in itertools.combinations(range(num_vertices), k):
            if sub in complex_.faces:
                continue
            if all(s in complex_.faces for s in itertools.combinations(sub, k - 1)):
                out.append(sub)
    return out


def stanley_reisner_ideal(num_vertices: int, facets) -> MonomialIdeal:
    gens = []
    for sub in minimal_nonfaces(num_vertices, facets):
        exps = [0] * num_vertices
        for v in sub:
            exps[v] = 1
        gens.append(tuple(exps))
    return MonomialIdeal(num_vertices, tuple(gens))


def reisner_demo(characteristics=(0, 2, 3)) -> dict:
    """Regularity of the Stanley-Reisner ideal of RP^2 in several characteristics."""
    ideal = stanley_reisner_ideal(6, RP2_FACETS)
    results = {}
    for c in characteristics:
        table = betti_table(ideal, c)
        reg = table.regularity()
        results[str(c)] = {
            "regularity": reg,
            "linear_resolution": reg == ideal.degree,
            "graded": [{"i": i, "j": j, "rank": r} for (i, j), r in table.graded().items()],
        }
    return {
        "facets": [list(f) for f in RP2_FACETS],
        "generators": [format_monomial(g) for g in ideal.generators],
        "degree": ideal.degree,
        "characteristics": results,
    }
