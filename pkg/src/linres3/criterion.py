"""Combinatorial test for linear resolutions in ``k[x, y, z]``.

An ideal generated in degree ``d`` has a linear resolution iff it is linearly
presented and no monomial ``f`` induces a bad configuration, i.e. no ``f``
has a ``d``-shadow that misses ``I`` entirely while the ``d``-shadows of
``fx``, ``fy`` and ``fz`` all meet ``G(I)``.  Such an ``f`` is exactly a socle
monomial of ``S/I`` of degree at least ``d``.

Socle search box.  If ``f`` is not in ``I`` but ``f * x_i`` is, some generator
divides ``f * x_i`` but not ``f``; its ``x_i``-exponent is then ``f_i + 1``,
and it is at most ``d``.  So every socle monomial lies in ``[0, d-1]^3``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dualgraph import Verdict, is_linearly_presented
from .monomials import Monomial, MonomialIdeal, canonical_key, canonical_sorted, membership_grid


@dataclass(frozen=True)
class BadConfigWitness:
    inducer: Monomial
    shadow: frozenset
    hit_x: Monomial
    hit_y: Monomial
    hit_z: Monomial


def _require_three_vars(ideal_or_monomial) -> None:
    n = ideal_or_monomial.num_vars if isinstance(ideal_or_monomial, MonomialIdeal) else len(ideal_or_monomial)
    if n != 3:
        raise ValueError(f"only defined in three variables, got {n}")


def _require_criterion_input(ideal: MonomialIdeal) -> int:
    _require_three_vars(ideal)
    if ideal.is_zero:
        raise ValueError("the zero ideal is not a valid input")
    return ideal.degree


def d_shadow(f, d: int) -> frozenset:
    """All degree-``d`` monomials dividing ``f``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return _shadow(Monomial(f), d)


@lru_cache(maxsize=None)
def _shadow(f: Monomial, d: int) -> frozenset:
    out = set()
    for exps in itertools.product(*(range(e + 1) for e in f[:-1])):
        last = d - sum(exps)
        if 0 <= last <= f[-1]:
            out.add(Monomial(exps + (last,)))
    return frozenset(out)


def level(m) -> int:
    """The ``z``-degree."""
    _require_three_vars(m)
    return m[2]


def socle_monomials(ideal: MonomialIdeal) -> list:
    """Monomials ``f`` outside ``I`` with ``fx, fy, fz`` in ``I``, canonical order."""
    d = _require_criterion_input(ideal)
    grid = membership_grid(ideal, (d + 1,) * 3)
    socle = (
        ~grid[:d, :d, :d]
        & grid[1:, :d, :d]
        & grid[:d, 1:, :d]
        & grid[:d, :d, 1:]
    )
    return canonical_sorted(Monomial(int(e) for e in f) for f in np.argwhere(socle))


def induces_bad_configuration(ideal: MonomialIdeal, f) -> Verdict:
    """Check the bad-configuration definition for one candidate ``f`` directly."""
    d = _require_criterion_input(ideal)
    witness = _induces(frozenset(ideal.generators), d, Monomial(f))
    if witness is None:
        return Verdict(False)
    return Verdict(True, witness, "bad_configuration")


def _induces(gens: frozenset, d: int, f: Monomial):
    shadow = _shadow(f, d)
    if not shadow or not shadow.isdisjoint(gens):
        return None
    hits = []
    for i in range(3):
        common = _shadow(f.times_var(i), d) & gens
        if not common:
            return None
        hits.append(min(common, key=canonical_key))
    return BadConfigWitness(f, shadow, *hits)


def find_bad_configuration(ideal: MonomialIdeal) -> BadConfigWitness | None:
    """Witness for the canonically smallest socle monomial of degree ``>= d``, if any."""
    d = _require_criterion_input(ideal)
    for f in socle_monomials(ideal):
        if f.degree < d:
            continue
        verdict = induces_bad_configuration(ideal, f)
        if not verdict:
            raise RuntimeError(f"socle monomial {f} of degree >= {d} does not induce a bad configuration")
        return verdict.witness
    return None


def scan_bad_configurations(ideal: MonomialIdeal, box: int | None = None) -> list:
    """Every ``f`` in ``[0, box]^3`` inducing a bad configuration, tested pointwise.

    Independent of the socle route; the default box ``[0, d]^3`` is one wider
    than the socle bound so that the bound itself gets exercised.
    """
    d = _require_criterion_input(ideal)
    box = d if box is None else box
    gens = frozenset(ideal.generators)
    # below degree d the shadow is empty, so those f never qualify
    cands = (Monomial(f) for f in itertools.product(range(box + 1), repeat=3) if sum(f) >= d)
    return canonical_sorted(f for f in cands if _induces(gens, d, f) is not None)


def has_linear_resolution_criterion(ideal: MonomialIdeal) -> Verdict:
    """Linear presentation first, then bad configurations.

    On failure ``witness`` is either a disconnected generator-index pair
    (``kind == "disconnected_pair"``) or a ``BadConfigWitness``.
    """
    _require_criterion_input(ideal)
    presented = is_linearly_presented(ideal)
    if not presented:
        return presented
    bad = find_bad_configuration(ideal)
    if bad is not None:
        return Verdict(False, bad, "bad_configuration")
    return Verdict(True)
