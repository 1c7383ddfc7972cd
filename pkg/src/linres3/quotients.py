"""Linear quotient orders: the tree ordering, colon checks and an exact search.

Tree ordering, for an ideal of ``k[x, y, z]`` generated in degree ``d`` and
linearly presented.  A generator's *level* is its ``z``-degree.

* The lowest level is listed left to right, meaning strictly decreasing
  ``x``-degree.
* On each later level, the seed is the generator of largest ``x``-degree that
  is adjacent in the full dual graph ``G_I`` to some generator of the level
  below.  The seed comes first, then the generators with smaller ``x``-degree
  (decreasing), then those with larger ``x``-degree (increasing).

Within a level the ``x``-degree determines the monomial, so there are no ties.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dualgraph import Verdict, bit_adjacency, disconnected_pairs, is_linearly_presented
from .monomials import Monomial, MonomialIdeal, format_monomial, minimalize


class NotLinearlyPresentedError(ValueError):
    pass


class TreeOrderError(RuntimeError):
    """The construction hit a state that linear presentation rules out."""


@dataclass(frozen=True)
class TreeOrder:
    ideal: MonomialIdeal
    order: tuple
    levels: tuple
    seeds: tuple

    @property
    def monomials(self) -> list:
        return [self.ideal.generators[i] for i in self.order]

    def __str__(self) -> str:
        return ", ".join(format_monomial(m) for m in self.monomials)


def tree_order(ideal: MonomialIdeal) -> TreeOrder:
    if ideal.num_vars != 3:
        raise ValueError("the tree ordering is defined in three variables")
    presented = is_linearly_presented(ideal)
    if not presented:
        f, g = presented.witness
        gens = ideal.generators
        raise NotLinearlyPresentedError(
            f"not linearly presented: G_I({format_monomial(gens[f])}, "
            f"{format_monomial(gens[g])}) is disconnected"
        )
    gens = ideal.generators
    adj = bit_adjacency(gens)
    by_level: dict = {}
    for i, g in enumerate(gens):
        by_level.setdefault(g[2], []).append(i)
    lo, hi = min(by_level), max(by_level)
    if sorted(by_level) != list(range(lo, hi + 1)):
        raise TreeOrderError(f"generators are not on consecutive levels: {sorted(by_level)}")

    levels = [tuple(sorted(by_level[lo], key=lambda i: -gens[i][0]))]
    seeds = [levels[0][0]]
    for c in range(lo + 1, hi + 1):
        below = 0
        for i in by_level[c - 1]:
            below |= 1 << i
        joined = [i for i in by_level[c] if adj[i] & below]
        if not joined:
            raise TreeOrderError(f"no generator on level {c} is adjacent to level {c - 1}")
        seed = max(joined, key=lambda i: gens[i][0])
        sx = gens[seed][0]
        left = sorted((i for i in by_level[c] if gens[i][0] < sx), key=lambda i: -gens[i][0])
        right = sorted((i for i in by_level[c] if gens[i][0] > sx), key=lambda i: gens[i][0])
        levels.append((seed, *left, *right))
        seeds.append(seed)
    order = tuple(i for lev in levels for i in lev)
    return TreeOrder(ideal, order, tuple(levels), tuple(seeds))


def colon_generators(prefix, m) -> list:
    """Minimal generators of ``(prefix) : m``, i.e. of ``{u / gcd(u, m)}``."""
    m = Monomial(m)
    cands = {Monomial(max(a - b, 0) for a, b in zip(u, m)) for u in prefix}
    if not cands:
        return []
    return list(minimalize(cands).generators)


def _colon_is_linear(prefix, m) -> bool:
    # (prefix):m is variable-generated iff every u/gcd(u, m) is divisible by a
    # variable that itself appears among them
    quots = [tuple(max(a - b, 0) for a, b in zip(u, m)) for u in prefix]
    linear = {q.index(1) for q in quots if sum(q) == 1}
    return all(any(q[v] for v in linear) for q in quots)


def _validate_order(ideal: MonomialIdeal, order) -> tuple:
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(len(ideal.generators))):
        raise ValueError(f"{order} is not a permutation of the generator indices")
    return order


def has_linear_quotients_in_order(ideal: MonomialIdeal, order) -> Verdict:
    """Check each colon ``(m_1..m_{i-1}) : m_i`` is generated by variables.

    The witness on failure is ``(i, offending_generator)`` with ``i`` 1-based
    into the order.
    """
    order = _validate_order(ideal, order)
    gens = [ideal.generators[i] for i in order]
    for i in range(1, len(gens)):
        for q in colon_generators(gens[:i], gens[i]):
            if q.degree != 1:
                return Verdict(False, (i + 1, q), "nonlinear_colon")
    return Verdict(True)


def prefix_linear_presentation_check(ideal: MonomialIdeal, order) -> Verdict:
    """Every prefix ideal ``(m_1, ..., m_j)`` must be linearly presented.

    Fails with witness ``(j, (a, b))``: the first bad prefix length and a
    disconnected pair of positions in the order (0-based).
    """
    order = _validate_order(ideal, order)
    gens = [ideal.generators[i] for i in order]
    for j in range(2, len(gens) + 1):
        pair = next(iter(disconnected_pairs(gens[:j])), None)
        if pair is not None:
            return Verdict(False, (j, pair), "prefix_not_linearly_presented")
    return Verdict(True)


def newest_pair_witness(ideal: MonomialIdeal, order, j: int):
    """A pair ``(i, j-1)`` of order positions with disconnected restricted graph in ``I_j``."""
    order = _validate_order(ideal, order)
    gens = [ideal.generators[i] for i in order[:j]]
    pairs = ((i, j - 1) for i in range(j - 1))
    return next(iter(disconnected_pairs(gens, pairs)), None)


def find_linear_quotient_order(ideal: MonomialIdeal):
    """Exact depth-first search for a linear quotient order.

    Candidates are tried in canonical generator order.  Whether a generator
    may come next depends only on the *set* already placed, so dead sets are
    memoised and the search visits at most ``2^r`` states.  Returns a tuple of
    generator indices, or ``None`` when no order exists.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal is not a valid input")
    if not ideal.is_equigenerated:
        raise ValueError("the search is for equigenerated ideals")
    gens = ideal.generators
    r = len(gens)
    full = (1 << r) - 1
    dead: set = set()

    def extend(mask: int, prefix: list):
        if mask == full:
            return tuple(prefix)
        if mask in dead:
            return None
        placed = [gens[i] for i in prefix]
        for i in range(r):
            if mask >> i & 1:
                continue
            if prefix and not _colon_is_linear(placed, gens[i]):
                continue
            prefix.append(i)
            found = extend(mask | 1 << i, prefix)
            if found is not None:
                return found
            prefix.pop()
        dead.add(mask)
        return None

    return extend(0, [])
