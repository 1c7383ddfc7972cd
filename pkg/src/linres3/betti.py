"""Multigraded Betti numbers of monomial ideals from upper-Koszul complexes.

For a multidegree ``a`` the upper-Koszul complex ``K^a(I)`` is the simplicial
complex on the variables whose faces are the sets ``W`` with ``x^(a - W)``
in ``I``, and

    beta_{i,a}(I) = dim H~_{i-1}(K^a(I); k).

Every multidegree carrying a nonzero Betti number is the lcm of some set of
generators, so it divides the lcm of all generators.  We scan that box.  The
scan is vectorised: membership in ``I`` over the box is one boolean array, and
the face pattern of ``K^a(I)`` at every ``a`` is a row of shifted copies of it.
Distinct rows are few, and each distinct complex is handed to the exact
homology routine once (results are cached across ideals).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb, prod

import numpy as np

from .homology import SimplicialComplex, cached_homology, check_characteristic
from .monomials import MonomialIdeal, contains, membership_grid, monomials_of_degree

MAX_BOX_CELLS = 5_000_000


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers ``{(i, a): rank}``.

    ``subject`` is ``"I"`` for the ideal or ``"S/I"`` for the quotient ring;
    the two are related by ``beta_{i,a}(I) = beta_{i+1,a}(S/I)``.
    """

    num_vars: int
    characteristic: int
    subject: str
    entries: dict = field(default_factory=dict)

    def graded(self) -> dict:
        return dict(self._graded)

    @cached_property
    def _graded(self) -> dict:
        out: Counter = Counter()
        for (i, a), rank in self.entries.items():
            out[(i, sum(a))] += rank
        return dict(sorted(out.items()))

    def total(self, i: int) -> int:
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def regularity(self) -> int:
        return max(j - i for (i, j) in self._graded)

    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def to_quotient(self) -> BettiTable:
        if self.subject == "S/I":
            return self
        entries = {(i + 1, a): r for (i, a), r in self.entries.items()}
        entries[(0, (0,) * self.num_vars)] = 1
        return BettiTable(self.num_vars, self.characteristic, "S/I", entries)

    def to_ideal(self) -> BettiTable:
        if self.subject == "I":
            return self
        entries = {(i - 1, a): r for (i, a), r in self.entries.items() if i > 0}
        return BettiTable(self.num_vars, self.characteristic, "I", entries)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "characteristic": self.characteristic,
            "entries": [
                {"i": i, "multidegree": list(a), "rank": r}
                for (i, a), r in sorted(self.entries.items())
            ],
            "graded": [{"i": i, "j": j, "rank": r} for (i, j), r in self.graded().items()],
            "regularity": self.regularity(),
            "projective_dimension": self.projective_dimension(),
        }


def _subsets(n: int) -> list:
    # subsets as 0/1 vectors, by size then lex, so row[0] is the empty face
    out = []
    for k in range(n + 1):
        for combo in itertools.combinations(range(n), k):
            vec = [0] * n
            for v in combo:
                vec[v] = 1
            out.append((combo, tuple(vec)))
    return out


def _face_rows(ideal: MonomialIdeal):
    n = ideal.num_vars
    top = [max(g[i] for g in ideal.generators) for i in range(n)]
    shape = tuple(t + 1 for t in top)
    if prod(shape) > MAX_BOX_CELLS:
        raise ValueError(f"multidegree box {shape} is too large for the oracle")
    grid = membership_grid(ideal, shape)
    subsets = _subsets(n)
    rows = np.zeros(shape + (len(subsets),), dtype=bool)
    for col, (_, vec) in enumerate(subsets):
        dst = tuple(slice(w, None) for w in vec)
        src = tuple(slice(0, s - w) for s, w in zip(shape, vec))
        rows[dst + (col,)] = grid[src]
    return shape, subsets, rows.reshape(-1, len(subsets))


def upper_koszul_complex(ideal: MonomialIdeal, a) -> SimplicialComplex:
    """Faces ``W`` of the variables with ``x^a / x^W`` in the ideal."""
    a = tuple(a)
    if len(a) != ideal.num_vars or any(e < 0 for e in a):
        raise ValueError(f"bad multidegree {a}")
    faces = set()
    for combo, vec in _subsets(ideal.num_vars):
        if all(e >= w for e, w in zip(a, vec)) and contains(
            ideal, [e - w for e, w in zip(a, vec)]
        ):
            faces.add(combo)
    return SimplicialComplex(ideal.num_vars, frozenset(faces))


def betti_table(ideal: MonomialIdeal, characteristic: int = 0) -> BettiTable:
    """Multigraded Betti numbers of ``I`` over a field of the given characteristic."""
    return betti_tables(ideal, (characteristic,))[0]


def betti_tables(ideal: MonomialIdeal, characteristics) -> list:
    """``betti_table`` for several characteristics, sharing the box scan."""
    chars = [check_characteristic(c) for c in characteristics]
    if ideal.is_zero:
        raise ValueError("the zero ideal has no resolution")
    n = ideal.num_vars
    shape, subsets, rows = _face_rows(ideal)
    nonvoid = np.flatnonzero(rows[:, 0])
    patterns, inverse = np.unique(rows[nonvoid], axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    face_sets = [frozenset(subsets[c][0] for c in np.flatnonzero(p)) for p in patterns]
    tables = []
    for characteristic in chars:
        homology = [cached_homology(n, faces, characteristic) for faces in face_sets]
        entries = {}
        for flat, which in zip(nonvoid.tolist(), inverse.tolist()):
            ranks = homology[which]
            if not any(ranks):
                continue
            a = tuple(int(v) for v in np.unravel_index(flat, shape))
            for k, r in enumerate(ranks):
                # ranks[k] is H~_{k-1}, which gives beta_k
                if r:
                    entries[(k, a)] = r
        tables.append(BettiTable(n, characteristic, "I", entries))
    return tables


def regularity(ideal: MonomialIdeal, characteristic: int = 0) -> int:
    return betti_table(ideal, characteristic).regularity()


def has_linear_resolution_oracle(ideal: MonomialIdeal, characteristic: int = 0) -> bool:
    return regularity(ideal, characteristic) == ideal.degree


def is_linearly_presented_oracle(ideal: MonomialIdeal, characteristic: int = 0) -> bool:
    d = ideal.degree
    graded = betti_table(ideal, characteristic).graded()
    return all(j == d + 1 for (i, j) in graded if i == 1)


def socle_degrees_from_table(table: BettiTable) -> list:
    """Degrees ``j - n`` counted ``beta_{n,j}(S/I)`` times, sorted."""
    n = table.num_vars
    q = table.to_quotient()
    out = []
    for (i, j), r in q.graded().items():
        if i == n:
            out.extend([j - n] * r)
    return sorted(out)


def socle_degrees_from_back_twists(ideal: MonomialIdeal, characteristic: int = 0) -> list:
    return socle_degrees_from_table(betti_table(ideal, characteristic))


def _monomial_array(n: int, max_degree: int) -> np.ndarray:
    return np.array(
        [m for k in range(max_degree + 1) for m in monomials_of_degree(n, k)], dtype=np.int64
    )


_MONOMIAL_CACHE: dict = {}


def standard_monomial_counts(ideal: MonomialIdeal, max_degree: int) -> list:
    """Number of monomials of each degree ``0..max_degree`` outside the ideal."""
    key = (ideal.num_vars, max_degree)
    if key not in _MONOMIAL_CACHE:
        _MONOMIAL_CACHE[key] = _monomial_array(*key)
    mons = _MONOMIAL_CACHE[key]
    gens = np.array(ideal.generators, dtype=np.int64)
    inside = (mons[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
    degrees = mons.sum(axis=1)
    return np.bincount(degrees[~inside], minlength=max_degree + 1).tolist()


def hilbert_series_prefix(table: BettiTable, max_degree: int) -> list:
    """Coefficients of ``sum (-1)^i beta_{i,j}(S/I) t^j / (1-t)^n`` up to ``max_degree``."""
    n = table.num_vars
    numerator: Counter = Counter()
    for (i, j), r in table.to_quotient().graded().items():
        numerator[j] += (-1) ** i * r
    return [
        sum(c * comb(k - j + n - 1, n - 1) for j, c in numerator.items() if j <= k)
        for k in range(max_degree + 1)
    ]


def hilbert_bound(ideal: MonomialIdeal) -> int:
    return 3 * max(ideal.degrees()) + 3


def hilbert_check_table(ideal: MonomialIdeal, table: BettiTable, counts=None) -> bool:
    """Compare against ``counts`` (from ``standard_monomial_counts``) if given, else count now."""
    bound = hilbert_bound(ideal)
    if counts is None:
        counts = standard_monomial_counts(ideal, bound)
    return hilbert_series_prefix(table, bound) == counts


def hilbert_consistency_check(ideal: MonomialIdeal, characteristic: int = 0) -> bool:
    """Betti numbers must reproduce the Hilbert function of ``S/I`` up to degree ``3d + 3``."""
    return hilbert_check_table(ideal, betti_table(ideal, characteristic))

