"""Exact monomial arithmetic and monomial ideals.

Monomials are exponent vectors.  In three variables coordinate 0 is ``x``,
1 is ``y`` and 2 is ``z``.

The canonical order used everywhere in the package is graded-lex with
``x > y > z``: lower degree first, and within one degree the lexicographically
*largest* exponent vector first, so degree 2 reads ``x^2, xy, xz, y^2, yz, z^2``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np


class Monomial(tuple):
    """An immutable exponent vector ``(a_1, ..., a_n)`` with ``a_i >= 0``."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(map(int, exponents))
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        if min(exps) < 0:
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @property
    def num_vars(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def __mul__(self, other):
        _check_same_length(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def times_var(self, i: int) -> Monomial:
        exps = list(self)
        exps[i] += 1
        return Monomial(exps)

    def sort_key(self):
        return canonical_key(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)})"

    def __str__(self) -> str:
        return format_monomial(self)


def canonical_key(m: Sequence[int]):
    return (sum(m), tuple(-e for e in m))


def canonical_sorted(monomials: Iterable[Sequence[int]]) -> list:
    return sorted(monomials, key=canonical_key)


def _check_same_length(a, b):
    if len(a) != len(b):
        raise ValueError(f"monomials live in different rings: {len(a)} vs {len(b)} variables")


def lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check_same_length(a, b)
    return Monomial(max(s, t) for s, t in zip(a, b))


def gcd(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check_same_length(a, b)
    return Monomial(min(s, t) for s, t in zip(a, b))


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    _check_same_length(a, b)
    return all(s <= t for s, t in zip(a, b))


def quotient(a: Sequence[int], b: Sequence[int]) -> Monomial:
    """``a / b``; raises if ``b`` does not divide ``a``."""
    if not divides(b, a):
        raise ValueError(f"{format_monomial(b)} does not divide {format_monomial(a)}")
    return Monomial(s - t for s, t in zip(a, b))


def _minimal_subset(gens: Iterable[Sequence[int]]) -> list:
    # sorting by degree first means a divisor is always seen before its multiples
    result: list = []
    for g in canonical_sorted(set(Monomial(g) for g in gens)):
        if not any(all(s <= t for s, t in zip(h, g)) for h in result):
            result.append(g)
    return canonical_sorted(result)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators ``G(I)``.

    ``generators`` is always minimal and sorted in canonical order, so an
    index into it is a stable name for a generator.  An empty tuple is the
    zero ideal; it can be represented but every criterion-level routine
    rejects it.
    """

    num_vars: int
    generators: tuple
    _degrees: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")
        gens = tuple(Monomial(g) for g in self.generators)
        for g in gens:
            if len(g) != self.num_vars:
                raise ValueError(f"generator {g} does not have {self.num_vars} exponents")
        minimal = tuple(_minimal_subset(gens))
        if len(minimal) != len(gens) or set(minimal) != set(gens):
            raise ValueError("generators are not a minimal generating set; use minimalize()")
        object.__setattr__(self, "generators", minimal)
        object.__setattr__(self, "_degrees", frozenset(sum(g) for g in minimal))

    @classmethod
    def zero(cls, num_vars: int) -> MonomialIdeal:
        return cls(num_vars, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def degrees(self) -> set:
        return set(self._degrees)

    @property
    def is_equigenerated(self) -> bool:
        return len(self._degrees) == 1

    @property
    def degree(self) -> int:
        """The common generator degree ``d``; raises unless equigenerated."""
        degs = self._degrees
        if len(degs) != 1:
            if not degs:
                raise ValueError("the zero ideal has no generator degree")
            raise ValueError(f"ideal is not equigenerated (degrees {sorted(degs)})")
        return next(iter(degs))

    def index(self, m: Sequence[int]) -> int:
        return self.generators.index(Monomial(m))

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.generators) + ")"


def minimalize(gens: Iterable[Sequence[int]], num_vars: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, with redundant generators removed.

    An empty ``gens`` gives the zero ideal, which needs ``num_vars``.
    """
    gens = [Monomial(g) for g in gens]
    if not gens:
        if num_vars is None:
            raise ValueError("num_vars is required for the zero ideal")
        return MonomialIdeal.zero(num_vars)
    n = len(gens[0])
    if num_vars is not None and num_vars != n:
        raise ValueError(f"expected {num_vars} variables, got {n}")
    for g in gens:
        _check_same_length(gens[0], g)
    return MonomialIdeal(n, tuple(_minimal_subset(gens)))


def contains(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != ideal.num_vars:
        raise ValueError(f"monomial {tuple(m)} does not have {ideal.num_vars} exponents")
    return any(all(s <= t for s, t in zip(g, m)) for g in ideal.generators)


def membership_grid(ideal: MonomialIdeal, shape) -> np.ndarray:
    """Boolean array with ``grid[a]`` true iff ``x^a`` lies in the ideal, over the box ``shape``."""
    grid = np.zeros(shape, dtype=bool)
    for g in ideal.generators:
        if all(e < s for e, s in zip(g, shape)):
            grid[tuple(g)] = True
    for axis in range(len(shape)):
        grid = np.logical_or.accumulate(grid, axis=axis)
    return grid


def monomials_of_degree(n: int, d: int) -> list:
    """All ``C(d+n-1, n-1)`` monomials of degree ``d`` in ``n`` variables, canonical order."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    out = []
    # stars and bars; bars chosen lexicographically give exponents in lex-decreasing order
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 1 - prev - 1)
        out.append(Monomial(exps))
    out.sort(key=canonical_key)
    assert len(out) == comb(d + n - 1, n - 1)
    return out


def power_ideal(n: int, d: int) -> MonomialIdeal:
    """``m^d``, the ``d``-th power of the homogeneous maximal ideal."""
    return MonomialIdeal(n, tuple(monomials_of_degree(n, d)))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power exponent must be at least 1")
    if ideal.is_zero:
        raise ValueError("power of the zero ideal")
    current = set(ideal.generators)
    for _ in range(k - 1):
        current = {
            Monomial(a + b for a, b in zip(g, h)) for g in current for h in ideal.generators
        }
        current = set(_minimal_subset(current))
    return MonomialIdeal(ideal.num_vars, tuple(_minimal_subset(current)))


VARS3 = ("x", "y", "z")


def format_monomial(m: Sequence[int]) -> str:
    """``x^2yz`` style for three variables, ``x1^2*x3`` style otherwise; ``1`` for the unit."""
    n = len(m)
    parts = []
    for i, e in enumerate(m):
        if e == 0:
            continue
        name = VARS3[i] if n == 3 else f"x{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    if not parts:
        return "1"
    return "".join(parts) if n == 3 else "*".join(parts)
