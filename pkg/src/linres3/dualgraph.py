"""Dual graphs of equigenerated monomial ideals and the linear presentation test.

Vertices of the dual graph are the minimal generators (stored as indices into
``ideal.generators``); two generators are adjacent when their lcm has degree
``d + 1``.  An ideal generated in degree ``d`` is linearly presented exactly
when, for every pair of generators ``f, g``, the induced subgraph on the
generators dividing ``lcm(f, g)`` is connected.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .monomials import MonomialIdeal, format_monomial, lcm, power_ideal


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer that carries a witness when it is ``False``."""

    ok: bool
    witness: object = None
    kind: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DualGraph:
    ideal: MonomialIdeal
    vertices: tuple
    edges: frozenset
    _adj: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def monomial(self, v: int):
        return self.ideal.generators[v]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  v{v} [label="{format_monomial(self.monomial(v))}"];')
        for u, v in sorted(tuple(sorted(e)) for e in self.edges):
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _is_edge(a: Sequence[int], b: Sequence[int]) -> bool:
    # for equal-degree a, b: deg lcm(a, b) = d + 1 iff they differ by one unit move
    return sum(max(s, t) for s, t in zip(a, b)) == sum(a) + 1


def _require_equigenerated(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        raise ValueError("the zero ideal is not a valid input")
    return ideal.degree


def dual_graph(ideal: MonomialIdeal) -> DualGraph:
    _require_equigenerated(ideal)
    gens = ideal.generators
    r = len(gens)
    edges = frozenset(
        frozenset((u, v)) for u in range(r) for v in range(u + 1, r) if _is_edge(gens[u], gens[v])
    )
    return DualGraph(ideal, tuple(range(r)), edges)


def simplex_graph(n: int, d: int) -> DualGraph:
    """The dual graph of ``m^d`` in ``n`` variables."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return dual_graph(power_ideal(n, d))


def restricted_graph(graph: DualGraph, f: int, g: int) -> DualGraph:
    """Induced subgraph on the generators dividing ``lcm(m_f, m_g)``."""
    if f not in graph._adj or g not in graph._adj:
        raise ValueError(f"invalid vertex pair ({f}, {g})")
    top = lcm(graph.monomial(f), graph.monomial(g))
    keep = tuple(
        v for v in graph.vertices if all(s <= t for s, t in zip(graph.monomial(v), top))
    )
    kept = set(keep)
    edges = frozenset(e for e in graph.edges if e <= kept)
    return DualGraph(graph.ideal, keep, edges)


def is_connected(graph: DualGraph) -> bool:
    """Breadth-first search; graphs with at most one vertex count as connected."""
    if len(graph.vertices) <= 1:
        return True
    start = graph.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(graph.vertices)


def bit_adjacency(gens) -> list:
    r = len(gens)
    adj = [0] * r
    for u in range(r):
        for v in range(u + 1, r):
            if _is_edge(gens[u], gens[v]):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def _divisor_mask(gens, top) -> int:
    mask = 0
    for i, h in enumerate(gens):
        if all(s <= t for s, t in zip(h, top)):
            mask |= 1 << i
    return mask


def _reach(adj: list, start: int, mask: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def pair_connected(gens, adj, f: int, g: int) -> bool:
    """Bitmask version of ``is_connected(restricted_graph(G, f, g))``.

    ``gens`` is any list of equal-degree monomials and ``adj`` its bitmask
    adjacency (see ``bit_adjacency``).
    """
    mask = _divisor_mask(gens, [max(s, t) for s, t in zip(gens[f], gens[g])])
    return _reach(adj, f, mask) == mask


def disconnected_pairs(gens, pairs=None):
    """Yield the pairs ``(f, g)``, ``f < g``, whose restricted graph is disconnected."""
    adj = bit_adjacency(gens)
    r = len(gens)
    if pairs is None:
        pairs = ((f, g) for f in range(r) for g in range(f + 1, r))
    for f, g in pairs:
        if not pair_connected(gens, adj, f, g):
            yield (f, g)


def is_linearly_presented(ideal: MonomialIdeal) -> Verdict:
    """Connectivity of every restricted graph ``G_I(f, g)``.

    On failure the witness is the first disconnected pair ``(f, g)`` of
    generator indices, pairs taken in lexicographic order of the canonical
    generator order.
    """
    _require_equigenerated(ideal)
    for pair in disconnected_pairs(ideal.generators):
        return Verdict(False, pair, "disconnected_pair")
    return Verdict(True)
