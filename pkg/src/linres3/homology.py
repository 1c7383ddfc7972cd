"""Simplicial complexes and exact reduced homology ranks.

Ranks are computed with integer fraction-free (Bareiss) elimination in
characteristic 0 and with arithmetic modulo ``p`` otherwise.  No floating
point is involved.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


def check_characteristic(characteristic: int) -> int:
    characteristic = int(characteristic)
    if characteristic != 0 and not is_prime(characteristic):
        raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
    return characteristic


def rank_integer(matrix) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination.

    Every intermediate entry is a minor of the input, so the divisions are
    exact and the entries stay integral.
    """
    m = [list(map(int, row)) for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, rows):
            a = m[r][c]
            row_r, row_p = m[r], m[rank]
            for k in range(c + 1, cols):
                row_r[k] = (p * row_r[k] - a * row_p[k]) // prev
            row_r[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rank_mod_p(matrix, p: int) -> int:
    """Rank over the prime field ``F_p``."""
    m = [[int(v) % p for v in row] for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        row_p = [(v * inv) % p for v in m[rank]]
        m[rank] = row_p
        for r in range(rows):
            if r != rank and m[r][c]:
                a = m[r][c]
                m[r] = [(s - a * t) % p for s, t in zip(m[r], row_p)]
        rank += 1
        if rank == rows:
            break
    return rank


def matrix_rank(matrix, characteristic: int = 0) -> int:
    characteristic = check_characteristic(characteristic)
    if characteristic == 0:
        return rank_integer(matrix)
    return rank_mod_p(matrix, characteristic)


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are sorted vertex tuples; ``()`` is the empty face.

    ``faces == frozenset()`` is the void complex, ``faces == {()}`` the
    irrelevant complex.  The two differ in homology.
    """

    num_vertices: int
    faces: frozenset

    def __post_init__(self):
        faces = frozenset(tuple(sorted(f)) for f in self.faces)
        for f in faces:
            if any(not 0 <= v < self.num_vertices for v in f):
                raise ValueError(f"face {f} uses a vertex outside 0..{self.num_vertices - 1}")
            for k in range(len(f)):
                for sub in itertools.combinations(f, k):
                    if sub not in faces:
                        raise ValueError(f"not downward closed: {f} present, {sub} missing")
        object.__setattr__(self, "faces", faces)

    @classmethod
    def from_facets(cls, num_vertices: int, facets) -> SimplicialComplex:
        faces = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            for k in range(len(facet) + 1):
                faces.update(itertools.combinations(facet, k))
        return cls(num_vertices, frozenset(faces))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_irrelevant(self) -> bool:
        return self.faces == frozenset({()})

    @property
    def dimension(self) -> int:
        """``-1`` for the irrelevant complex; the void complex gets ``-2``."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.faces) - 1

    def faces_of_dim(self, k: int) -> list:
        return sorted(f for f in self.faces if len(f) == k + 1)

    def f_vector(self) -> list:
        """Face counts by dimension, starting at dimension ``-1``."""
        return [len(self.faces_of_dim(k)) for k in range(-1, self.dimension + 1)]

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic ``sum_k (-1)^k f_k`` over ``k >= -1``."""
        return sum((-1) ** (k - 1) * f for k, f in enumerate(self.f_vector()))


def boundary_matrix(complex_: SimplicialComplex, k: int) -> list:
    """Matrix of the boundary map from ``k``-faces to ``(k-1)``-faces.

    Rows index ``(k-1)``-faces and columns ``k``-faces, both sorted; the sign
    of dropping the ``i``-th vertex is ``(-1)^i``.
    """
    rows = complex_.faces_of_dim(k - 1)
    cols = complex_.faces_of_dim(k)
    index = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for i in range(len(face)):
            mat[index[face[:i] + face[i + 1:]]][j] = -1 if i % 2 else 1
    return mat


def reduced_homology_ranks(complex_: SimplicialComplex, characteristic: int = 0) -> dict:
    """``{k: dim H~_k}`` for ``-1 <= k <= dim``; empty dict for the void complex."""
    characteristic = check_characteristic(characteristic)
    if complex_.is_void:
        return {}
    top = complex_.dimension
    sizes = {k: len(complex_.faces_of_dim(k)) for k in range(-1, top + 2)}
    ranks = {k: matrix_rank(boundary_matrix(complex_, k), characteristic) if sizes[k] and sizes[k - 1] else 0
             for k in range(0, top + 2)}
    ranks[-1] = 0
    return {k: sizes[k] - ranks[k] - ranks[k + 1] for k in range(-1, top + 1)}


@lru_cache(maxsize=None)
def cached_homology(num_vertices: int, faces: frozenset, characteristic: int) -> tuple:
    """Reduced homology ranks as a tuple indexed by ``k + 1``."""
    ranks = reduced_homology_ranks(SimplicialComplex(num_vertices, faces), characteristic)
    if not ranks:
        return ()
    return tuple(ranks[k] for k in range(-1, max(ranks) + 1))
