"""The neighborhood (N, m) lights-out game.

Toggling a vertex adds 1 (mod m) to the vertex and each of its neighbours.
Only the number of times each vertex is toggled matters, so a whole play is
described by a count vector ``c`` and its effect is ``lab + N c (mod m)``.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .graph import Graph
from .labeling import Labeling, LabelingError
from .linalg import bareiss_det, solve_mod


def _check(g: Graph, lab: Labeling) -> None:
    if len(lab) != g.n:
        raise LabelingError(f"labeling has {len(lab)} values, graph has {g.n} vertices")


def neighborhood_matrix(g: Graph) -> list[list[int]]:
    """Closed-neighbourhood 0/1 matrix (adjacency plus identity), row i for vertex i+1."""
    mat = [[0] * g.n for _ in range(g.n)]
    for v in g.vertices:
        for w in g.closed_neighborhood(v):
            mat[v - 1][w - 1] = 1
    return mat


def toggle_nbd(g: Graph, lab: Labeling, v: int) -> Labeling:
    _check(g, lab)
    vals = list(lab.values)
    for w in g.closed_neighborhood(v):
        vals[w - 1] += 1
    return lab.with_values(vals)


def replay_nbd(g: Graph, lab: Labeling, seq: Sequence[int]) -> Labeling:
    for v in seq:
        lab = toggle_nbd(g, lab, v)
    return lab


def apply_counts(g: Graph, m: int, lab: Labeling, counts: Sequence[int]) -> Labeling:
    """Return ``lab + N(g) @ counts`` reduced mod ``m``."""
    _check(g, lab)
    if lab.m != m:
        raise LabelingError(f"labeling is mod {lab.m}, expected mod {m}")
    if len(counts) != g.n:
        raise LabelingError(f"count vector has {len(counts)} entries, graph has {g.n} vertices")
    vals = list(lab.values)
    for v, c in zip(g.vertices, counts):
        if c:
            for w in g.closed_neighborhood(v):
                vals[w - 1] += c
    return lab.with_values(vals)


def counts_to_sequence(counts: Sequence[int]) -> list[int]:
    """Expand a count vector into one ordered toggle sequence."""
    return [v for v, c in enumerate(counts, start=1) for _ in range(c)]


def solve_nbd(g: Graph, m: int, lab: Labeling) -> tuple[int, ...] | None:
    """Counts ``c`` with ``N c == -lab (mod m)``, or None if ``lab`` is not winnable."""
    _check(g, lab)
    if lab.m != m:
        raise LabelingError(f"labeling is mod {lab.m}, expected mod {m}")
    rhs = [(-x) % m for x in lab.values]
    sol = solve_mod(neighborhood_matrix(g), rhs, m)
    return None if sol is None else tuple(sol)


def is_winnable_nbd(g: Graph, m: int, lab: Labeling) -> bool:
    return solve_nbd(g, m, lab) is not None


def nbd_determinant(g: Graph) -> int:
    return bareiss_det(neighborhood_matrix(g))


def is_aw_nbd(g: Graph, m: int) -> bool:
    """Every labeling is winnable iff det N(g) is a unit mod m."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return gcd(nbd_determinant(g), m) == 1


def knp_aw_formula(n: int, p: int, m: int) -> bool:
    return gcd(m, n * p - 1) == 1


def path_aw_n2(n: int) -> bool:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return n % 3 in (0, 1)


def cycle_aw_n2(n: int) -> bool:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return n % 3 in (1, 2)
