"""Exact linear algebra over the integers and over Z_m for composite m."""

from __future__ import annotations

from math import gcd
from typing import Sequence


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def unit_normalizer(a: int, m: int) -> int:
    """A unit ``u`` of Z_m with ``u*a % m == gcd(a, m)``."""
    g = gcd(a, m)
    if g == m:
        return 1
    mp = m // g
    u0 = pow((a // g) % mp, -1, mp) if mp > 1 else 0
    u = u0
    # u0 + t*mp is a unit mod m for some t < m; lifting from Z_mp to Z_m
    while gcd(u, m) != 1:
        u += mp
    return u % m


def bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def howell_reduce(rows: list[list[int]], ncols: int, m: int) -> list[tuple[int, int]]:
    """Bring ``rows`` into Howell-style echelon form over Z_m, in place.

    Only the first ``ncols`` columns are pivoted; trailing columns (an
    augmented right-hand side, say) ride along. Each pivot is normalised to a
    divisor of ``m``, and for every pivot row ``r`` with pivot ``g`` the
    annihilated row ``(m // g) * r`` is appended and reduced further, so that
    rows below a pivot span every combination that vanishes on the earlier
    columns. Returns ``(row, col)`` for each pivot, in order.
    """
    for row in rows:
        for j in range(len(row)):
            row[j] %= m
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b == 0:
                continue
            a = rows[r][c]
            if a == 0:
                rows[r], rows[i] = rows[i], rows[r]
                continue
            g, s, t = ext_gcd(a, b)
            ra, rb = rows[r], rows[i]
            ag, bg = a // g, b // g
            rows[r] = [(s * x + t * y) % m for x, y in zip(ra, rb)]
            rows[i] = [(ag * y - bg * x) % m for x, y in zip(ra, rb)]
        a = rows[r][c]
        if a == 0:
            continue
        u = unit_normalizer(a, m)
        if u != 1:
            rows[r] = [(u * x) % m for x in rows[r]]
        g = rows[r][c]
        if g != 1:
            ann = [((m // g) * x) % m for x in rows[r]]
            if any(ann):
                rows.append(ann)
        pivots.append((r, c))
        r += 1
    return pivots


def solve_mod(a: Sequence[Sequence[int]], b: Sequence[int], m: int) -> list[int] | None:
    """One solution ``x`` of ``a @ x == b (mod m)``, or None if there is none.

    Free columns are set to 0; pivot variables are back-substituted from the
    last pivot upward.
    """
    ncols = len(a[0]) if a else 0
    rows = [list(row) + [bi] for row, bi in zip(a, b)]
    pivots = howell_reduce(rows, ncols, m)
    pivot_rows = {r for r, _ in pivots}
    for i, row in enumerate(rows):
        if i not in pivot_rows and row[ncols] % m:
            return None
    x = [0] * ncols
    for r, c in reversed(pivots):
        row = rows[r]
        rhs = (row[ncols] - sum(row[j] * x[j] for j in range(c + 1, ncols))) % m
        g = row[c]
        if rhs % g:
            return None
        x[c] = (rhs // g) % m
    return x


def matvec_mod(a: Sequence[Sequence[int]], x: Sequence[int], m: int) -> list[int]:
    return [sum(aij * xj for aij, xj in zip(row, x)) % m for row in a]
