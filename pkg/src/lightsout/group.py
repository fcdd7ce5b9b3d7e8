"""The Z_m group-labeling lights-out game.

Toggling ``v`` adds the current label of ``v`` to every label in its closed
neighbourhood, so ``v`` itself doubles. Unlike the neighbourhood game the
order of toggles matters, and winnability is decided here by exhaustive
reachability over all ``m**n`` states.
"""

from __future__ import annotations

import json
import os
from collections import deque
from typing import Sequence

import numpy as np

from .graph import Graph
from .labeling import Labeling, LabelingError

DEFAULT_STATE_CAP_BITS = 24
ENV_STATE_CAP = "LIGHTSOUT_STATE_CAP"

# successor tables are cached only while n * m**n stays below this
_SUCC_CACHE_LIMIT = 1 << 26


class StateCapExceeded(RuntimeError):
    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f"state space needs {required} states, cap is {cap}")


def default_state_cap() -> int:
    """Cap on ``m**n``: ``2**bits`` with bits from $LIGHTSOUT_STATE_CAP (default 24)."""
    bits = os.environ.get(ENV_STATE_CAP)
    return 1 << (int(bits) if bits else DEFAULT_STATE_CAP_BITS)


def _check(g: Graph, s: Labeling) -> None:
    if len(s) != g.n:
        raise LabelingError(f"labeling has {len(s)} values, graph has {g.n} vertices")


def toggle_group(g: Graph, s: Labeling, v: int) -> Labeling:
    return replay(g, s, (v,))


def replay(g: Graph, s: Labeling, seq: Sequence[int]) -> Labeling:
    _check(g, s)
    m = s.m
    vals = list(s.values)
    for v in seq:
        g.check_vertex(v)
        a = vals[v - 1]
        if a:
            for w in g.closed_neighborhoods[v]:
                vals[w - 1] = (vals[w - 1] + a) % m
    return Labeling._trusted(m, tuple(vals))


def _two_power(m: int) -> int:
    k = m.bit_length() - 1
    if m < 2 or m != 1 << k:
        return 0
    return k


def parity_projection(s: Labeling) -> Labeling:
    if not _two_power(s.m):
        raise LabelingError(f"parity projection needs a power-of-two modulus, got {s.m}")
    return Labeling(2, tuple(x & 1 for x in s.values))


def halve_even(s: Labeling) -> Labeling:
    k = _two_power(s.m)
    if k < 2:
        raise LabelingError(f"halving needs modulus 2**k with k >= 2, got {s.m}")
    if any(x & 1 for x in s.values):
        raise LabelingError(f"cannot halve a labeling with odd values: {s}")
    return Labeling(s.m // 2, tuple(x // 2 for x in s.values))


def _check_cap(n: int, m: int, cap: int | None) -> int:
    cap = default_state_cap() if cap is None else cap
    size = m ** n
    if size > cap:
        raise StateCapExceeded(size, cap)
    return size


class WinnableSet:
    """All winnable states of the Z_m game on ``g``, as a flat boolean array.

    State ``s`` is stored at index ``Labeling.encode(s)``. Membership is
    found by breadth-first search backwards from the zero labeling: a state
    joins the set once one of its moves lands on the current frontier. Moves
    that leave a state unchanged (toggling a 0 label) are never productive
    and drop out of the frontier test automatically.
    """

    def __init__(self, g: Graph, m: int, member: np.ndarray):
        self.graph = g
        self.m = m
        self.member = member

    @classmethod
    def build(cls, g: Graph, m: int, state_cap: int | None = None) -> "WinnableSet":
        size = _check_cap(g.n, m, state_cap)
        states = np.arange(size, dtype=np.int64)
        place = [m ** i for i in range(g.n)]
        digits = [(states // place[i]) % m for i in range(g.n)]
        cache = g.n * size <= _SUCC_CACHE_LIMIT

        def successors(v: int) -> np.ndarray:
            dv = digits[v - 1]
            out = states.copy()
            for w in g.closed_neighborhood(v):
                dw = digits[w - 1]
                out += ((dw + dv) % m - dw) * place[w - 1]
            return out

        succ = [successors(v) for v in g.vertices] if cache else None
        member = np.zeros(size, dtype=bool)
        member[0] = True
        frontier = member.copy()
        while True:
            new = np.zeros(size, dtype=bool)
            for v in g.vertices:
                table = succ[v - 1] if cache else successors(v)
                new |= frontier[table]
            new &= ~member
            if not new.any():
                break
            member |= new
            frontier = new
        return cls(g, m, member)

    def __contains__(self, s: Labeling) -> bool:
        _check(self.graph, s)
        if s.m != self.m:
            raise LabelingError(f"labeling is mod {s.m}, set is mod {self.m}")
        return bool(self.member[s.encode()])

    def __len__(self) -> int:
        return int(self.member.sum())

    @property
    def size(self) -> int:
        return self.member.size

    def is_full(self) -> bool:
        return bool(self.member.all())

    def states(self):
        """Winnable states in base-m numeric order."""
        for code in np.flatnonzero(self.member):
            yield Labeling.decode(int(code), self.graph.n, self.m)

    def to_json(self) -> str:
        """JSON header plus hex bitmap; bit ``i`` (LSB-first per byte) is state ``i``."""
        bits = np.packbits(self.member, bitorder="little")
        doc = {
            "n": self.graph.n,
            "m": self.m,
            "encoding": "base-m, vertex 1 least significant; bitmap LSB-first per byte",
            "count": len(self),
            "bitmap": bits.tobytes().hex(),
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, g: Graph, text: str) -> "WinnableSet":
        doc = json.loads(text)
        if doc["n"] != g.n:
            raise ValueError(f"bitmap is for n={doc['n']}, graph has n={g.n}")
        m = doc["m"]
        raw = np.frombuffer(bytes.fromhex(doc["bitmap"]), dtype=np.uint8)
        member = np.unpackbits(raw, bitorder="little", count=m ** g.n).astype(bool)
        ws = cls(g, m, member)
        if len(ws) != doc["count"]:
            raise ValueError("bitmap count does not match header")
        return ws


def winnable_set(g: Graph, m: int, state_cap: int | None = None) -> WinnableSet:
    return WinnableSet.build(g, m, state_cap)


def is_winnable_group(g: Graph, m: int, s: Labeling, state_cap: int | None = None) -> bool:
    return s in winnable_set(g, m, state_cap)


def is_aw_group(g: Graph, m: int, state_cap: int | None = None) -> bool:
    return winnable_set(g, m, state_cap).is_full()


def win_sequence_bfs(g: Graph, m: int, s: Labeling, state_cap: int | None = None) -> list[int] | None:
    """Shortest toggle sequence from ``s`` to zero, or None.

    Vertices are expanded in increasing order, so among shortest sequences
    the first one found in that order is returned.
    """
    _check(g, s)
    _check_cap(g.n, m, state_cap)
    if s.m != m:
        raise LabelingError(f"labeling is mod {s.m}, expected mod {m}")
    start = s.values
    if not any(start):
        return []
    parent = {start: None}
    queue = deque([start])
    nbhd = [g.closed_neighborhood(v) for v in g.vertices]
    while queue:
        cur = queue.popleft()
        for v in g.vertices:
            a = cur[v - 1]
            if a == 0:
                continue
            nxt = list(cur)
            for w in nbhd[v - 1]:
                nxt[w - 1] = (nxt[w - 1] + a) % m
            nxt = tuple(nxt)
            if nxt in parent:
                continue
            parent[nxt] = (cur, v)
            if not any(nxt):
                seq = []
                node = nxt
                while parent[node] is not None:
                    node, u = parent[node]
                    seq.append(u)
                return seq[::-1]
            queue.append(nxt)
    return None
