"""Simple undirected graphs with 1-indexed vertices.

Vertices are numbered ``1..n``. Edges are stored as ordered pairs ``(u, v)``
with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

MAX_ENUM_N = 7


class GraphError(ValueError):
    """Invalid graph construction or malformed edge-list input."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
        return cls(n, frozenset(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def closed_neighborhoods(self) -> tuple[tuple[int, ...], ...]:
        """Closed neighbourhoods indexed by vertex; entry 0 is unused."""
        nbrs = [{v} for v in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(tuple(sorted(s)) for s in nbrs)

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        """Return ``v`` and all its neighbours, in increasing order."""
        self.check_vertex(v)
        return self.closed_neighborhoods[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w in self.closed_neighborhood(v) if w != v)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise GraphError(f"vertex {v!r} outside 1..{self.n}")

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in self.closed_neighborhoods[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def describe(self) -> str:
        """Edge list as ``1-2;2-3`` (empty string for an edgeless graph)."""
        return ";".join(f"{u}-{v}" for u, v in self.sorted_edges())

    def relabel(self, perm: dict[int, int]) -> "Graph":
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))


@lru_cache(maxsize=256)
def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


@lru_cache(maxsize=256)
def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3 (C_{n} is not a simple graph)")
    return Graph(n, path(n).edges | {(1, n)})


@lru_cache(maxsize=256)
def complete_bipartite(n: int, p: int) -> Graph:
    """K_{n,p}; vertices ``1..n`` form the first part, ``n+1..n+p`` the second."""
    if n < 1 or p < 1:
        raise GraphError("complete bipartite graph needs n, p >= 1")
    return Graph(n + p, frozenset((u, w) for u in range(1, n + 1) for w in range(n + 1, n + p + 1)))


def build_family(family: str, n: int, p: int | None = None) -> Graph:
    if family == "path":
        return path(n)
    if family == "cycle":
        return cycle(n)
    if family in ("complete_bipartite", "kbip"):
        if p is None:
            raise GraphError("complete_bipartite requires p")
        return complete_bipartite(n, p)
    raise GraphError(f"unknown family {family!r}")


def bipartition(n: int, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(range(1, n + 1)), tuple(range(n + 1, n + p + 1))


# --- edge-list I/O ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a vertex count line, then ``u v`` lines.

    Blank lines are ignored and ``#`` starts a comment.
    """
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: malformed line {raw!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 1:
                raise GraphError(f"line {lineno}: expected a positive vertex count, got {raw!r}")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = nums
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"line {lineno}: endpoint out of range 1..{n} in {raw!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphError("empty edge list: missing vertex count")
    return Graph(n, frozenset(edges))


def render_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# --- enumeration -----------------------------------------------------------

def _pairs(n: int) -> list[tuple[int, int]]:
    # colex order: all pairs among the first k vertices precede any pair touching k+1
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def adjacency_code(g: Graph) -> int:
    """Adjacency bit-string as an integer, first pair most significant."""
    code = 0
    for pair in _pairs(g.n):
        code = (code << 1) | (pair in g.edges)
    return code


def canonical_form(g: Graph) -> tuple[int, Graph]:
    """Minimum adjacency code over all vertex permutations, with its graph.

    The search places vertices one position at a time; because pairs are in
    colex order, each placement fixes the next block of bits, so branches whose
    prefix already exceeds the best code are cut.
    """
    n = g.n
    adj = [[False] * (n + 1) for _ in range(n + 1)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    total = n * (n - 1) // 2
    best = [None, None]  # code, order

    def rec(order: list[int], prefix: int, nbits: int, free: list[int]):
        if not free:
            if best[0] is None or prefix < best[0]:
                best[0], best[1] = prefix, list(order)
            return
        for idx, v in enumerate(free):
            code = prefix
            for u in order:
                code = (code << 1) | adj[u][v]
            bits = nbits + len(order)
            if best[0] is not None and code > best[0] >> (total - bits):
                continue
            order.append(v)
            rec(order, code, bits, free[:idx] + free[idx + 1:])
            order.pop()

    rec([], 0, 0, list(range(1, n + 1)))
    code, order = best
    perm = {v: i + 1 for i, v in enumerate(order)}
    return code, g.relabel(perm)


def _graph_from_code(n: int, code: int) -> Graph:
    pairs = _pairs(n)
    total = len(pairs)
    return Graph(n, frozenset(p for k, p in enumerate(pairs) if code >> (total - 1 - k) & 1))


def _all_classes(n: int) -> list[int]:
    """Canonical codes of every graph (connected or not) on ``n`` vertices."""
    codes = {0}
    for k in range(2, n + 1):
        nxt = set()
        for code in codes:
            base = _graph_from_code(k - 1, code)
            for mask in range(1 << (k - 1)):
                extra = {(i + 1, k) for i in range(k - 1) if mask >> i & 1}
                nxt.add(canonical_form(Graph(k, base.edges | extra))[0])
        codes = nxt
    return sorted(codes)


def enumerate_connected_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Yield connected simple graphs on ``n`` vertices.

    Without ``dedup`` every labeled graph is produced, in increasing order of
    its adjacency code. With ``dedup`` one canonical representative per
    isomorphism class is produced, again ordered by code.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    if dedup:
        for code in _all_classes(n):
            g = _graph_from_code(n, code)
            if g.is_connected():
                yield g
        return
    pairs = _pairs(n)
    total = len(pairs)
    for code in range(1 << total):
        g = Graph(n, frozenset(p for k, p in enumerate(pairs) if code >> (total - 1 - k) & 1))
        if g.is_connected():
            yield g


def connected_graphs_upto(n_max: int, dedup: bool = True) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_connected_graphs(n, dedup)


def parse_graph_spec(spec: str) -> Graph:
    """Parse ``path:N``, ``cycle:N``, ``kbip:N,P`` or ``file:PATH``."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise GraphError(f"graph spec {spec!r} must look like KIND:ARGS")
    try:
        if kind == "path":
            return path(int(arg))
        if kind == "cycle":
            return cycle(int(arg))
        if kind == "kbip":
            a, b = arg.split(",")
            return complete_bipartite(int(a), int(b))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad graph spec {spec!r}") from None
    if kind == "file":
        with open(arg) as fh:
            return parse_edge_list(fh.read())
    raise GraphError(f"unknown graph kind {kind!r} in {spec!r}")


def family_of(spec: str) -> tuple[str, tuple[int, ...]] | None:
    """Family name and parameters for a family graph spec, else None."""
    kind, _, arg = spec.partition(":")
    if kind in ("path", "cycle"):
        return kind, (int(arg),)
    if kind == "kbip":
        a, b = arg.split(",")
        return kind, (int(a), int(b))
    return None
