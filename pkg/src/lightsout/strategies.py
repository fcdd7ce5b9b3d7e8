"""Constructive winning strategies for the group-labeling game.

Each generator plays its moves through the real game engine while it builds
the sequence, and the final result is checked by replaying the sequence from
the input state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import Graph, GraphError, complete_bipartite, cycle, path
from .group import _two_power, replay, win_sequence_bfs
from .labeling import Labeling, LabelingError


class StrategyError(ValueError):
    """The requested strategy does not apply to this graph or state."""


@dataclass(frozen=True)
class StrategyResult:
    sequence: tuple[int, ...]
    final: Labeling
    certified: bool

    def to_json(self) -> str:
        return json.dumps(
            {"sequence": list(self.sequence), "final": str(self.final), "certified": self.certified}
        )


def certify(g: Graph, s: Labeling, seq: Sequence[int]) -> StrategyResult:
    final = replay(g, s, seq)
    return StrategyResult(tuple(seq), final, final.is_zero())


class _Player:
    """Plays toggles on a state and records them, optionally through an index map.

    ``game`` is ``"group"`` (add the toggled label) or ``"nbd"`` (add 1).
    """

    def __init__(self, g: Graph, s: Labeling, game: str = "group", index=None):
        self.g = g
        self.m = s.m
        self.vals = list(s.values)
        self.game = game
        self.seq: list[int] = []
        # index[i] is the caller's vertex for internal vertex i
        self.index = index or {v: v for v in g.vertices}

    @property
    def s(self) -> Labeling:
        return Labeling._trusted(self.m, tuple(self.vals))

    def label(self, i: int) -> int:
        return self.vals[self.index[i] - 1]

    def play(self, *internal: int) -> None:
        vals, m = self.vals, self.m
        for i in internal:
            v = self.index[i]
            a = vals[v - 1] if self.game == "group" else 1
            for w in self.g.closed_neighborhoods[v]:
                vals[w - 1] = (vals[w - 1] + a) % m
            self.seq.append(v)


def _require(g: Graph, s: Labeling, m: int | None = None) -> None:
    if len(s) != g.n:
        raise LabelingError(f"labeling has {len(s)} values, graph has {g.n} vertices")
    if m is not None and s.m != m:
        raise LabelingError(f"labeling is mod {s.m}, expected mod {m}")


# --- complete bipartite -----------------------------------------------------

def standard_form_bipartite(game: str, n: int, p: int, m: int, s: Labeling) -> list[int]:
    """Toggles that zero the first part and make the second part constant.

    Each second-part vertex is toggled until its own label is 0, then each
    first-part vertex likewise. In the neighbourhood game that costs at most
    ``m - 1`` toggles per vertex; in the Z_{2^k} game each toggle doubles the
    label, so at most ``k``.
    """
    g = complete_bipartite(n, p)
    _require(g, s, m)
    if game == "group" and not _two_power(m):
        raise StrategyError(f"group-game standard form needs m = 2**k, got {m}")
    if game not in ("nbd", "group"):
        raise StrategyError(f"unknown game {game!r}")
    player = _Player(g, s, game)
    for v in list(range(n + 1, n + p + 1)) + list(range(1, n + 1)):
        while player.label(v):
            player.play(v)
    return player.seq


def win_bipartite_z2(s: Labeling, n: int, p: int) -> StrategyResult:
    if n % 2 and p % 2:
        raise StrategyError(f"K_{n},{p} has both parts odd; not Z_2 always-winnable")
    g = complete_bipartite(n, p)
    _require(g, s, 2)
    first, second = range(1, n + 1), range(n + 1, n + p + 1)
    player = _Player(g, s)
    player.play(*standard_form_bipartite("group", n, p, 2, s))
    if player.label(n + 1):
        # second part all 1, first part all 0
        player.play(*second)
        if p % 2:
            # odd p leaves the first part all 1; n is even so this clears it
            player.play(*first)
    return certify(g, s, player.seq)


# --- paths and cycles -------------------------------------------------------

def _clear_tail(player: _Player, n: int, keep: int) -> None:
    # descend on the largest index k with a nonzero label until k <= keep
    while True:
        k = max((i for i in range(1, n + 1) if player.label(i)), default=0)
        if k <= keep:
            return
        if k == n:
            player.play(n)
        elif player.label(k - 1):
            player.play(k - 1)
        else:
            player.play(k, k - 1, k)


def clear_tail_path(s: Labeling) -> list[int]:
    """Toggles on P_n leaving only vertex 1 possibly nonzero (Z_2 game)."""
    g = path(len(s))
    _require(g, s, 2)
    player = _Player(g, s)
    _clear_tail(player, g.n, 1)
    return player.seq


def clear_tail_cycle(s: Labeling) -> list[int]:
    """Toggles on C_n leaving only vertices 1 and 2 possibly nonzero (Z_2 game)."""
    g = cycle(len(s))
    _require(g, s, 2)
    player = _Player(g, s)
    _clear_tail(player, g.n, 2)
    return player.seq


def win_path_z2(s: Labeling) -> StrategyResult:
    n = len(s)
    if n % 3 == 2:
        raise StrategyError(f"P_{n} with n = 2 (mod 3) is not Z_2 always-winnable")
    g = path(n)
    _require(g, s, 2)
    player = _Player(g, s)
    player.play(*clear_tail_path(s))
    if player.label(1):
        # sweep leaves every vertex at 1 except v_n
        player.play(*range(1, n + 1))
        r = n // 3
        if n % 3 == 0:
            player.play(*(3 * t + 1 for t in range(r)))
        else:
            player.play(*(3 * t + 2 for t in range(r)))
    return certify(g, s, player.seq)


def win_cycle_z2(s: Labeling) -> StrategyResult:
    n = len(s)
    if n % 3 == 0:
        raise StrategyError(f"C_{n} with n = 0 (mod 3) is not Z_2 always-winnable")
    g = cycle(n)
    _require(g, s, 2)
    player = _Player(g, s)
    player.play(*clear_tail_cycle(s))
    if player.label(1) and player.label(2):
        player.play(2)
    ones = [i for i in range(1, n + 1) if player.label(i)]
    if ones:
        (start,) = ones
        # rotate so the lone nonzero vertex becomes internal vertex 1
        rotated = _Player(g, player.s, index={i: (start - 1 + i - 1) % n + 1 for i in range(1, n + 1)})
        r = n // 3
        if n % 3 == 1:
            rotated.play(*range(1, n - 1))
            # all labels are 1 except v_{n-2}; cover the rest by disjoint
            # closed neighbourhoods centred at v_3, v_6, ..., v_{3r-3} and v_n
            rotated.play(*(3 * t for t in range(1, r)), n)
        else:
            rotated.play(*range(1, n))
            rotated.play(*(3 * t + 2 for t in range(r)))
        player.seq.extend(rotated.seq)
    return certify(g, s, player.seq)


# --- lifting Z_2 strategies to Z_{2^k} --------------------------------------

Z2Solver = Callable[[Labeling], "Sequence[int] | StrategyResult | None"]


def lift_strategy_2k(g: Graph, k: int, s: Labeling, z2_solver: Z2Solver) -> StrategyResult:
    """Win the Z_{2^k} game on ``g`` using a Z_2 solver stage by stage.

    Before stage ``j`` every label is divisible by ``2**j``; the game on the
    quotients behaves like the Z_{2^(k-j)} game, whose parity game is the
    Z_2 game on bit ``j``. Solving that bit and replaying the moves here
    makes every label divisible by ``2**(j+1)``.
    """
    m = 1 << k
    if k < 1:
        raise StrategyError("k must be >= 1")
    _require(g, s, m)
    cur = s
    seq: list[int] = []
    for j in range(k):
        bits = Labeling(2, tuple((x >> j) & 1 for x in cur.values))
        moves = z2_solver(bits)
        if isinstance(moves, StrategyResult):
            moves = moves.sequence if moves.certified else None
        if moves is None:
            raise StrategyError(f"Z_2 solver failed on bit {j} projection {bits}")
        cur = replay(g, cur, moves)
        seq.extend(moves)
    return certify(g, s, seq)


def bfs_z2_solver(g: Graph, state_cap: int | None = None) -> Z2Solver:
    return lambda bits: win_sequence_bfs(g, 2, bits, state_cap)


def family_z2_solver(family: str, *params: int) -> Z2Solver:
    """Z_2 strategy for ``path``/``cycle``/``kbip`` families, checked up front."""
    if family == "path":
        (n,) = params
        if n % 3 == 2:
            raise StrategyError(f"P_{n} is not Z_2 always-winnable")
        return win_path_z2
    if family == "cycle":
        (n,) = params
        if n % 3 == 0:
            raise StrategyError(f"C_{n} is not Z_2 always-winnable")
        return win_cycle_z2
    if family == "kbip":
        n, p = params
        if n % 2 and p % 2:
            raise StrategyError(f"K_{n},{p} is not Z_2 always-winnable")
        return lambda bits: win_bipartite_z2(bits, n, p)
    raise GraphError(f"no family strategy for {family!r}")
