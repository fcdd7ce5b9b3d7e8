"""Verification suites and the (N,2) vs Z_2 always-winnable census.

Every suite compares a closed-form expectation with what the game engines
observe, case by case, and collects the outcome in a :class:`VerificationReport`.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

from .graph import (
    Graph,
    complete_bipartite,
    connected_graphs_upto,
    cycle,
    enumerate_connected_graphs,
    path,
)
from .group import (
    StateCapExceeded,
    halve_even,
    is_aw_group,
    parity_projection,
    toggle_group,
    winnable_set,
)
from .labeling import Labeling
from .nbd import is_aw_nbd, knp_aw_formula


@dataclass
class CaseRecord:
    graph: str
    m: int
    expected: object
    observed: object
    status: str  # "pass" | "fail" | "skipped"
    note: str = ""


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list[CaseRecord] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.cases)

    @property
    def failed(self) -> int:
        return sum(c.status == "fail" for c in self.cases)

    @property
    def skipped(self) -> int:
        return sum(c.status == "skipped" for c in self.cases)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self, timing: bool = True) -> dict:
        doc = {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "ok": self.ok,
            "cases": [asdict(c) for c in self.cases],
        }
        if timing:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc


def _name(kind: str, *params: int) -> str:
    return f"{kind}:{','.join(map(str, params))}"


def _run(suite: str, params: dict, cases: Iterable[tuple[str, int, Callable[[], object], Callable[[], object]]]):
    report = VerificationReport(suite, params)
    t0 = time.perf_counter()
    for name, m, expected_fn, observed_fn in cases:
        try:
            expected = expected_fn()
            observed = observed_fn()
        except StateCapExceeded as exc:
            report.cases.append(CaseRecord(name, m, None, None, "skipped", str(exc)))
            continue
        status = "pass" if observed == expected else "fail"
        report.cases.append(CaseRecord(name, m, expected, observed, status))
    report.wall_time = time.perf_counter() - t0
    return report


def suite_thm33(n_max: int = 3, m_max: int = 6, state_cap=None) -> VerificationReport:
    """K_{n,p} is (N,m)-AW iff gcd(m, np-1) = 1, formula vs determinant."""
    cases = [
        (_name("kbip", n, p), m,
         lambda n=n, p=p, m=m: knp_aw_formula(n, p, m),
         lambda n=n, p=p, m=m: is_aw_nbd(complete_bipartite(n, p), m))
        for n in range(1, n_max + 1) for p in range(1, n_max + 1) for m in range(2, m_max + 1)
    ]
    return _run("thm33", {"n_max": n_max, "p_max": n_max, "m_max": m_max}, cases)


def suite_thm44_paths(n_max: int = 9, k_max: int = 2, state_cap=None) -> VerificationReport:
    cases = [
        (_name("path", n), 1 << k,
         lambda n=n: n % 3 in (0, 1),
         lambda n=n, k=k: is_aw_group(path(n), 1 << k, state_cap))
        for n in range(1, n_max + 1) for k in range(1, k_max + 1)
    ]
    return _run("thm44_paths", {"n_min": 1, "n_max": n_max, "k_max": k_max}, cases)


def suite_thm44_cycles(n_max: int = 9, k_max: int = 1, state_cap=None) -> VerificationReport:
    cases = [
        (_name("cycle", n), 1 << k,
         lambda n=n: n % 3 in (1, 2),
         lambda n=n, k=k: is_aw_group(cycle(n), 1 << k, state_cap))
        for n in range(3, n_max + 1) for k in range(1, k_max + 1)
    ]
    return _run("thm44_cycles", {"n_min": 3, "n_max": n_max, "k_max": k_max}, cases)


def suite_thm44_bipartite(n_max: int = 6, k_max: int = 1, state_cap=None) -> VerificationReport:
    """``n_max`` bounds n + p."""
    cases = [
        (_name("kbip", n, p), 1 << k,
         lambda n=n, p=p: n % 2 == 0 or p % 2 == 0,
         lambda n=n, p=p, k=k: is_aw_group(complete_bipartite(n, p), 1 << k, state_cap))
        for n in range(1, n_max) for p in range(1, n_max - n + 1) for k in range(1, k_max + 1)
    ]
    return _run("thm44_bipartite", {"sum_max": n_max, "k_max": k_max}, cases)


def suite_thm25(n_max: int = 4, k_max: int = 2, state_cap=None) -> VerificationReport:
    """Z_{2^k}-AW agrees with Z_2-AW on every connected graph up to ``n_max`` vertices."""
    cases = []
    for g in connected_graphs_upto(n_max, dedup=True):
        name = f"n{g.n}:{g.describe()}"
        for k in range(2, k_max + 1):
            cases.append((name, 1 << k,
                          lambda g=g: is_aw_group(g, 2, state_cap),
                          lambda g=g, k=k: is_aw_group(g, 1 << k, state_cap)))
    return _run("thm25", {"n_max": n_max, "k_max": k_max}, cases)


THM21_GRAPHS = {"path:2": path(2), "path:3": path(3), "cycle:3": cycle(3), "kbip:1,2": complete_bipartite(1, 2)}


def _two_part(m: int) -> int:
    return m & -m


def suite_thm21(graphs: dict[str, Graph] | None = None, moduli=(6, 12), state_cap=None) -> VerificationReport:
    """|winnable(g, 2^k d)| == |winnable(g, 2^k)| for odd d."""
    graphs = graphs or THM21_GRAPHS
    cases = [
        (name, m,
         lambda g=g, m=m: len(winnable_set(g, _two_part(m), state_cap)),
         lambda g=g, m=m: len(winnable_set(g, m, state_cap)))
        for name, g in graphs.items() for m in moduli
    ]
    return _run("thm21", {"graphs": list(graphs), "moduli": list(moduli)}, cases)


def _random_trials(trials: int, n_max: int, k_min: int, k_max: int, seed: int, even: bool) -> Iterator[tuple[Graph, int, Labeling, int]]:
    rng = random.Random(seed)
    pools = {n: list(enumerate_connected_graphs(n, dedup=False)) for n in range(1, n_max + 1)}
    for _ in range(trials):
        n = rng.randint(1, n_max)
        g = rng.choice(pools[n])
        k = rng.randint(k_min, k_max)
        m = 1 << k
        if even:
            vals = tuple(2 * rng.randrange(m // 2) for _ in range(n))
        else:
            vals = tuple(rng.randrange(m) for _ in range(n))
        yield g, m, Labeling(m, vals), rng.randint(1, n)


def suite_lemma23(trials: int = 1000, n_max: int = 5, k_max: int = 3, seed: int = 0, state_cap=None) -> VerificationReport:
    """Parity projection commutes with toggling."""
    cases = [
        (f"n{g.n}:{g.describe()}|{s}|v{v}", m,
         lambda g=g, s=s, v=v: str(toggle_group(g, parity_projection(s), v)),
         lambda g=g, s=s, v=v: str(parity_projection(toggle_group(g, s, v))))
        for g, m, s, v in _random_trials(trials, n_max, 1, k_max, seed, even=False)
    ]
    return _run("lemma23", {"trials": trials, "n_max": n_max, "k_max": k_max, "seed": seed}, cases)


def suite_lemma24(trials: int = 1000, n_max: int = 5, k_max: int = 3, seed: int = 0, state_cap=None) -> VerificationReport:
    """Halving an all-even labeling commutes with toggling."""
    cases = [
        (f"n{g.n}:{g.describe()}|{s}|v{v}", m,
         lambda g=g, s=s, v=v: str(toggle_group(g, halve_even(s), v)),
         lambda g=g, s=s, v=v: str(halve_even(toggle_group(g, s, v))))
        for g, m, s, v in _random_trials(trials, n_max, 2, k_max, seed, even=True)
    ]
    return _run("lemma24", {"trials": trials, "n_max": n_max, "k_max": k_max, "seed": seed}, cases)


def suite_lemma31(n_max: int = 5, state_cap=None) -> VerificationReport:
    """Z_2-AW implies (N,2)-AW; expected True means the implication holds."""
    cases = [
        (f"n{g.n}:{g.describe()}", 2,
         lambda: True,
         lambda g=g: (not is_aw_group(g, 2, state_cap)) or is_aw_nbd(g, 2))
        for g in connected_graphs_upto(n_max, dedup=True)
    ]
    return _run("lemma31", {"n_max": n_max}, cases)


SUITES = {
    "thm33": suite_thm33,
    "thm44_paths": suite_thm44_paths,
    "thm44_cycles": suite_thm44_cycles,
    "thm44_bipartite": suite_thm44_bipartite,
    "thm25": suite_thm25,
    "thm21": suite_thm21,
    "lemma23": suite_lemma23,
    "lemma24": suite_lemma24,
    "lemma31": suite_lemma31,
}


# --- census -----------------------------------------------------------------

CENSUS_HEADER = ("graph", "n", "nbd2_aw", "z2_aw", "flag")


@dataclass(frozen=True)
class CensusRow:
    graph: str
    n: int
    nbd2_aw: bool
    z2_aw: bool

    @property
    def flag(self) -> bool:
        """(N,2)-AW but not Z_2-AW."""
        return self.nbd2_aw and not self.z2_aw

    @property
    def violates_lemma31(self) -> bool:
        return self.z2_aw and not self.nbd2_aw

    def as_tuple(self) -> tuple:
        return (self.graph, self.n, self.nbd2_aw, self.z2_aw, self.flag)


def census(n_max: int, dedup: bool = True) -> list[CensusRow]:
    if not 1 <= n_max <= 6:
        raise ValueError(f"census supports 1 <= n_max <= 6, got {n_max}")
    return [
        CensusRow(g.describe(), g.n, is_aw_nbd(g, 2), is_aw_group(g, 2))
        for g in connected_graphs_upto(n_max, dedup)
    ]
