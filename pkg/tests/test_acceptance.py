"""Acceptance criteria, one test per criterion.

Every criterion demands an exact match (no numeric tolerance). Each test
prints a PASS/FAIL line, collected again in the terminal summary.
"""

from itertools import product

from lightsout.graph import Graph, complete_bipartite, cycle, enumerate_connected_graphs, path
from lightsout.group import is_aw_group, replay, winnable_set
from lightsout.labeling import Labeling, all_labelings
from lightsout.nbd import is_aw_nbd, knp_aw_formula, solve_nbd
from lightsout.strategies import family_z2_solver, lift_strategy_2k, win_bipartite_z2, win_cycle_z2, win_path_z2
from lightsout.verify import census, suite_lemma23, suite_lemma24

from oracles import all_simple_graphs, nbd_effect


def _mismatches(cases):
    return [(name, exp, obs) for name, exp, obs in cases if exp != obs]


def test_c01_paths(criterion):
    cases = [(f"P{n} k={k}", n % 3 in (0, 1), is_aw_group(path(n), 2 ** k))
             for n in range(1, 10) for k in (1, 2)]
    bad = _mismatches(cases)
    criterion("C1 P_n Z_{2^k}-AW iff n = 0,1 mod 3 (n<=9, k<=2)", not bad, f"{len(cases)} cases, mismatches={bad}")
    assert not bad


def test_c02_cycles(criterion):
    cases = [(f"C{n} k=1", n % 3 in (1, 2), is_aw_group(cycle(n), 2)) for n in range(3, 10)]
    cases += [(f"C{n} k=2", n % 3 in (1, 2), is_aw_group(cycle(n), 4)) for n in range(3, 6)]
    bad = _mismatches(cases)
    criterion("C2 C_n Z_{2^k}-AW iff n = 1,2 mod 3", not bad, f"{len(cases)} cases, mismatches={bad}")
    assert not bad


def _bip_pairs(total):
    return [(n, p) for n in range(1, total) for p in range(1, total - n + 1)]


def test_c03_bipartite(criterion):
    cases = [(f"K{n},{p} k=1", n % 2 == 0 or p % 2 == 0, is_aw_group(complete_bipartite(n, p), 2))
             for n, p in _bip_pairs(6)]
    cases += [(f"K{n},{p} k=2", n % 2 == 0 or p % 2 == 0, is_aw_group(complete_bipartite(n, p), 4))
              for n, p in _bip_pairs(4)]
    bad = _mismatches(cases)
    criterion("C3 K_{n,p} Z_{2^k}-AW iff n or p even", not bad, f"{len(cases)} cases, mismatches={bad}")
    assert not bad


def _image_aw(g, m):
    # independent route: every count vector's effect on the zero labeling
    zero = (0,) * g.n
    image = {nbd_effect(g.n, g.edges, m, zero, c) for c in product(range(m), repeat=g.n)}
    return len(image) == m ** g.n


def test_c04_thm33(criterion):
    bad = []
    count = 0
    for n in range(1, 5):
        for p in range(1, 5):
            g = complete_bipartite(n, p)
            for m in range(2, 9):
                formula = knp_aw_formula(n, p, m)
                det = is_aw_nbd(g, m)
                count += 1
                if formula != det:
                    bad.append(("det", n, p, m, formula, det))
                if n + p <= 5 and m <= 4:
                    solve_all = all(solve_nbd(g, m, lab) is not None for lab in all_labelings(n + p, m))
                    if not (formula == solve_all == _image_aw(g, m)):
                        bad.append(("exhaustive", n, p, m, formula, solve_all))
    criterion("C4 K_{n,p} (N,m)-AW iff gcd(m,np-1)=1", not bad, f"{count} formula/det cases, mismatches={bad}")
    assert not bad


def _connected_upto(n_max):
    return [g for n in range(1, n_max + 1) for g in enumerate_connected_graphs(n)]


def test_c05_thm25(criterion):
    graphs = _connected_upto(4)
    bad = [g.describe() for g in graphs if is_aw_group(g, 2) != is_aw_group(g, 4)]
    criterion("C5 Z_4-AW == Z_2-AW on connected graphs n<=4", not bad, f"{len(graphs)} labeled graphs, mismatches={bad}")
    assert not bad


def test_c06_thm21(criterion):
    graphs = {"P2": path(2), "P3": path(3), "C3": cycle(3), "K1,2": complete_bipartite(1, 2)}
    rows = []
    for name, g in graphs.items():
        w2, w4, w6, w12 = (len(winnable_set(g, m)) for m in (2, 4, 6, 12))
        rows.append((name, w6 == w2 and w12 == w4, (w2, w6, w4, w12)))
    ok = all(r[1] for r in rows)
    criterion("C6 |W(g,6)|=|W(g,2)|, |W(g,12)|=|W(g,4)|", ok, ", ".join(f"{n}:{c}" for n, _, c in rows))
    assert ok


def test_c07_cor22(criterion):
    graphs = _connected_upto(3)
    bad = [(g.describe(), m) for g in graphs for m in (3, 5, 6) if is_aw_group(g, m)]
    criterion("C7 no connected graph n<=3 is Z_m-AW for m in {3,5,6}", not bad, f"{len(graphs) * 3} cases, violations={bad}")
    assert not bad


def test_c08_commuting_squares(criterion):
    r23 = suite_lemma23(trials=10_000, n_max=5, k_max=3, seed=2023)
    r24 = suite_lemma24(trials=10_000, n_max=5, k_max=3, seed=2024)
    ok = r23.ok and r24.ok and r23.passed == r24.passed == 10_000
    criterion("C8 parity and halving squares commute", ok,
              f"parity {r23.passed}/10000, halving {r24.passed}/10000")
    assert ok


def _sweep(g, m, solve):
    bad = 0
    total = 0
    for s in all_labelings(g.n, m):
        res = solve(s)
        total += 1
        if not (res.certified and res.final == replay(g, s, res.sequence) and res.final.is_zero()):
            bad += 1
    return total, bad


def test_c09_strategy_certification(criterion):
    runs = []
    for n in range(1, 10):
        if n % 3 != 2:
            g = path(n)
            runs.append((f"P{n}/2", _sweep(g, 2, win_path_z2)))
            runs.append((f"P{n}/4", _sweep(g, 4, lambda s, g=g: lift_strategy_2k(g, 2, s, win_path_z2))))
    for n in range(3, 10):
        if n % 3:
            g = cycle(n)
            runs.append((f"C{n}/2", _sweep(g, 2, win_cycle_z2)))
            if n <= 5:
                runs.append((f"C{n}/4", _sweep(g, 4, lambda s, g=g: lift_strategy_2k(g, 2, s, win_cycle_z2))))
    for n, p in _bip_pairs(6):
        if n % 2 == 0 or p % 2 == 0:
            g = complete_bipartite(n, p)
            runs.append((f"K{n},{p}/2", _sweep(g, 2, lambda s, n=n, p=p: win_bipartite_z2(s, n, p))))
            if n + p <= 4:
                solver = family_z2_solver("kbip", n, p)
                runs.append((f"K{n},{p}/4", _sweep(g, 4, lambda s, g=g, f=solver: lift_strategy_2k(g, 2, s, f))))
    states = sum(t for _, (t, _) in runs)
    bad = [(name, b) for name, (_, b) in runs if b]
    criterion("C9 family strategies and lifting certify", not bad, f"{len(runs)} sweeps, {states} states, uncertified={bad}")
    assert not bad


def test_c10_solver_vs_exhaustive(criterion):
    disagreements = 0
    checked = 0
    for n in range(1, 5):
        for edges in all_simple_graphs(n):
            g = Graph(n, edges)
            for m in (2, 3, 4, 6):
                # every reachable effect N c, from all m^n count vectors
                effects = {}
                for c in product(range(m), repeat=n):
                    effects.setdefault(nbd_effect(n, edges, m, (0,) * n, c), c)
                for lab in all_labelings(n, m):
                    target = tuple((-x) % m for x in lab.values)
                    c = solve_nbd(g, m, lab)
                    checked += 1
                    if (c is None) != (target not in effects):
                        disagreements += 1
                    elif c is not None and any(nbd_effect(n, edges, m, lab.values, c)):
                        disagreements += 1
    criterion("C10 solve_nbd agrees with exhaustive search (n<=4, m in 2,3,4,6)", disagreements == 0,
              f"{checked} labelings, disagreements={disagreements}")
    assert disagreements == 0


def test_c11_census(criterion):
    rows = census(5, dedup=True)
    labeled = census(5, dedup=False)
    violations = [r.graph for r in rows + labeled if r.violates_lemma31]
    flagged = sum(r.flag for r in rows)
    flagged_labeled = sum(r.flag for r in labeled)
    criterion("C11 census n<=5: no Z_2-AW graph fails (N,2)-AW", not violations,
              f"{len(rows)} classes ({flagged} flagged), {len(labeled)} labeled ({flagged_labeled} flagged)")
    assert not violations
