"""``lightsout`` command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 state cap exceeded,
3 verification failure (including a census row that contradicts the rule
that Z_2-AW implies (N,2)-AW).
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import sys

from .graph import GraphError, family_of, parse_graph_spec
from .group import StateCapExceeded, _two_power, default_state_cap, is_aw_group, replay, win_sequence_bfs
from .labeling import Labeling, LabelingError, format_sequence
from .nbd import apply_counts, cycle_aw_n2, is_aw_nbd, knp_aw_formula, path_aw_n2, solve_nbd
from .strategies import StrategyError, family_z2_solver, lift_strategy_2k
from .verify import CENSUS_HEADER, SUITES, census

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _state_cap(args) -> int:
    return default_state_cap() if args.state_cap is None else 1 << args.state_cap


def _family_strategy(spec: str, m: int):
    """Z_2 family solver for ``spec`` if it applies at modulus ``m``, else None."""
    fam = family_of(spec)
    if fam is None or not _two_power(m):
        return None
    try:
        return family_z2_solver(fam[0], *fam[1])
    except StrategyError:
        return None


def cmd_solve(args) -> dict:
    g = parse_graph_spec(args.graph)
    m = args.mod
    lab = Labeling.parse(args.labeling, m)
    if len(lab) != g.n:
        raise LabelingError(f"labeling has {len(lab)} values, graph has {g.n} vertices")
    if args.game == "nbd":
        counts = solve_nbd(g, m, lab)
        if counts is None:
            return {"winnable": False, "witness": None, "certified": False, "method": "howell"}
        certified = apply_counts(g, m, lab, counts).is_zero()
        return {"winnable": True, "witness": ",".join(map(str, counts)), "certified": certified, "method": "howell"}
    solver = _family_strategy(args.graph, m)
    if solver is not None:
        res = lift_strategy_2k(g, _two_power(m), lab, solver)
        return {"winnable": True, "witness": format_sequence(res.sequence),
                "certified": res.certified, "method": "strategy"}
    seq = win_sequence_bfs(g, m, lab, _state_cap(args))
    if seq is None:
        return {"winnable": False, "witness": None, "certified": False, "method": "bfs"}
    return {"winnable": True, "witness": format_sequence(seq),
            "certified": replay(g, lab, seq).is_zero(), "method": "bfs"}


def _closed_form(game: str, spec: str, m: int):
    fam = family_of(spec)
    if fam is None:
        return None
    kind, params = fam
    if game == "nbd":
        if kind == "kbip":
            return knp_aw_formula(*params, m)
        if m == 2:
            return path_aw_n2(*params) if kind == "path" else cycle_aw_n2(*params)
        return None
    if not _two_power(m):
        return False
    if kind == "path":
        return params[0] % 3 in (0, 1)
    if kind == "cycle":
        return params[0] % 3 in (1, 2)
    return params[0] % 2 == 0 or params[1] % 2 == 0


def cmd_aw(args) -> dict:
    g = parse_graph_spec(args.graph)
    if args.closed_form:
        aw = _closed_form(args.game, args.graph, args.mod)
        if aw is None:
            raise GraphError(f"no closed form for {args.graph!r} in the {args.game} game at m={args.mod}")
        return {"aw": aw, "method": "closed_form"}
    if args.game == "nbd":
        return {"aw": is_aw_nbd(g, args.mod), "method": "determinant"}
    return {"aw": is_aw_group(g, args.mod, _state_cap(args)), "method": "exhaustive"}


def cmd_verify(args):
    fn = SUITES[args.suite]
    accepted = inspect.signature(fn).parameters
    kwargs = {"state_cap": _state_cap(args)}
    for name in ("n_max", "k_max", "m_max", "trials", "seed"):
        val = getattr(args, name)
        if val is None:
            continue
        if name not in accepted:
            raise ValueError(f"suite {args.suite} does not take --{name.replace('_', '-')}")
        kwargs[name] = val
    return fn(**kwargs)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lightsout", description="Lights-out games on graphs: neighbourhood (N,m) and Z_m group labeling.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, graph=True):
        if graph:
            p.add_argument("--game", choices=("nbd", "group"), required=True)
            p.add_argument("--graph", required=True, help="path:N, cycle:N, kbip:N,P or file:PATH")
            p.add_argument("--mod", type=int, required=True, help="modulus m >= 2")
        p.add_argument("--state-cap", type=int, metavar="BITS",
                       help="allow at most 2**BITS states (default $LIGHTSOUT_STATE_CAP or 24)")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("solve", help="find a winning play for one labeling")
    common(p)
    p.add_argument("--labeling", required=True, help="comma-separated residues, e.g. 1,1,0")

    p = sub.add_parser("aw", help="decide whether every labeling is winnable")
    common(p)
    p.add_argument("--closed-form", action="store_true", help="use the family formula instead of computing")

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--no-timing", action="store_true", help="omit wall time for byte-stable output")
    common(p, graph=False)

    p = sub.add_parser("census", help="compare (N,2)-AW and Z_2-AW over small connected graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    common(p, graph=False)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command != "verify" and args.command != "census" and args.mod < 2:
        print("lightsout: error: --mod must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "solve":
            _write(_dump(cmd_solve(args)), args.out)
            return EXIT_OK
        if args.command == "aw":
            _write(_dump(cmd_aw(args)), args.out)
            return EXIT_OK
        if args.command == "verify":
            report = cmd_verify(args)
            if args.format == "csv":
                buf = io.StringIO()
                w = csv.writer(buf, lineterminator="\n")
                w.writerow(("graph", "m", "expected", "observed", "status", "note"))
                for c in report.cases:
                    w.writerow((c.graph, c.m, c.expected, c.observed, c.status, c.note))
                _write(buf.getvalue(), args.out)
            else:
                _write(_dump(report.to_dict(timing=not args.no_timing)), args.out)
            print(f"{report.suite}: {report.passed} passed, {report.failed} failed, "
                  f"{report.skipped} skipped", file=sys.stderr)
            return EXIT_OK if report.ok else EXIT_VERIFY
        rows = census(args.n_max, args.dedup)
        flagged = sum(r.flag for r in rows)
        violations = [r for r in rows if r.violates_lemma31]
        if args.format == "json":
            doc = {"rows": [dict(zip(CENSUS_HEADER, r.as_tuple())) for r in rows],
                   "total": len(rows), "flagged": flagged, "lemma31_violations": len(violations)}
            _write(_dump(doc), args.out)
        else:
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(CENSUS_HEADER)
            for r in rows:
                g, n, a, b, f = r.as_tuple()
                w.writerow((g, n, str(a).lower(), str(b).lower(), str(f).lower()))
            _write(buf.getvalue(), args.out)
        print(f"census n_max={args.n_max}: {len(rows)} graphs, {flagged} flagged "
              f"((N,2)-AW but not Z_2-AW), {len(violations)} inconsistencies", file=sys.stderr)
        return EXIT_VERIFY if violations else EXIT_OK
    except StateCapExceeded as exc:
        print(f"lightsout: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, LabelingError, StrategyError, ValueError, OSError) as exc:
        print(f"lightsout: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
