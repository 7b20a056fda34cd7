"""Command-line front end.

Exit status: 0 when every check passes, 1 when a counterexample (or a failed
verification) is found, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .edge_game import EdgeGameSolver, LineGraphEdgeSolver, initial_edge_state
from .game import GameSolver, Player, initial_state
from .graph import Graph, GraphError, diameter, is_connected, mask_of, min_degree
from .graph6 import encode_graph6, parse_graph6
from .harness.figure1 import builtin_instances, verify_figure1
from .harness.sweep import CHECKS, SweepConfig, SweepError, run_sweep, write_report
from .recognizers import (
    UNKNOWN,
    Pattern,
    find_edge_dominating_circuit,
    find_edge_dominating_trail,
    forbidden_subgraph_free,
    is_claw_free,
    is_cubic,
    is_hamiltonian,
    is_traceable,
)
from .strategies import STALLER_MODELS, HypothesisError, ProfileKind, ProfileMismatch, simulate
from .transforms import TransformError, contract_triangles, inflate

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _emit(payload: dict, out: str | None = None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _graph(text: str) -> Graph:
    return parse_graph6(text.strip())


def _vertex_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _check_range(items: list[int], limit: int, what: str) -> int:
    for x in items:
        if not 0 <= x < limit:
            raise UsageError(f"{what} {x} out of range 0..{limit - 1}")
    return mask_of(items)


def _trail_json(t) -> object:
    if t is UNKNOWN:
        return "unknown"
    if t is None:
        return None
    return {"vertices": list(t.vertices), "closed": t.closed}


# -- subcommands ---------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    pre = _check_range(_vertex_list(args.predominated), g.n, "vertex")
    solver = GameSolver(g, continuation_pruning=True)
    d_start = initial_state(g, Player.DOMINATOR, pre)
    s_start = initial_state(g, Player.STALLER, pre)
    payload = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.m,
        "predominated": sorted(_vertex_list(args.predominated)),
        "gamma_g": solver.state_value(d_start),
        "gamma_g_prime": solver.state_value(s_start),
    }
    if args.moves:
        payload["d_game_line"] = solver.principal_variation(d_start)
        payload["s_game_line"] = solver.principal_variation(s_start)
    _emit(payload)
    return EXIT_OK


def cmd_edge_solve(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    pre = _check_range(_vertex_list(args.predominated), g.m, "edge index")
    direct = EdgeGameSolver(g)
    values = {p: direct.value(pre, p) for p in Player}
    payload = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.m,
        "edges": [list(e) for e in g.edges],
        "predominated": sorted(_vertex_list(args.predominated)),
        "gamma_eg": values[Player.DOMINATOR],
        "gamma_eg_prime": values[Player.STALLER],
    }
    status = EXIT_OK
    if args.cross_check and g.m:
        via = LineGraphEdgeSolver(g)
        agree = all(via.value(pre, p) == values[p] for p in Player)
        payload["line_graph_agrees"] = agree
        status = EXIT_OK if agree else EXIT_COUNTEREXAMPLE
    if args.moves:
        line, s = [], initial_edge_state(g, Player.DOMINATOR, pre)
        while not s.is_over:
            e = direct.optimal_move(s)
            line.append(e)
            s = s.apply(e)
        payload["d_game_line"] = line
    _emit(payload)
    return status


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    payload = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "min_degree": min_degree(g) if g.n else None,
        "diameter": None if g.n == 0 or not is_connected(g) else int(diameter(g)),
        "claw_free": is_claw_free(g),
        "cubic": is_cubic(g),
        "free_of": {p.value: forbidden_subgraph_free(g, p) for p in Pattern},
        "traceable": is_traceable(g),
        "hamiltonian": is_hamiltonian(g),
        "edge_dominating_circuit": _trail_json(find_edge_dominating_circuit(g)),
        "edge_dominating_trail": _trail_json(find_edge_dominating_trail(g)),
        "open_edge_dominating_trail": _trail_json(find_edge_dominating_trail(g, open_only=True)),
    }
    _emit(payload)
    return EXIT_OK


def cmd_strategy_audit(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    start = Player(args.start)
    try:
        report = simulate(g, args.profile, args.staller, seed=args.seed, start=start)
    except (ProfileMismatch, HypothesisError) as exc:
        raise UsageError(str(exc)) from None
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.verdict else EXIT_COUNTEREXAMPLE


def cmd_transform(args: argparse.Namespace) -> int:
    g = _graph(args.graph6)
    try:
        out, tmap = inflate(g) if args.op == "inflate" else contract_triangles(g)
    except TransformError as exc:
        raise UsageError(str(exc)) from None
    _emit(
        {
            "op": args.op,
            "input": encode_graph6(g),
            "graph6": encode_graph6(out),
            "n": out.n,
            "m": out.m,
            "triangles": [list(t) for t in tmap.triangles],
            "links": [[list(k), list(v)] for k, v in sorted(tmap.links.items())],
        }
    )
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        inputs=tuple(args.input or ()),
        gen_n=tuple(args.gen_n or ()),
        filters=tuple(args.filter or ()),
        checks=tuple(args.check or ("conjecture12",)),
        jobs=args.jobs,
        output_format=args.format,
        seed=args.seed,
        staller=args.staller,
        eq_connected=not args.eq_any_connectivity,
        eq_min_degree=args.eq_min_degree,
        eq_min_diameter=args.eq_min_diameter,
    )
    report = run_sweep(cfg)
    text = write_report(report, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        print(json.dumps({"counts": report.counts, "failed": report.failed}), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def cmd_figure1(args: argparse.Namespace) -> int:
    report = verify_figure1(builtin_instances(include_nine=not args.skip_nine))
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domgame", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="game domination numbers of one graph")
    s.add_argument("graph6")
    s.add_argument("--predominated", metavar="V,V,...", help="vertices dominated before play")
    s.add_argument("--moves", action="store_true", help="also print an optimal line of play")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("edge-solve", help="edge game domination numbers of one graph")
    s.add_argument("graph6")
    s.add_argument("--predominated", metavar="E,E,...", help="edge indices dominated before play")
    s.add_argument("--cross-check", action="store_true", help="recompute on the line graph")
    s.add_argument("--moves", action="store_true", help="also print an optimal D-game line")
    s.set_defaults(func=cmd_edge_solve)

    s = sub.add_parser("recognize", help="structural predicates of one graph")
    s.add_argument("graph6")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("strategy-audit", help="simulate a Dominator policy and audit the trace")
    s.add_argument("graph6")
    s.add_argument("--profile", choices=[k.value for k in ProfileKind], required=True)
    s.add_argument("--staller", choices=STALLER_MODELS, default="exact")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--start", choices=[p.value for p in Player], default="D")
    s.add_argument("--out")
    s.set_defaults(func=cmd_strategy_audit)

    s = sub.add_parser("transform", help="triangle inflation or contraction")
    s.add_argument("op", choices=("inflate", "contract"))
    s.add_argument("graph6")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("sweep", help="run checks over many graphs")
    s.add_argument("--input", action="append", metavar="FILE", help="graph6 file (.gz allowed)")
    s.add_argument("--gen-n", action="append", type=int, metavar="N", help="generate all graphs on N <= 7 vertices")
    s.add_argument("--filter", action="append", metavar="F")
    s.add_argument("--check", action="append", choices=CHECKS)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--staller", choices=STALLER_MODELS, default="exact")
    s.add_argument("--eq-any-connectivity", action="store_true", help="equality finder: allow disconnected graphs")
    s.add_argument("--eq-min-degree", type=int, default=2, help="equality finder: minimum degree")
    s.add_argument("--eq-min-diameter", type=int, default=3, help="equality finder: minimum diameter")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("figure1", help="verify the built-in equality-case graphs")
    s.add_argument("--skip-nine", action="store_true", help="only C9 and the two large graphs")
    s.add_argument("--out")
    s.set_defaults(func=cmd_figure1)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, SweepError, GraphError, OSError) as exc:
        print(f"domgame: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
