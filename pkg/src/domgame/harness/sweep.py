"""Exhaustive sweeps: filters, per-graph checks, certificates and reports."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from ..edge_game import (
    LineGraphEdgeSolver,
    edge_game_value,
    imagination_lockstep,
)
from ..game import GameSolver, Player, ResidualState
from ..graph import (
    Graph,
    GraphError,
    diameter,
    is_connected,
    is_cycle_graph,
    is_cycle_up_to_isolates,
    line_graph,
    min_degree,
)
from ..graph6 import encode_graph6, iter_graph6_lines, parse_graph6
from ..recognizers import (
    UNKNOWN,
    Trail,
    find_edge_dominating_circuit,
    find_edge_dominating_trail,
    is_claw_free,
    is_cubic,
    is_traceable,
)
from ..strategies import simulate
from .generate import generate_all_graphs

CHECKS = (
    "conjecture12",
    "conjecture11",
    "thm31",
    "cor35",
    "thm44",
    "thm48",
    "thm411",
    "thm51",
    "obs41",
    "lockstep",
)

JOBS_ENV = "DOMGAME_JOBS"


class SweepError(Exception):
    """Invalid configuration or unreadable input."""


@dataclass(frozen=True)
class Filter:
    """``connected``, ``mindeg:K``, ``diameter:D``, ``claw-free``, ``cubic``,
    ``max-edges:M``, ``min-edges:M`` or ``line-graph``.  The last one is a
    stage rather than a predicate: it replaces each graph by its line graph."""

    name: str
    arg: int | None = None

    @classmethod
    def parse(cls, text: str) -> Filter:
        name, _, arg = text.partition(":")
        takes_arg = {"mindeg", "diameter", "max-edges", "min-edges"}
        flags = {"connected", "claw-free", "cubic", "line-graph"}
        if name in takes_arg:
            try:
                return cls(name, int(arg))
            except ValueError:
                raise SweepError(f"filter {name!r} needs an integer argument") from None
        if name in flags and not arg:
            return cls(name)
        raise SweepError(f"unknown filter {text!r}")

    def __str__(self) -> str:
        return self.name if self.arg is None else f"{self.name}:{self.arg}"

    def accepts(self, g: Graph) -> bool:
        if self.name == "connected":
            return is_connected(g)
        if self.name == "mindeg":
            return g.n > 0 and min_degree(g) >= self.arg
        if self.name == "diameter":
            return g.n > 0 and diameter(g) >= self.arg
        if self.name == "claw-free":
            return is_claw_free(g)
        if self.name == "cubic":
            return g.n > 0 and is_cubic(g)
        if self.name == "max-edges":
            return g.m <= self.arg
        if self.name == "min-edges":
            return g.m >= self.arg
        return True


@dataclass(frozen=True)
class SweepConfig:
    inputs: tuple[str, ...] = ()
    gen_n: tuple[int, ...] = ()
    filters: tuple[str, ...] = ()
    checks: tuple[str, ...] = ("conjecture12",)
    jobs: int = 1
    output_format: str = "json"
    seed: int = 0
    staller: str = "exact"
    eq_connected: bool = True
    eq_min_degree: int = 2
    eq_min_diameter: int = 3

    def validate(self) -> None:
        if not self.checks:
            raise SweepError("at least one check is required")
        for c in self.checks:
            if c not in CHECKS:
                raise SweepError(f"unknown check {c!r}; expected one of {', '.join(CHECKS)}")
        if not self.inputs and not self.gen_n:
            raise SweepError("no input: give graph6 files or generator orders")
        for n in self.gen_n:
            if not 0 <= n <= 7:
                raise SweepError(f"built-in generation supports n <= 7, got {n}")
        if self.output_format not in ("json", "csv"):
            raise SweepError(f"unknown format {self.output_format!r}")
        if self.staller not in ("exact", "greedy", "random"):
            raise SweepError(f"unknown staller model {self.staller!r}")
        for f in self.filters:
            Filter.parse(f)

    def effective_jobs(self) -> int:
        env = os.environ.get(JOBS_ENV)
        if env:
            try:
                jobs = int(env)
            except ValueError:
                raise SweepError(f"{JOBS_ENV} must be an integer, got {env!r}") from None
        else:
            jobs = self.jobs
        return max(1, jobs)

    def describe(self) -> dict:
        """Configuration as reported; parallelism is left out so reports do not depend on it."""
        d = asdict(self)
        d.pop("jobs")
        d.pop("output_format")
        return d


# -- per-graph evaluation ------------------------------------------------------


@dataclass
class CheckOutcome:
    status: str  # "pass", "fail" or "skip"
    value: int | None = None
    bound: int | None = None
    certificate: dict | None = None


@dataclass
class GraphResult:
    index: int
    graph6: str
    n: int
    m: int
    accepted: bool
    outcomes: dict[str, CheckOutcome] = field(default_factory=dict)
    game_value: int | None = None
    equality: bool = False


def _ceil_half(x: int) -> int:
    return -(-x // 2)


class _Context:
    """Lazily computed quantities shared by the checks on one graph."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._cache: dict[str, object] = {}

    def get(self, key: str, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def solver(self) -> GameSolver:
        return self.get("solver", lambda: GameSolver(self.g, continuation_pruning=True))

    @property
    def gamma(self) -> int:
        return self.get("gamma", lambda: self.solver.value())

    @property
    def gamma_s(self) -> int:
        return self.get("gamma_s", lambda: self.solver.value(0, Player.STALLER))

    @property
    def edge_solver(self) -> LineGraphEdgeSolver:
        return self.get("edge_solver", lambda: LineGraphEdgeSolver(self.g))

    @property
    def edge_gamma(self) -> int:
        return self.get("edge_gamma", lambda: self.edge_solver.value())

    @property
    def claw_free(self) -> bool:
        return self.get("claw_free", lambda: is_claw_free(self.g))

    @property
    def min_degree(self) -> int:
        return self.get("min_degree", lambda: min_degree(self.g) if self.g.n else 0)


def vertex_certificate(check: str, g: Graph, start: Player, value: int, bound: int) -> dict:
    solver = GameSolver(g, continuation_pruning=True)
    pv = solver.principal_variation(ResidualState(g, 0, start))
    return {
        "check": check,
        "game": "vertex",
        "graph6": encode_graph6(g),
        "start": start.value,
        "value": value,
        "bound": bound,
        "moves": pv,
    }


def edge_certificate(check: str, g: Graph, start: Player, value: int, bound: int, **extra) -> dict:
    lg = line_graph(g).graph
    pv = GameSolver(lg, continuation_pruning=True).principal_variation(ResidualState(lg, 0, start))
    cert = {
        "check": check,
        "game": "edge",
        "graph6": encode_graph6(g),
        "start": start.value,
        "value": value,
        "bound": bound,
        "moves": pv,
    }
    cert.update(extra)
    return cert


def _bound_check(check, g, value, bound, start=Player.DOMINATOR, edge=False) -> CheckOutcome:
    if value <= bound:
        return CheckOutcome("pass", value, bound)
    make = edge_certificate if edge else vertex_certificate
    return CheckOutcome("fail", value, bound, make(check, g, start, value, bound))


def _policy_failure(report, check: str) -> dict:
    return {
        "check": check,
        "game": "policy",
        "graph6": encode_graph6(report.graph),
        "audit": report.to_json(),
    }


def check_conjecture12(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.n == 0 or ctx.min_degree < 2:
        return CheckOutcome("skip")
    return _bound_check("conjecture12", g, ctx.gamma, _ceil_half(g.n))


def check_conjecture11(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.n == 0 or not ctx.get("traceable", lambda: is_traceable(g)):
        return CheckOutcome("skip")
    return _bound_check("conjecture11", g, ctx.gamma, _ceil_half(g.n))


def _claw_free_cubic(ctx: _Context) -> bool:
    return ctx.g.n > 0 and is_cubic(ctx.g) and ctx.claw_free


def check_thm31(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if not _claw_free_cubic(ctx):
        return CheckOutcome("skip")
    out = _bound_check("thm31", g, ctx.gamma, g.n // 2)
    if out.status == "pass":
        report = simulate(g, "cubic", cfg.staller, seed=cfg.seed)
        if not report.verdict:
            return CheckOutcome("fail", report.length, report.bound, _policy_failure(report, "thm31"))
    return out


def check_cor35(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if not _claw_free_cubic(ctx):
        return CheckOutcome("skip")
    out = _bound_check("cor35", g, ctx.gamma_s, (g.n - 1) // 2, start=Player.STALLER)
    if out.status == "pass":
        report = simulate(g, "cubic", cfg.staller, seed=cfg.seed, start=Player.STALLER)
        if not report.verdict:
            return CheckOutcome("fail", report.length, report.bound, _policy_failure(report, "cor35"))
    return out


def check_thm44(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.m == 0:
        return CheckOutcome("skip")
    circuit = ctx.get("circuit", lambda: find_edge_dominating_circuit(g))
    if circuit is None or circuit is UNKNOWN:
        return CheckOutcome("skip")
    value = ctx.edge_gamma
    m = g.m
    if is_cycle_up_to_isolates(g) and m % 4 == 1:
        # the ceiling is attained exactly on these cycles
        bound = _ceil_half(m)
        if value != bound:
            return CheckOutcome(
                "fail", value, bound, edge_certificate("thm44", g, Player.DOMINATOR, value, bound)
            )
        out = CheckOutcome("pass", value, bound)
    else:
        out = _bound_check("thm44", g, value, m // 2, edge=True)
    if out.status == "pass":
        report = simulate(g, "edge-circuit", cfg.staller, seed=cfg.seed)
        if not report.verdict:
            return CheckOutcome("fail", report.length, report.bound, _policy_failure(report, "thm44"))
    return out


def check_thm48(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.m == 0:
        return CheckOutcome("skip")
    trail = ctx.get("trail", lambda: find_edge_dominating_trail(g))
    if trail is None or trail is UNKNOWN:
        return CheckOutcome("skip")
    return _bound_check("thm48", g, ctx.edge_gamma, _ceil_half(g.m), edge=True)


def check_thm411(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.m == 0:
        return CheckOutcome("skip")
    lg = line_graph(g).graph
    if not is_traceable(lg):
        return CheckOutcome("skip")
    return _bound_check("thm411", lg, GameSolver(lg, continuation_pruning=True).value(), _ceil_half(g.m))


def check_thm51(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.n == 0 or ctx.min_degree < 2 or not ctx.claw_free:
        return CheckOutcome("skip")
    n = g.n
    value = ctx.gamma
    if is_connected(g) and not (is_cycle_graph(g) and n in (5, 9)):
        bound = 11 * n // 20
    else:
        bound = -(-11 * n // 20)
    out = _bound_check("thm51", g, value, bound)
    if out.status == "pass" and is_cycle_graph(g) and n in (5, 9) and value != bound:
        return CheckOutcome("fail", value, bound, vertex_certificate("thm51", g, Player.DOMINATOR, value, bound))
    if out.status == "pass":
        report = simulate(g, "clawfree2", cfg.staller, seed=cfg.seed)
        if not report.verdict:
            return CheckOutcome("fail", report.length, report.bound, _policy_failure(report, "thm51"))
    return out


def check_obs41(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.m == 0:
        return CheckOutcome("skip")
    lg = line_graph(g).graph
    for start in (Player.DOMINATOR, Player.STALLER):
        direct = edge_game_value(g, start)
        via = GameSolver(lg).value(0, start)
        if direct != via:
            return CheckOutcome(
                "fail",
                direct,
                via,
                {
                    "check": "obs41",
                    "game": "edge",
                    "graph6": encode_graph6(g),
                    "start": start.value,
                    "value": direct,
                    "bound": via,
                    "moves": [],
                },
            )
    return CheckOutcome("pass", direct, via)


def check_lockstep(ctx: _Context, cfg: SweepConfig) -> CheckOutcome:
    g = ctx.g
    if g.m == 0:
        return CheckOutcome("skip")
    trail = ctx.get("open_trail", lambda: find_edge_dominating_trail(g, open_only=True))
    if trail is None or trail is UNKNOWN:
        return CheckOutcome("skip")
    rep = imagination_lockstep(g, trail)
    if rep.verdict:
        return CheckOutcome("pass", rep.length, rep.value_augmented)
    return CheckOutcome(
        "fail",
        rep.length,
        rep.value_augmented,
        {
            "check": "lockstep",
            "game": "lockstep",
            "graph6": encode_graph6(g),
            "trail": list(trail.vertices),
            "value": rep.value_graph,
            "length_1": rep.length_1,
            "length_2": rep.length_2,
            "value_augmented": rep.value_augmented,
            "invariant_held": rep.invariant_held,
            "bound": rep.bound,
        },
    )


CHECK_FUNCS = {
    "conjecture12": check_conjecture12,
    "conjecture11": check_conjecture11,
    "thm31": check_thm31,
    "cor35": check_cor35,
    "thm44": check_thm44,
    "thm48": check_thm48,
    "thm411": check_thm411,
    "thm51": check_thm51,
    "obs41": check_obs41,
    "lockstep": check_lockstep,
}


def _passes_equality_filters(g: Graph, cfg: SweepConfig) -> bool:
    if cfg.eq_connected and not is_connected(g):
        return False
    if g.n == 0 or min_degree(g) < cfg.eq_min_degree:
        return False
    return cfg.eq_min_diameter <= 0 or diameter(g) >= cfg.eq_min_diameter


def evaluate(task: tuple[int, str, SweepConfig]) -> GraphResult:
    index, record, cfg = task
    g = parse_graph6(record)
    filters = [Filter.parse(f) for f in cfg.filters]
    for f in filters:
        if f.name == "line-graph":
            if g.m == 0:
                return GraphResult(index, record, g.n, g.m, False)
            g = line_graph(g).graph
    record = encode_graph6(g)
    result = GraphResult(index, record, g.n, g.m, all(f.accepts(g) for f in filters))
    if not result.accepted:
        return result
    ctx = _Context(g)
    for name in cfg.checks:
        result.outcomes[name] = CHECK_FUNCS[name](ctx, cfg)
    if "gamma" in ctx._cache:
        result.game_value = ctx.gamma
        if (
            ("conjecture12" in cfg.checks or "conjecture11" in cfg.checks)
            and ctx.gamma == _ceil_half(g.n)
            and _passes_equality_filters(g, cfg)
        ):
            result.equality = True
    return result


# -- report --------------------------------------------------------------------


@dataclass
class SweepReport:
    config: dict
    graphs_read: int = 0
    filtered_out: int = 0
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    equality_cases: list[dict] = field(default_factory=list)
    max_excess: dict | None = None
    max_ratio: dict | None = None

    @property
    def failed(self) -> int:
        return sum(c["failed"] for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def equality_by_order(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for case in self.equality_cases:
            key = str(case["n"])
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items(), key=lambda kv: int(kv[0])))

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "graphs_read": self.graphs_read,
            "filtered_out": self.filtered_out,
            "checks": self.counts,
            "counterexamples": self.counterexamples,
            "equality_cases": {
                "by_order": self.equality_by_order(),
                "graphs": self.equality_cases,
            },
            "extremal": {"max_excess": self.max_excess, "max_ratio": self.max_ratio},
            "ok": self.ok,
        }

    def dumps(self, fmt: str = "json") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "check", "graph6", "n", "value", "bound", "passed", "failed", "skipped"])
        for name, c in self.counts.items():
            w.writerow(["summary", name, "", "", "", "", c["passed"], c["failed"], c["skipped"]])
        for cert in self.counterexamples:
            w.writerow(
                ["counterexample", cert["check"], cert["graph6"], "", cert.get("value", ""),
                 cert.get("bound", ""), "", "", ""]
            )
        for case in self.equality_cases:
            w.writerow(["equality", "", case["graph6"], case["n"], case["value"], "", "", "", ""])
        return buf.getvalue()


def iter_records(cfg: SweepConfig) -> Iterator[str]:
    """Validated graph6 records from every configured source, in order."""
    for n in cfg.gen_n:
        for g in generate_all_graphs(n):
            yield encode_graph6(g)
    for path in cfg.inputs:
        try:
            for lineno, rec in iter_graph6_lines(path):
                try:
                    parse_graph6(rec)
                except GraphError as exc:
                    raise SweepError(f"{path}:{lineno}: {exc}") from exc
                yield rec
        except OSError as exc:
            raise SweepError(f"cannot read {path}: {exc}") from exc


def run_sweep(cfg: SweepConfig, records: Iterable[str] | None = None) -> SweepReport:
    cfg.validate()
    report = SweepReport(config=cfg.describe())
    for name in cfg.checks:
        report.counts[name] = {"passed": 0, "failed": 0, "skipped": 0}
    source = iter_records(cfg) if records is None else records
    tasks = ((i, rec, cfg) for i, rec in enumerate(source))
    jobs = cfg.effective_jobs()
    if jobs == 1:
        results = map(evaluate, tasks)
        _merge(report, results)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            _merge(report, pool.map(evaluate, tasks, chunksize=64))
    return report


def _merge(report: SweepReport, results: Iterable[GraphResult]) -> None:
    best_excess: tuple[int, int] | None = None
    best_ratio: tuple[Fraction, int] | None = None
    for res in results:
        report.graphs_read += 1
        if not res.accepted:
            report.filtered_out += 1
            continue
        for name, out in res.outcomes.items():
            key = {"pass": "passed", "fail": "failed", "skip": "skipped"}[out.status]
            report.counts[name][key] += 1
            if out.status == "fail":
                report.counterexamples.append(out.certificate)
        if res.equality:
            report.equality_cases.append({"graph6": res.graph6, "n": res.n, "value": res.game_value})
        if res.game_value is not None and res.n > 0:
            excess = 2 * res.game_value - res.n  # twice (gamma - n/2), kept integral
            if best_excess is None or excess > best_excess[0]:
                best_excess = (excess, res.index)
                report.max_excess = {
                    "value": excess / 2,
                    "graph6": res.graph6,
                    "n": res.n,
                    "game_value": res.game_value,
                }
            ratio = Fraction(res.game_value, res.n)
            if best_ratio is None or ratio > best_ratio[0]:
                best_ratio = (ratio, res.index)
                report.max_ratio = {
                    "value": f"{ratio.numerator}/{ratio.denominator}",
                    "graph6": res.graph6,
                    "n": res.n,
                    "game_value": res.game_value,
                }


# -- certificate replay --------------------------------------------------------


def replay_certificate(cert: dict) -> bool:
    """Recompute a counterexample certificate; true when the recorded violation reproduces."""
    g = parse_graph6(cert["graph6"])
    game = cert.get("game")
    if game == "vertex":
        start = Player(cert["start"])
        value = GameSolver(g).value(0, start)
        state = ResidualState(g, 0, start)
        for v in cert["moves"]:
            state = state.apply(v)
        if value != cert["value"] or not state.is_over or len(cert["moves"]) != value:
            return False
        if cert["check"] == "thm51" and is_cycle_graph(g) and g.n in (5, 9):
            return value != cert["bound"]
        return value > cert["bound"]
    if game == "edge":
        start = Player(cert["start"])
        value = edge_game_value(g, start)
        if cert["check"] == "obs41":
            return value != GameSolver(line_graph(g).graph).value(0, start)
        if value != cert["value"]:
            return False
        if cert["check"] == "thm44" and is_cycle_up_to_isolates(g) and g.m % 4 == 1:
            return value != cert["bound"]
        return value > cert["bound"]
    if game == "lockstep":
        verts = tuple(cert["trail"])
        eids = tuple(g.edge_index(a, b) for a, b in zip(verts, verts[1:]))
        return not imagination_lockstep(g, Trail(verts, eids, closed=False)).verdict
    if game == "policy":
        audit = cert["audit"]
        start = Player(audit["start"])
        rep = simulate(g, audit["profile"], audit["staller"], seed=audit["seed"], start=start)
        return not rep.verdict
    raise SweepError(f"unknown certificate kind {game!r}")


def write_report(report: SweepReport, fmt: str, out: str | Path | None) -> str:
    text = report.dumps(fmt)
    if out is not None:
        Path(out).write_text(text)
    return text
