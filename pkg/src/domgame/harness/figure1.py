"""Built-in equality-case graphs and their verification.

The two large graphs are non-traceable graphs whose game domination number
reaches ``n/2``:

* 24 vertices: a 10-cycle ``0..9``; from vertex 7 a path ``7-10-11-12`` with a
  5-cycle on ``12..16``; from vertex 10 a path ``10-17-18-19`` with a 5-cycle on
  ``19..23``.
* 30 vertices: two 7-vertex paths ``0..6`` and ``7..13`` joined by the edge
  ``3-10``, and a 5-cycle hanging through each of the four path ends.

The five 9-vertex graphs are the connected, minimum degree 2, diameter >= 3
equality cases on nine vertices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..game import GameSolver
from ..graph import Graph, cycle_graph
from ..graph6 import encode_graph6
from ..recognizers import is_traceable


def graph_24() -> Graph:
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(7, 10), (10, 11), (11, 12)]
    edges += [(12, 13), (13, 14), (14, 15), (15, 16), (16, 12)]
    edges += [(10, 17), (17, 18), (18, 19)]
    edges += [(19, 20), (20, 21), (21, 22), (22, 23), (23, 19)]
    return Graph.from_edges(24, edges)


def graph_30() -> Graph:
    edges = [(i, i + 1) for i in range(6)] + [(i, i + 1) for i in range(7, 13)] + [(3, 10)]
    for a, b in ((0, 14), (6, 18), (7, 22), (13, 26)):
        edges += [(a, b), (b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b + 3, a)]
    return Graph.from_edges(30, edges)


def nine_vertex_equality_cases() -> list[Graph]:
    c8 = [(i, (i + 1) % 8) for i in range(8)]
    c9 = [(i, (i + 1) % 9) for i in range(9)]
    return [
        cycle_graph(9),
        Graph.from_edges(9, c8 + [(1, 8), (5, 8)]),
        Graph.from_edges(9, c9 + [(2, 6)]),
        Graph.from_edges(9, c9 + [(1, 5), (2, 7)]),
        Graph.from_edges(
            9,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 2), (1, 8), (8, 7),
             (7, 4), (6, 7)],
        ),
    ]


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    expected_value: int
    expected_traceable: bool


def builtin_instances(include_nine: bool = True) -> list[Instance]:
    out = [
        Instance("C9", cycle_graph(9), 5, True),
        Instance("graph24", graph_24(), 12, False),
        Instance("graph30", graph_30(), 15, False),
    ]
    if include_nine:
        for i, g in enumerate(nine_vertex_equality_cases()[1:], 2):
            out.append(Instance(f"n9_case{i}", g, 5, True))
    return out


@dataclass
class InstanceResult:
    name: str
    graph6: str
    n: int
    value: int
    expected_value: int
    traceable: bool
    expected_traceable: bool
    seconds: float

    @property
    def passed(self) -> bool:
        return self.value == self.expected_value and self.traceable == self.expected_traceable

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "graph6": self.graph6,
            "n": self.n,
            "value": self.value,
            "expected_value": self.expected_value,
            "traceable": self.traceable,
            "expected_traceable": self.expected_traceable,
            "passed": self.passed,
        }


@dataclass
class Figure1Report:
    results: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {"passed": self.passed, "instances": [r.to_json() for r in self.results]}


def verify_figure1(instances: list[Instance] | None = None) -> Figure1Report:
    report = Figure1Report()
    for inst in instances if instances is not None else builtin_instances():
        t0 = time.perf_counter()
        value = GameSolver(inst.graph, continuation_pruning=True).value()
        traceable = is_traceable(inst.graph)
        report.results.append(
            InstanceResult(
                inst.name,
                encode_graph6(inst.graph),
                inst.graph.n,
                value,
                inst.expected_value,
                traceable,
                inst.expected_traceable,
                time.perf_counter() - t0,
            )
        )
    return report
