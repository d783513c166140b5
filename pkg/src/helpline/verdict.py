"""Per-edge Prime Graph Question verdicts for a character table."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .help_engine import LayerCache, check_order, explain_infeasibility
from .tables import CharacterTable, PrimeGraph, prime_graph, spectrum
from .tree_criterion import NO_PQ_UNITS, BrauerLine, apply_criterion, line_provider

EDGE_EXISTS = "edge_exists"
EXCLUDED_BY_CRITERION = "excluded_by_criterion"
EXCLUDED_BY_HELP = "excluded_by_help"
UNDECIDED = "undecided"

PQ_AFFIRMED = "PQ_affirmed"
PQ_OPEN_EDGES = "PQ_open_edges"


@dataclass
class EdgeVerdict:
    pair: tuple[int, int]
    in_group: bool
    unit_status: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "inGroup": self.in_group,
            "unitStatus": self.unit_status,
            "witness": self.witness,
        }


@dataclass
class PQReport:
    group_name: str
    graph: PrimeGraph
    edges: list[EdgeVerdict]

    @property
    def overall(self) -> str:
        open_edges = [e for e in self.edges if not e.in_group and not e.unit_status.startswith("excluded")]
        return PQ_OPEN_EDGES if open_edges else PQ_AFFIRMED

    def to_json(self) -> dict:
        return {
            "group": self.group_name,
            "primeGraph": {
                "vertices": sorted(self.graph.vertices),
                "edges": [list(e) for e in sorted(self.graph.edges)],
            },
            "edges": [e.to_json() for e in self.edges],
            "overall": self.overall,
        }

    def to_text(self) -> str:
        lines = [f"group: {self.group_name}", f"prime graph: {self.graph}"]
        for e in self.edges:
            p, q = e.pair
            line = f"  ({p},{q}): {e.unit_status}"
            if e.unit_status == EXCLUDED_BY_CRITERION:
                line += f" via p={e.witness['criterion']['p']}"
            elif e.unit_status == EXCLUDED_BY_HELP:
                line += f" [order {p * q}, {e.witness['certificate']}]"
            elif e.unit_status == UNDECIDED:
                line += f" [{len(e.witness.get('surviving', []))} surviving tuple(s) for order {p * q}]"
            lines.append(line)
        lines.append(f"overall: {self.overall}")
        return "\n".join(lines)


def _scenario_json(table: CharacterTable, scenario) -> dict:
    return {f"u^{d}": {table.classes[c].name: v for c, v in t} for d, t in sorted(scenario.items())}


def _pa_json(table: CharacterTable, t) -> dict:
    return {table.classes[c].name: v for c, v in t}


def edge_verdict(table: CharacterTable, p: int, q: int, blocks: Sequence[BrauerLine] = (),
                 cache: LayerCache | None = None) -> EdgeVerdict:
    p, q = sorted((p, q))
    pair = (p, q)
    if any(o % (p * q) == 0 for o in spectrum(table)):
        return EdgeVerdict(pair, True, EDGE_EXISTS, {"elementOrder": p * q})

    tried = []
    for r, s in ((p, q), (q, p)):
        for line in blocks:
            if line.prime != r:
                continue
            res = apply_criterion(table, line, s)
            tried.append(res.to_json())
            if res.verdict == NO_PQ_UNITS:
                return EdgeVerdict(pair, False, EXCLUDED_BY_CRITERION, {"criterion": res.to_json()})

    relevant = [l for l in blocks if l.prime in pair]
    extra = line_provider(relevant) if relevant else None
    result = check_order(table, p * q, extra=extra, cache=cache)
    witness = {"order": p * q, "scenarios": len(result.scenarios)}
    if tried:
        witness["criterionAttempts"] = tried
    if result.note:
        witness["note"] = result.note
    if not result.feasible:
        witness["certificate"] = "exhaustive" if result.exhaustive else "partial"
        witness["provenance"] = [
            {
                "scenario": _scenario_json(table, s.scenario),
                "constraints": s.system.provenance_counts(),
                "decisive": explain_infeasibility(s.system),
                "relaxation": s.solutions.note or "integer box enumerated",
            }
            for s in result.scenarios
        ]
        status = EXCLUDED_BY_HELP if result.exhaustive else UNDECIDED
        return EdgeVerdict(pair, False, status, witness)
    witness["surviving"] = [
        {"scenario": _scenario_json(table, s["scenario"]), "pa": _pa_json(table, s["pa"])}
        for s in result.surviving()
    ]
    return EdgeVerdict(pair, False, UNDECIDED, witness)


def _edge_job(args):
    table, p, q, blocks = args
    return edge_verdict(table, p, q, blocks)


def pq_report(table: CharacterTable, blocks: Sequence[BrauerLine] = (), workers: int = 1) -> PQReport:
    graph = prime_graph(table)
    vs = sorted(graph.vertices)
    pairs = [(p, q) for i, p in enumerate(vs) for q in vs[i + 1:]]
    blocks = list(blocks)
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            edges = list(pool.map(_edge_job, [(table, p, q, blocks) for p, q in pairs]))
    else:
        cache = LayerCache()
        edges = [edge_verdict(table, p, q, blocks, cache) for p, q in pairs]
    return PQReport(table.group_name, graph, edges)
