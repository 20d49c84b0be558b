"""Dominance graph of weighted projective lines with positive Euler characteristic.

An arrow M1 -> M2 labelled G means M2 = M1 / G.  Edges come from a fixed rule
table read off the published figure (arrows top-down); nothing is discovered
by searching group actions.  Every edge must satisfy chi(M2) = chi(M1) / |G|.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import __version__
from .core import WeightedCurve, euler_characteristic

Node = tuple[int, ...]  # weights of a genus-0 line; () is P^1
P1: Node = ()


@dataclass(frozen=True, order=True)
class Edge:
    source: Node
    target: Node
    label: str
    order: int


@dataclass
class DominanceGraph:
    nodes: set[Node] = field(default_factory=set)
    edges: set[Edge] = field(default_factory=set)

    def chi(self, node: Node) -> Fraction:
        return euler_characteristic(WeightedCurve(0, node))

    def add_edge(self, source: Node, target: Node, label: str, order: int) -> None:
        self.nodes.update((source, target))
        self.edges.add(Edge(source, target, label, order))

    def successors(self, node: Node) -> list[Edge]:
        return sorted(e for e in self.edges if e.source == node)

    def out_degree(self, node: Node) -> int:
        return sum(1 for e in self.edges if e.source == node)

    def sorted_nodes(self) -> list[Node]:
        return sorted(self.nodes, key=lambda v: (-self.chi(v), v))


def node_name(node: Node) -> str:
    return "P1" if not node else "<" + ",".join(map(str, node)) + ">"


def _line(*weights: int) -> Node:
    return WeightedCurve(0, weights).weights


# Rule table, one entry per arrow family in the figure.
#   P1 -C_m-> <m,m>             top-left arrow to <n,n>; also P1 -C2-> <2,2> on the right
#   P1 -D_m-> <2,2,m>           arrows into <2,2,n>, <2,2,2n>, <2,2,4n> and P1 -D2-> <2,2,2>
#   <m,m> -C2-> <2,2,m>         <n,n> -> <2,2,n>; <2,2> -> <2,2,2> on the right
#   <m,m> -C_a-> <am,am>        the <an,an> ladder under <n,n>
#   <2,2,m> -C2-> <2,2,2m>      the vertical C2 ladder <2,2,n> -> <2,2,2n> -> <2,2,4n>
#   <2,2,2> -C3-> <2,3,3>
#   <2,2,2> -D3-> <2,3,4>       the long curved arrow
#   <2,3,3> -C2-> <2,3,4>
#   P1 -A4-> <2,3,3>, P1 -S4-> <2,3,4>, P1 -A5-> <2,3,5>
_PLATONIC_ARROWS = [
    (P1, (2, 3, 3), "A4", 12),
    (P1, (2, 3, 4), "S4", 24),
    (P1, (2, 3, 5), "A5", 60),
    ((2, 2, 2), (2, 3, 3), "C3", 3),
    ((2, 2, 2), (2, 3, 4), "D3", 6),
    ((2, 3, 3), (2, 3, 4), "C2", 2),
]


def _is_pair(node: Node) -> bool:
    return len(node) == 2 and node[0] == node[1]


def _is_dihedral(node: Node) -> bool:
    return len(node) == 3 and node[0] == node[1] == 2


def _dihedral_param(node: Node) -> int:
    return node[2]


def has_successor(node: Node) -> bool:
    """Whether the rule table gives ``node`` any outgoing arrow (ignoring bounds)."""
    return node == P1 or _is_pair(node) or _is_dihedral(node) or node == (2, 3, 3)


def candidate_nodes(n_max: int, a_max: int) -> set[Node]:
    """P^1, <n,n>, <an,an>, <2,2,n>, <2,2,2n>, <2,2,4n> for 2 <= n <= n_max, 2 <= a <= a_max,
    and the three platonic quotients."""
    nodes: set[Node] = {P1, (2, 3, 3), (2, 3, 4), (2, 3, 5)}
    for n in range(2, n_max + 1):
        nodes.add((n, n))
        for m in (n, 2 * n, 4 * n):
            nodes.add(_line(2, 2, m))
        for a in range(2, a_max + 1):
            nodes.add((a * n, a * n))
    return nodes


def build_positive_dominance(n_max: int = 6, a_max: int = 3) -> DominanceGraph:
    if n_max < 3 or a_max < 1:
        raise ValueError("need n_max >= 3 and a_max >= 1")
    nodes = candidate_nodes(n_max, a_max)
    graph = DominanceGraph(set(nodes))
    for node in nodes:
        if _is_pair(node):
            m = node[0]
            graph.add_edge(P1, node, f"C{m}", m)
            target = _line(2, 2, m)
            if target in nodes:
                graph.add_edge(node, target, "C2", 2)
            for a in range(2, a_max + 1):
                if (a * m, a * m) in nodes:
                    graph.add_edge(node, (a * m, a * m), f"C{a}", a)
        elif _is_dihedral(node):
            m = _dihedral_param(node)
            graph.add_edge(P1, node, f"D{m}", 2 * m)
            if _line(2, 2, 2 * m) in nodes:
                graph.add_edge(node, _line(2, 2, 2 * m), "C2", 2)
    for src, dst, label, order in _PLATONIC_ARROWS:
        graph.add_edge(src, dst, label, order)
    return graph


def terminal_nodes(graph: DominanceGraph) -> set[Node]:
    """Nodes without any arrow out of them in the full (unbounded) figure."""
    return {v for v in graph.nodes if graph.out_degree(v) == 0 and not has_successor(v)}


def frontier_nodes(graph: DominanceGraph) -> set[Node]:
    """Nodes whose outgoing arrows all fall outside the bounds."""
    return {v for v in graph.nodes if graph.out_degree(v) == 0 and has_successor(v)}


def validate(graph: DominanceGraph) -> list[str]:
    """Riemann-Hurwitz and acyclicity violations; empty when the graph is sound."""
    problems = []
    for e in sorted(graph.edges):
        for v in (e.source, e.target):
            if v not in graph.nodes:
                problems.append(f"edge {node_name(e.source)} -> {node_name(e.target)} uses unknown node")
        expected = graph.chi(e.source) / e.order
        got = graph.chi(e.target)
        if got != expected:
            problems.append(
                f"{node_name(e.source)} -{e.label}-> {node_name(e.target)}: "
                f"chi {got} != {graph.chi(e.source)}/{e.order}"
            )
    cycle = _find_cycle(graph)
    if cycle:
        problems.append("cycle: " + " -> ".join(map(node_name, cycle)))
    return problems


def _find_cycle(graph: DominanceGraph) -> Optional[list[Node]]:
    adj: dict[Node, list[Node]] = {v: [] for v in graph.nodes}
    for e in graph.edges:
        adj.setdefault(e.source, []).append(e.target)
    state: dict[Node, int] = {}
    stack: list[Node] = []

    def visit(v: Node) -> Optional[list[Node]]:
        state[v] = 1
        stack.append(v)
        for w in sorted(adj.get(v, ())):
            if state.get(w) == 1:
                return stack[stack.index(w):] + [w]
            if w not in state:
                found = visit(w)
                if found:
                    return found
        stack.pop()
        state[v] = 2
        return None

    for v in sorted(adj):
        if v not in state:
            found = visit(v)
            if found:
                return found
    return None


def emit_dot(graph: DominanceGraph) -> str:
    """Deterministic DOT text; nodes by decreasing chi, then weights."""
    order = graph.sorted_nodes()
    rank = {v: i for i, v in enumerate(order)}
    lines = ["digraph dominance {"]
    for v in order:
        lines.append(f'  "{node_name(v)}" [label="{node_name(v)}\\nchi={graph.chi(v)}"];')
    for e in sorted(graph.edges, key=lambda e: (rank[e.source], rank[e.target], e.label)):
        lines.append(
            f'  "{node_name(e.source)}" -> "{node_name(e.target)}" [label="G={e.label},|G|={e.order}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(graph: DominanceGraph) -> dict:
    order = graph.sorted_nodes()
    return {
        "format": "wpcurves.dominance",
        "version": 1,
        "tool_version": __version__,
        "nodes": [{"weights": list(v), "name": node_name(v), "chi": str(graph.chi(v))} for v in order],
        "adjacency": {
            node_name(v): [
                {"target": node_name(e.target), "group": e.label, "order": e.order}
                for e in sorted(graph.successors(v), key=lambda e: (-graph.chi(e.target), e.target))
            ]
            for v in order
        },
    }


def to_json(graph: DominanceGraph, indent: int | None = 2) -> str:
    return json.dumps(to_dict(graph), indent=indent)
