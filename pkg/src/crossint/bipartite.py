"""Exact max-flow and the bipartite MWIS / vertex-cover duality.

All capacities and weights are exact Python integers; nothing here ever
touches floating point.  The minimum-weight vertex cover of a weighted
bipartite graph is computed by a source/sink flow construction whose
minimum cut corresponds one-to-one with an integral cover, and the
maximum-weight independent set is its complement.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotACover, NotAFractionalIndependentSet


@dataclass(frozen=True)
class FlowNetwork:
    """A directed network with exact integer capacities."""

    nodes: tuple
    arcs: tuple  # (u, v, capacity)
    source: object
    sink: object

    def __post_init__(self):
        known = set(self.nodes)
        if self.source not in known or self.sink not in known:
            raise ValueError("source and sink must be listed in nodes")
        for u, v, c in self.arcs:
            if u not in known or v not in known:
                raise ValueError(f"arc ({u!r}, {v!r}) uses an unknown node")
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"capacity of ({u!r}, {v!r}) must be a "
                                 f"nonnegative integer, got {c!r}")


class _Dinic:
    """Level-graph augmenting-path max flow; deterministic for a fixed
    arc insertion order."""

    def __init__(self, num_nodes):
        self.adj = [[] for _ in range(num_nodes)]

    def add_arc(self, u, v, cap):
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def max_flow(self, src, dst):
        flow = 0
        n = len(self.adj)
        while True:
            level = [-1] * n
            level[src] = 0
            queue = deque([src])
            while queue:
                u = queue.popleft()
                for e in self.adj[u]:
                    if e[1] > 0 and level[e[0]] < 0:
                        level[e[0]] = level[u] + 1
                        queue.append(e[0])
            if level[dst] < 0:
                return flow
            it = [0] * n

            def dfs(u, pushed):
                if u == dst:
                    return pushed
                while it[u] < len(self.adj[u]):
                    e = self.adj[u][it[u]]
                    if e[1] > 0 and level[e[0]] == level[u] + 1:
                        d = dfs(e[0], min(pushed, e[1]))
                        if d > 0:
                            e[1] -= d
                            self.adj[e[0]][e[2]][1] += d
                            return d
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(src, 1 << 300)
                if pushed == 0:
                    break
                flow += pushed

    def reachable(self, src):
        seen = {src}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                if e[1] > 0 and e[0] not in seen:
                    seen.add(e[0])
                    queue.append(e[0])
        return seen


def max_flow(net: FlowNetwork):
    """Maximum flow value and a minimum cut (as a set of original arcs).

    The cut consists of the arcs leaving the residual-reachable side of
    the source, so its capacity equals the flow value; both facts are
    asserted, along with flow conservation at interior nodes.
    """
    index = {node: i for i, node in enumerate(net.nodes)}
    solver = _Dinic(len(net.nodes))
    original = []
    for u, v, c in net.arcs:
        original.append(len(solver.adj[index[u]]))
        solver.add_arc(index[u], index[v], c)
    value = solver.max_flow(index[net.source], index[net.sink])

    reach = solver.reachable(index[net.source])
    cut = []
    balance = {i: 0 for i in range(len(net.nodes))}
    for (u, v, c), pos in zip(net.arcs, original):
        residual = solver.adj[index[u]][pos][1]
        sent = c - residual
        assert 0 <= sent <= c
        balance[index[u]] -= sent
        balance[index[v]] += sent
        if index[u] in reach and index[v] not in reach:
            cut.append((u, v, c))
    src, dst = index[net.source], index[net.sink]
    assert all(balance[i] == 0 for i in balance if i not in (src, dst))
    assert balance[dst] == value == sum(c for _, _, c in cut)
    return value, cut


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    """Two vertex sides with positive integer weights and cross edges."""

    side1: tuple  # (label, weight)
    side2: tuple
    edges: tuple  # (label in side1, label in side2)

    def __post_init__(self):
        labels1 = [v for v, _ in self.side1]
        labels2 = [v for v, _ in self.side2]
        if len(set(labels1)) != len(labels1) or len(set(labels2)) != len(labels2):
            raise ValueError("duplicate vertex labels within a side")
        if set(labels1) & set(labels2):
            raise ValueError("vertex labels shared across sides")
        for v, w in self.side1 + self.side2:
            if not isinstance(w, int) or w <= 0:
                raise ValueError(f"weight of {v!r} must be a positive integer")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edges")
        s1, s2 = set(labels1), set(labels2)
        for u, v in self.edges:
            if u not in s1 or v not in s2:
                raise ValueError(f"edge ({u!r}, {v!r}) does not go from "
                                 f"side1 to side2")

    def weight_of(self, label):
        for v, w in self.side1 + self.side2:
            if v == label:
                return w
        raise KeyError(label)

    def total_weight(self) -> int:
        return sum(w for _, w in self.side1) + sum(w for _, w in self.side2)


def _cover_network(g: WeightedBipartiteGraph):
    # Middle arcs get capacity total+1: finite, never in a minimum cut.
    big = g.total_weight() + 1
    src, dst = ("source",), ("sink",)
    nodes = [src] + [("1", v) for v, _ in g.side1] \
        + [("2", v) for v, _ in g.side2] + [dst]
    arcs = [(src, ("1", v), w) for v, w in g.side1]
    arcs += [(("2", v), dst, w) for v, w in g.side2]
    arcs += [(("1", u), ("2", v), big) for u, v in g.edges]
    return FlowNetwork(tuple(nodes), tuple(arcs), src, dst)


def min_weight_vertex_cover(g: WeightedBipartiteGraph):
    """A minimum-weight vertex cover and its exact weight.

    Ties are broken by the cut reachable-set rule: side-1 vertices not
    reachable in the final residual network plus side-2 vertices that
    are reachable.  Deterministic for a fixed graph.
    """
    net = _cover_network(g)
    value, cut = max_flow(net)
    cover = set()
    for u, v, _ in cut:
        if u == ("source",):
            cover.add(v[1])
        else:
            assert v == ("sink",)
            cover.add(u[1])
    for u, v in g.edges:
        if u not in cover and v not in cover:
            raise AssertionError(f"edge ({u!r}, {v!r}) left uncovered")
    weights = dict(g.side1) | dict(g.side2)
    assert sum(weights[v] for v in cover) == value
    return frozenset(cover), value


def max_weight_independent_set(g: WeightedBipartiteGraph):
    """A maximum-weight independent set (complement of a minimum cover)."""
    cover, cover_weight = min_weight_vertex_cover(g)
    chosen = frozenset(v for v, _ in g.side1 + g.side2 if v not in cover)
    for u, v in g.edges:
        assert u not in chosen or v not in chosen
    return chosen, g.total_weight() - cover_weight


def check_fractional_weak_duality(g: WeightedBipartiteGraph, beta, cover) -> bool:
    """Whether the weighted value of a fractional independent set is at
    most the weight of an integral vertex cover.

    ``beta`` maps vertex labels to rationals; missing labels count as 0.
    Raises if beta is not a fractional independent set (labels in [0,1]
    with beta_u + beta_v <= 1 on every edge) or if the cover misses an
    edge.  Exact rational arithmetic throughout.
    """
    weights = dict(g.side1) | dict(g.side2)
    vals = {}
    for v in weights:
        b = Fraction(beta.get(v, 0))
        if not 0 <= b <= 1:
            raise NotAFractionalIndependentSet(f"beta[{v!r}] = {b} not in [0, 1]")
        vals[v] = b
    for u, v in g.edges:
        if vals[u] + vals[v] > 1:
            raise NotAFractionalIndependentSet(
                f"beta[{u!r}] + beta[{v!r}] = {vals[u] + vals[v]} > 1")
    cover = set(cover)
    for u, v in g.edges:
        if u not in cover and v not in cover:
            raise NotACover(f"edge ({u!r}, {v!r}) not covered")
    fractional_value = sum(vals[v] * weights[v] for v in weights)
    cover_weight = sum(weights[v] for v in cover)
    return fractional_value <= cover_weight
