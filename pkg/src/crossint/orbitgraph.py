"""The weighted two-sided orbit graph, its typed edges, and chain paths.

Vertices are orbit profiles i in {s..k-1}, one copy per side, weighted
by the orbit size.  Two profiles conflict (carry an edge) exactly when
some pair of sets with those profiles intersects in fewer than s
elements, which happens iff k-l <= i+t <= k+s-1.

Three families of edges are singled out: profile-mirroring edges
(i, k+s-1-i) of type 1, equal-profile edges (i, i) of type 2 inside the
band ceil((k-l)/2) <= i < (k+s-1)/2, and offset edges
(floor((k-l)/2)-d, floor((k+s-1)/2)+d) of type 3.  The typed subgraph
always decomposes into even paths; whether every path carries an
equal-weight middle edge is exactly what validate_decomposition checks.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import (DecompositionViolation, EnumerationTooLarge,
                     IndexNotMeaningful, ParamsOutOfRange, TypedEdgeNotInW)
from .extremal import min_pair_intersection, orbit_weight
from .report import Verdict
from .sets import Params


@dataclass(frozen=True)
class OrbitVertex:
    side: int  # 1 or 2
    i: int     # intersection profile, s <= i <= k-1
    weight: int

    def name(self) -> str:
        return f"C_{self.i}^{self.side}"


@dataclass(frozen=True)
class OrbitGraph:
    params: Params
    side1: tuple  # OrbitVertex, ascending profile
    side2: tuple
    edges: frozenset  # (i on side 1, t on side 2)

    def profiles(self):
        return tuple(v.i for v in self.side1)

    def has_edge(self, i: int, t: int) -> bool:
        return (i, t) in self.edges

    def vertex(self, side: int, i: int) -> OrbitVertex:
        for v in (self.side1 if side == 1 else self.side2):
            if v.i == i:
                return v
        raise IndexNotMeaningful(f"no vertex with profile {i}")

    def one_side_weight(self) -> int:
        return sum(v.weight for v in self.side1)


def _require_graph_params(params: Params):
    if params.s < 2:
        raise ParamsOutOfRange(
            f"orbit graph needs s >= 2, got s={params.s} (the s=1 case is "
            f"covered by the enumeration oracle)")
    if params.l < 0:
        raise ParamsOutOfRange(f"orbit graph needs slack l >= 0, got {params.l}")


def build_orbit_graph(params: Params) -> OrbitGraph:
    """The weighted conflict graph between orbit profiles of both sides."""
    _require_graph_params(params)
    k, s, l = params.k, params.s, params.l
    profiles = range(s, k)
    side1 = tuple(OrbitVertex(1, i, orbit_weight(i, params)) for i in profiles)
    side2 = tuple(OrbitVertex(2, i, orbit_weight(i, params)) for i in profiles)
    edges = frozenset((i, t) for i in profiles for t in profiles
                      if k - l <= i + t <= k + s - 1)
    graph = OrbitGraph(params, side1, side2, edges)
    for i in profiles:
        if not any((i, t) in edges for t in profiles):
            raise AssertionError(f"profile {i} is isolated; construction bug")
    return graph


@dataclass(frozen=True)
class TypedEdge:
    left: OrbitVertex   # side 1
    right: OrbitVertex  # side 2
    edge_type: int      # 1, 2, or 3


def classify_edges(graph: OrbitGraph):
    """Enumerate the three edge families, as (side-1 profile, side-2
    profile) pairs, and report which graph edges stay untyped.

    Raises TypedEdgeNotInW if a typed edge is not a graph edge; that
    would contradict the construction and is treated as a finding.
    """
    params = graph.params
    k, s, l = params.k, params.s, params.l
    profiles = set(graph.profiles())

    typed = {}
    for i in sorted(profiles):
        typed[(i, k + s - 1 - i)] = 1
    band_lo = -(-(k - l) // 2)  # ceil((k-l)/2)
    for i in sorted(profiles):
        if band_lo <= i and 2 * i < k + s - 1:
            assert (i, i) not in typed
            typed[(i, i)] = 2
    low_anchor = (k - l) // 2
    high_anchor = (k + s - 1) // 2
    offset = 1
    while True:
        lo, hi = low_anchor - offset, high_anchor + offset
        if lo not in profiles or hi not in profiles:
            break
        assert (lo, hi) not in typed and (hi, lo) not in typed
        typed[(lo, hi)] = 3
        typed[(hi, lo)] = 3
        offset += 1

    out = []
    for (i, t), ty in sorted(typed.items()):
        if (i, t) not in graph.edges:
            raise TypedEdgeNotInW(
                f"typed edge ({i}, {t}) of type {ty} is not a graph edge "
                f"for params {params}")
        out.append(TypedEdge(graph.vertex(1, i), graph.vertex(2, t), ty))
    untyped = sorted(graph.edges - set(typed))
    return out, untyped


@dataclass(frozen=True)
class ChainDecomposition:
    """The typed subgraph split into vertex-disjoint paths.

    ``paths`` holds vertex sequences; ``edge_types`` the aligned type of
    each consecutive pair; ``middles`` the positional middle edge of each
    path as (left vertex, right vertex, type).
    """

    params: Params
    paths: tuple
    edge_types: tuple
    middles: tuple


def build_chain_decomposition(params: Params) -> ChainDecomposition:
    """Connected components of the typed subgraph, linearized as paths.

    Paths end at vertices of typed degree 1.  Raises
    DecompositionViolation if the typed subgraph is not a disjoint union
    of simple paths (never observed; the typed edge families are
    pairwise disjoint and each vertex meets at most one of each kind).
    """
    graph = build_orbit_graph(params)
    typed, _ = classify_edges(graph)

    adj = {(v.side, v.i): [] for v in graph.side1 + graph.side2}
    for edge in typed:
        a = (edge.left.side, edge.left.i)
        b = (edge.right.side, edge.right.i)
        adj[a].append((b, edge.edge_type))
        adj[b].append((a, edge.edge_type))

    for v, nbrs in adj.items():
        if len(nbrs) > 2:
            raise DecompositionViolation(
                f"vertex {v} has typed degree {len(nbrs)}", offending=v)

    vertex_of = {(v.side, v.i): v for v in graph.side1 + graph.side2}
    seen = set()
    paths, types, middles = [], [], []
    for start in sorted(adj):
        if start in seen:
            continue
        component = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y, _ in adj[x]:
                if y not in component:
                    component.add(y)
                    frontier.append(y)
        seen |= component
        ends = sorted(v for v in component if len(adj[v]) <= 1)
        edge_count = sum(len(adj[v]) for v in component) // 2
        if len(ends) != 2 or edge_count != len(component) - 1:
            raise DecompositionViolation(
                f"component {sorted(component)} is not a simple path",
                offending=sorted(component))

        walk = [ends[0]]
        walk_types = []
        prev = None
        while True:
            step = [(y, ty) for y, ty in adj[walk[-1]] if y != prev]
            if not step:
                break
            prev = walk[-1]
            walk.append(step[0][0])
            walk_types.append(step[0][1])
        assert len(walk) == len(component)

        path = tuple(vertex_of[v] for v in walk)
        half = len(path) // 2
        middle = (path[half - 1], path[half], walk_types[half - 1])
        paths.append(path)
        types.append(tuple(walk_types))
        middles.append(middle)

    return ChainDecomposition(params, tuple(paths), tuple(types), tuple(middles))


def path_mwis(weights) -> int:
    """Maximum-weight independent set of a path, by take/skip recurrence."""
    weights = list(weights)
    if not weights:
        raise ValueError("empty weight sequence")
    take, skip = 0, 0
    for w in weights:
        take, skip = skip + w, max(take, skip)
    return max(take, skip)


def _path_failures(path, edge_types, middle):
    """Weight-profile checks for one path; returns failure strings."""
    failures = []
    weights = [v.weight for v in path]
    if len(path) % 2 != 0:
        failures.append(f"odd vertex count {len(path)}")
        return failures
    half = len(path) // 2

    left, right, mid_type = middle
    if middle != (path[half - 1], path[half], edge_types[half - 1]):
        failures.append("stored middle edge does not sit at the path midpoint")
    fixed_point = mid_type == 1 and left.i == right.i
    if mid_type != 2 and not fixed_point:
        failures.append(
            f"middle edge {left.name()}--{right.name()} has type {mid_type} "
            f"and is not a fixed-point mirror edge")
    if left.weight != right.weight:
        failures.append(
            f"middle weights differ: {left.name()}={left.weight}, "
            f"{right.name()}={right.weight}")
    if any(weights[p] > weights[p + 1] for p in range(half - 1)) or \
            any(weights[p] < weights[p + 1] for p in range(half, len(weights) - 1)):
        failures.append(f"weights not monotone toward the middle: {weights}")

    total = sum(weights)
    best = path_mwis(weights)
    if 2 * best != total:
        failures.append(f"path MWIS {best} != half of total {total}")

    for ty in edge_types[0::2]:
        if ty != 1:
            failures.append("mirror edges not in alternating position")
            break
    for ty in edge_types[1::2]:
        if ty == 1:
            failures.append("interleaved edge has type 1")
            break
    return failures


def validate_decomposition(dec: ChainDecomposition, graph: OrbitGraph) -> Verdict:
    """Check every structural and weight invariant of a decomposition.

    Failures are reported in the Verdict, never raised: a failing path
    is a finding about the construction for those parameters (the
    flow-based bound in the optimizer module is unaffected by it).
    """
    params = dec.params
    failures = []

    claimed = [(v.side, v.i) for path in dec.paths for v in path]
    expected = sorted((v.side, v.i) for v in graph.side1 + graph.side2)
    if sorted(claimed) != expected or len(set(claimed)) != len(claimed):
        failures.append("paths do not partition the vertex set")

    typed, _ = classify_edges(graph)
    typed_lookup = {}
    for e in typed:
        typed_lookup[((e.left.side, e.left.i), (e.right.side, e.right.i))] = e.edge_type
        typed_lookup[((e.right.side, e.right.i), (e.left.side, e.left.i))] = e.edge_type

    for path, edge_types, middle in zip(dec.paths, dec.edge_types, dec.middles):
        for v in path:
            if v.weight != orbit_weight(v.i, params):
                failures.append(f"{v.name()} carries weight {v.weight}, "
                                f"expected {orbit_weight(v.i, params)}")
        for (a, b), ty in zip(zip(path, path[1:]), edge_types):
            key = ((a.side, a.i), (b.side, b.i))
            if typed_lookup.get(key) != ty:
                failures.append(f"{a.name()}--{b.name()} is not a typed edge "
                                f"of type {ty}")
        failures.extend(_path_failures(path, edge_types, middle))

    mwis_total = sum(path_mwis([v.weight for v in path]) for path in dec.paths)
    side_weight = graph.one_side_weight()
    if mwis_total != side_weight:
        failures.append(f"sum of path MWIS values {mwis_total} != one side's "
                        f"weight {side_weight}")

    return Verdict(
        claim="chains.valid",
        params=params,
        formula_value=side_weight,
        oracle_value=mwis_total,
        passed=not failures,
        witness=failures or None,
        detail="; ".join(failures[:4]) if failures else
               f"{len(dec.paths)} paths, all balanced",
    )


def _orbit_masks(params: Params, profile: int):
    n, k = params.n, params.k
    inside = [sum(1 << e for e in combo)
              for combo in combinations(range(1, k + 1), profile)]
    outside = [sum(1 << e for e in combo)
               for combo in combinations(range(k + 1, n + 1), k - profile)]
    return [lo | hi for lo in inside for hi in outside]


def check_biregularity(params: Params, i: int, t: int,
                       cap: int = 200_000) -> Verdict:
    """Check that two conflicting orbits induce a biregular bipartite
    graph with nonzero degrees (constant degree on each side).

    The orbits are enumerated explicitly and every pairwise intersection
    is examined, so this is independent of any symmetry argument.
    """
    k, s = params.k, params.s
    for x in (i, t):
        if not s <= x <= k - 1:
            raise IndexNotMeaningful(f"profile {x} outside {{{s},...,{k - 1}}}")
    if min_pair_intersection(i, t, params) >= s:
        raise ValueError(f"profiles ({i}, {t}) never conflict for {params}; "
                         f"biregularity does not apply")
    size_i, size_t = orbit_weight(i, params), orbit_weight(t, params)
    if size_i * size_t > cap:
        raise EnumerationTooLarge(
            f"{size_i} x {size_t} pairwise checks exceed cap {cap}")

    orbit_i = _orbit_masks(params, i)
    orbit_t = _orbit_masks(params, t)
    degrees_i = [sum(1 for b in orbit_t if (a & b).bit_count() < s)
                 for a in orbit_i]
    degrees_t = [sum(1 for a in orbit_i if (a & b).bit_count() < s)
                 for b in orbit_t]
    deg_i, deg_t = set(degrees_i), set(degrees_t)
    passed = (len(deg_i) == 1 and len(deg_t) == 1
              and 0 not in deg_i and 0 not in deg_t)
    d1 = min(deg_i, default=0)
    d2 = min(deg_t, default=0)
    return Verdict(
        claim="orbit-pair.biregular",
        params=params,
        formula_value=None,
        oracle_value=None,
        passed=passed,
        witness={"profile_pair": (i, t), "sizes": (size_i, size_t),
                 "degrees": (sorted(deg_i), sorted(deg_t))},
        detail=(f"degrees {d1} x {d2} on orbit sizes {size_i} x {size_t}"
                if passed else
                f"degree sets {sorted(deg_i)} / {sorted(deg_t)}"),
    )


def graph_to_dot(graph: OrbitGraph) -> str:
    """Plain DOT rendering of the orbit graph (all edges, no styling)."""
    p = graph.params
    lines = [f"graph orbit_graph_n{p.n}_k{p.k}_s{p.s} {{", "  rankdir=LR;"]
    for v in graph.side1 + graph.side2:
        lines.append(f'  "{v.name()}" [label="{v.name()} (w={v.weight})"];')
    for i, t in sorted(graph.edges):
        lines.append(f'  "C_{i}^1" -- "C_{t}^2";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_EDGE_STYLE = {
    1: "[style=solid]",
    2: "[style=bold, dir=both]",
    3: "[style=dashed]",
}


def decomposition_to_dot(dec: ChainDecomposition) -> str:
    """DOT rendering of the chain paths, edges styled by type."""
    p = dec.params
    lines = [f"graph chains_n{p.n}_k{p.k}_s{p.s} {{", "  rankdir=LR;"]
    vertices = sorted((v.side, v.i, v) for path in dec.paths for v in path)
    for _, _, v in vertices:
        lines.append(f'  "{v.name()}" [label="{v.name()} (w={v.weight})"];')
    for path, edge_types in zip(dec.paths, dec.edge_types):
        for (a, b), ty in zip(zip(path, path[1:]), edge_types):
            lines.append(f'  "{a.name()}" -- "{b.name()}" {_EDGE_STYLE[ty]};')
    lines.append("}")
    return "\n".join(lines) + "\n"
