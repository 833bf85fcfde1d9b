"""Simple undirected graphs with a canonical vertex and edge order.

The edge order is part of the graph value: edge j of a graph becomes
vertex j of its line graph, and the vertex order of every derived
construction is fixed by it.  This makes every matrix (and hence every
characteristic polynomial computation) deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Graph",
    "GraphError",
    "SelfLoop",
    "DuplicateEdge",
    "IndexOutOfRange",
    "EmptyEdgeSet",
    "InvalidParameter",
    "from_edge_list",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "petersen_graph",
    "hypercube_graph",
    "circulant_graph",
    "generate",
    "complement",
    "line_graph",
    "regularity",
    "parse_edge_list",
    "format_edge_list",
]


class GraphError(ValueError):
    """Base class for graph construction errors."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class EmptyEdgeSet(GraphError):
    pass


class InvalidParameter(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with an ordered edge list.

    Edges are unordered pairs; the list order is canonical and preserved.
    Self-loops and duplicate edges (in either orientation) are rejected.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"vertex count must be >= 1, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"edge ({u},{v}) out of range for n={self.n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"duplicate edge ({u},{v})")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._edge_set()

    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) if u < v else (v, u) for u, v in self.edges)


def from_edge_list(n: int, pairs) -> Graph:
    """Build a graph from explicit pairs; the input order is the edge order."""
    return Graph(n, tuple((int(u), int(v)) for u, v in pairs))


# ----------------------------------------------------------------------------
# Generators.  Each emits a documented canonical vertex/edge order so that
# repeated runs produce byte-identical downstream output.
# ----------------------------------------------------------------------------


def cycle_graph(k: int) -> Graph:
    """Cycle C_k, k >= 3.  Edge j joins (j, j+1 mod k), normalized (min,max)."""
    if k < 3:
        raise InvalidParameter(f"cycle needs k >= 3, got {k}")
    edges = [tuple(sorted((i, (i + 1) % k))) for i in range(k)]
    return Graph(k, tuple(edges))


def complete_graph(k: int) -> Graph:
    """Complete graph K_k, k >= 2.  Edges in lexicographic (u,v) order."""
    if k < 2:
        raise InvalidParameter(f"complete graph needs k >= 2, got {k}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    return Graph(k, tuple(edges))


def complete_bipartite_graph(a: int) -> Graph:
    """Balanced complete bipartite K_{a,a}: parts 0..a-1 and a..2a-1, lex order."""
    if a < 1:
        raise InvalidParameter(f"part size must be >= 1, got {a}")
    edges = [(u, a + w) for u in range(a) for w in range(a)]
    return Graph(2 * a, tuple(edges))


def petersen_graph() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9.

    Edge order: outer cycle, then spokes (i, i+5), then inner (5+i, 5+(i+2 mod 5)).
    """
    outer = [tuple(sorted((i, (i + 1) % 5))) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [tuple(sorted((5 + i, 5 + (i + 2) % 5))) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def hypercube_graph(d: int) -> Graph:
    """d-cube on vertices 0..2^d-1; edges (i, i ^ bit) ordered by i then bit."""
    if d < 1:
        raise InvalidParameter(f"hypercube needs d >= 1, got {d}")
    size = 1 << d
    edges = []
    for i in range(size):
        for b in range(d):
            j = i ^ (1 << b)
            if i < j:
                edges.append((i, j))
    return Graph(size, tuple(edges))


def circulant_graph(k: int, offsets) -> Graph:
    """Circulant graph on Z_k with connection set {±s : s in offsets}.

    Offsets must reduce to distinct values in 1..k//2 (nonzero mod k; the
    set is closed under negation by construction).  Edge order: for i
    ascending, for s ascending, edge (i, i+s mod k) when not yet present.
    """
    if k < 3:
        raise InvalidParameter(f"circulant needs k >= 3, got {k}")
    folded = []
    for s in offsets:
        t = s % k
        if t == 0:
            raise InvalidParameter(f"offset {s} is 0 mod {k}")
        folded.append(min(t, k - t))
    if len(set(folded)) != len(folded):
        raise InvalidParameter(f"offsets {list(offsets)} collide mod {k}")
    folded.sort()
    edges = []
    seen = set()
    for i in range(k):
        for s in folded:
            e = tuple(sorted((i, (i + s) % k)))
            if e not in seen:
                seen.add(e)
                edges.append(e)
    return Graph(k, tuple(edges))


GENERATORS = {
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 1),
    "petersen": (petersen_graph, 0),
    "hypercube": (hypercube_graph, 1),
    "circulant": (circulant_graph, None),  # k followed by offsets
}


def generate(kind: str, params: list[int] | None = None) -> Graph:
    """Dispatch onto the named generator; raises InvalidParameter on bad input."""
    params = params or []
    if kind not in GENERATORS:
        raise InvalidParameter(f"unknown generator {kind!r}")
    fn, arity = GENERATORS[kind]
    if arity is None:  # circulant: k plus at least one offset
        if len(params) < 2:
            raise InvalidParameter("circulant needs a modulus and at least one offset")
        return fn(params[0], params[1:])
    if len(params) != arity:
        raise InvalidParameter(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ----------------------------------------------------------------------------
# Derived graphs and regularity.
# ----------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    """Complement on the same vertex set; edges in lexicographic order."""
    present = g._edge_set()
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in present
    ]
    return Graph(g.n, tuple(edges))


def line_graph(g: Graph) -> Graph:
    """Line graph: vertex j is edge j of g; adjacency = shared endpoint.

    Edge order of the result: lexicographic over index pairs (i, j), i < j.
    Requires m >= 1.
    """
    if g.m == 0:
        raise EmptyEdgeSet("line graph of an edgeless graph")
    ends = [frozenset(e) for e in g.edges]
    edges = [
        (i, j)
        for i in range(g.m)
        for j in range(i + 1, g.m)
        if ends[i] & ends[j]
    ]
    return Graph(g.m, tuple(edges))


def regularity(g: Graph) -> int | None:
    """Common degree r when g is regular (then 2m = rn holds), else None."""
    deg = g.degrees()
    r = deg[0]
    if any(d != r for d in deg):
        return None
    assert 2 * g.m == r * g.n
    return r


# ----------------------------------------------------------------------------
# Edge-list text format: first line "n m", then one "u v" line per edge,
# 0-indexed; file order is the edge order.
# ----------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise InvalidParameter("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise InvalidParameter(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InvalidParameter(f"header must be two integers, got {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise InvalidParameter(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidParameter(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidParameter(f"edge line must be two integers, got {ln!r}")
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
