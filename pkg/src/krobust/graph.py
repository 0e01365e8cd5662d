"""Immutable simple graphs on vertices ``0..n-1`` and connectivity primitives."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from krobust import _kernels

Edge = tuple[int, int]

#: Edge-subset sweeps refuse graphs with more edges than this unless overridden.
MAX_SWEEP_EDGES = 30


class GraphError(ValueError):
    """Raised for structurally invalid graphs or operation preconditions."""


class GraphFormatError(GraphError):
    """Raised when an edge-list document cannot be parsed."""


class SizeGuardError(GraphError):
    """Raised when an exhaustive operation would exceed its desk-scale guard."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with dense integer vertices.

    Edges are stored once as ``(u, v)`` with ``u < v`` and kept in
    lexicographic order. Instances are immutable and hashable.
    """

    __slots__ = ("n", "edges", "adj", "masks", "_index", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            ce = canonical_edge(u, v)
            if ce in seen:
                raise GraphError(f"duplicate edge {ce}")
            seen.add(ce)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        adj: list[set[int]] = [set() for _ in range(n)]
        masks = [0] * n
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self.masks: tuple[int, ...] = tuple(masks)
        self._index = {e: i for i, e in enumerate(self.edges)}
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._index

    def edge_index(self, e: Sequence[int]) -> int:
        return self._index[canonical_edge(e[0], e[1])]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} not in 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Build the graph whose edges are the set bits of ``mask`` over
        the lexicographic list of all vertex pairs."""
        pairs = combinations(range(n), 2)
        return cls(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header ``n m`` then ``m`` lines ``u v``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("malformed header: empty document")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise GraphFormatError(f"malformed header: {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"malformed header: declares {m} edges, found {len(body)}")
    seen: set[Edge] = set()
    edges = []
    for lineno, ln in enumerate(body, start=2):
        toks = ln.split()
        if len(toks) != 2 or not all(tok.isdigit() for tok in toks):
            raise GraphFormatError(f"line {lineno}: malformed edge {ln!r}")
        u, v = int(toks[0]), int(toks[1])
        if u >= n or v >= n:
            raise GraphFormatError(f"line {lineno}: endpoint out of range in ({u},{v}) for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    out.extend(f"# {c}" for c in comments)
    return "\n".join(out) + "\n"


def is_connected(g: Graph) -> bool:
    return _kernels.connected(g.n, g.masks)


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise GraphError(f"{what} requires a connected graph")


def remove_edges(g: Graph, s: Iterable[Sequence[int]]) -> Graph:
    drop = set()
    for e in s:
        ce = canonical_edge(e[0], e[1])
        if ce not in g._index:
            raise GraphError(f"{ce} is not an edge of the graph")
        drop.add(ce)
    return Graph(g.n, [e for e in g.edges if e not in drop])


def bridges(g: Graph) -> tuple[Edge, ...]:
    """Edges whose removal disconnects ``g`` (iterative lowpoint DFS)."""
    _require_connected(g, "bridges")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[Edge] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.append(canonical_edge(parent, v))
    return tuple(sorted(found))


def is_t_edge_connected(g: Graph, t: int, override_guards: bool = False) -> bool:
    if t < 1:
        raise GraphError(f"edge-connectivity order must be positive, got {t}")
    if not is_connected(g):
        return False
    if t == 1:
        return True
    if t == 2:
        return not bridges(g)
    if g.n <= 1:
        return True
    if g.m > MAX_SWEEP_EDGES and not override_guards:
        raise SizeGuardError(f"{g.m} edges exceeds the sweep guard of {MAX_SWEEP_EDGES}")
    # Connectivity is monotone under edge removal: only maximal subsets matter.
    size = min(t - 1, g.m)
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    for combo in combinations(range(g.m), size):
        adj = list(g.masks)
        for i in combo:
            adj[eu[i]] &= ~(1 << ev[i])
            adj[ev[i]] &= ~(1 << eu[i])
        if not _kernels.connected(g.n, adj):
            return False
    return True


def vertex_on_cycle(g: Graph, v: int) -> bool:
    g.check_vertex(v)
    _require_connected(g, "vertex_on_cycle")
    cut = set(bridges(g))
    return any(canonical_edge(v, w) not in cut for w in g.adj[v])
