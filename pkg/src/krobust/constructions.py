"""Graph families and the witness/reduction constructions.

Vertex labelings are fixed so that constructed graphs are byte-reproducible:

* ``path``/``cycle``: vertices in index order.
* ``complete_bipartite(a, b)``: sides ``0..a-1`` and ``a..a+b-1``.
* ``star(leaves)``: center ``0``.
* ``join(g, h)``: ``h`` shifted by ``g.n``.
* ``gk_witness(k)``: ``A = 0..k+1`` with ``u = 0``, ``B = k+2..2k+3``, ``v = 2k+4``.
* ``k_copies_blowup(g, k)``: copy ``x`` (1-based) of vertex ``u`` is ``u + (x-1)*n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from krobust.graph import Graph, GraphError, is_connected, vertex_on_cycle

FAMILIES = ("path", "cycle", "clique", "complete_bipartite", "star")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        want = 2 if self.family == "complete_bipartite" else 1
        if len(self.params) != want:
            raise GraphError(f"{self.family} takes {want} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise GraphError(f"{self.family} parameters must be positive, got {self.params}")


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be at least 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def clique(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_family(spec: FamilySpec) -> Graph:
    builders = {
        "path": path,
        "cycle": cycle,
        "clique": clique,
        "complete_bipartite": complete_bipartite,
        "star": star,
    }
    return builders[spec.family](*spec.params)


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = list(g.edges)
    edges += [(u + shift, v + shift) for u, v in h.edges]
    edges += [(u, shift + v) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


@dataclass(frozen=True)
class GkWitness:
    """``K_{k+2,k+2}`` with a pendant ``v`` hung on ``u`` in side ``A``."""

    k: int
    graph: Graph
    u: int
    v: int
    A: tuple[int, ...]
    B: tuple[int, ...]

    def comment(self) -> str:
        k = self.k
        return f"u={self.u} v={self.v} A=0..{k + 1} B={k + 2}..{2 * k + 3}"


def gk_witness(k: int) -> GkWitness:
    if k < 1:
        raise GraphError(f"witness order must be at least 1, got {k}")
    side = k + 2
    base = complete_bipartite(side, side)
    v = 2 * side
    g = Graph(v + 1, list(base.edges) + [(0, v)])
    return GkWitness(k, g, 0, v, tuple(range(side)), tuple(range(side, 2 * side)))


def add_universal_vertex(g: Graph) -> Graph:
    if g.n < 2 or g.m < 1 or not is_connected(g):
        raise GraphError("universal vertex construction needs a connected graph with at least one edge")
    return Graph(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)])


def k_copies_blowup(g: Graph, k: int) -> Graph:
    if k < 1:
        raise GraphError(f"number of copies must be positive, got {k}")
    if not is_connected(g):
        raise GraphError("blowup needs a connected graph")
    n = g.n
    edges = [
        (u + x * n, v + y * n)
        for u, v in g.edges
        for x in range(k)
        for y in range(k)
    ]
    return Graph(n * k, edges)


def sputnikify(g: Graph) -> Graph:
    """Hang a fresh pendant vertex on every cycle vertex."""
    if not is_connected(g):
        raise GraphError("sputnikify needs a connected graph")
    on_cycle = [v for v in range(g.n) if vertex_on_cycle(g, v)]
    extra = [(v, g.n + i) for i, v in enumerate(on_cycle)]
    return Graph(g.n + len(on_cycle), list(g.edges) + extra)
