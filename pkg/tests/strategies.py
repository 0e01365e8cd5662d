"""Hypothesis strategies for small graphs."""

from itertools import combinations

from hypothesis import strategies as st

from krobust.graph import Graph, is_connected


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random connected graph: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [p for p in combinations(range(n), 2) if p not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True))
        edges.update(extra)
    g = Graph(n, edges)
    assert is_connected(g)
    return g
