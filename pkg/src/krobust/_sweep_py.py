"""Pure-Python removal-set sweep over adjacency bitmasks.

Reference twin of the compiled ``_sweep`` module; both expose the same
functions with the same results.

Kinds of validity test:

* ``DOMINATION`` -- ``payload`` is a vertex mask ``S``; the reduced graph is
  valid when every vertex outside ``S`` keeps a neighbor in ``S``. The
  witness is the lowest such vertex that does not.
* ``MATCHING`` -- ``payload`` is an edge-index mask ``M``; the reduced graph
  is valid when ``M`` minus the removed edges is maximal among the
  surviving edges. The witness is the lowest addable edge index.
"""

DOMINATION = 0
MATCHING = 1


def connected(n, adj):
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _reduce(adj, eu, ev, removed):
    out = list(adj)
    r = removed
    while r:
        low = r & -r
        i = low.bit_length() - 1
        out[eu[i]] &= ~(1 << ev[i])
        out[ev[i]] &= ~(1 << eu[i])
        r ^= low
    return out


def _violation(n, radj, eu, ev, kind, payload, removed):
    if kind == DOMINATION:
        for w in range(n):
            if not (payload >> w) & 1 and not radj[w] & payload:
                return w
        return -1
    matched = 0
    live = payload & ~removed
    while live:
        low = live & -live
        i = low.bit_length() - 1
        matched |= (1 << eu[i]) | (1 << ev[i])
        live ^= low
    for i in range(len(eu)):
        if (removed >> i) & 1:
            continue
        if not (matched >> eu[i]) & 1 and not (matched >> ev[i]) & 1:
            return i
    return -1


def removal_sweep(n, adj, eu, ev, kind, payload, k, filtered):
    """Search removal sets by increasing size, lexicographic within a size.

    Returns ``(removed_mask, witness)`` for the first removal set of at most
    ``k`` edges after which the solution is invalid, or ``None``. With
    ``filtered`` set, removal sets that disconnect the graph are skipped and
    never extended.
    """
    m = len(eu)
    w = _violation(n, adj, eu, ev, kind, payload, 0)
    if w >= 0:
        return 0, w
    frontier = [(0, -1)]
    for size in range(1, min(k, m) + 1):
        nxt = []
        for mask, last in frontier:
            for i in range(last + 1, m):
                cand = mask | (1 << i)
                radj = _reduce(adj, eu, ev, cand)
                if filtered and not connected(n, radj):
                    continue
                w = _violation(n, radj, eu, ev, kind, payload, cand)
                if w >= 0:
                    return cand, w
                if size < k:
                    nxt.append((cand, i))
        if not nxt:
            break
        frontier = nxt
    return None
