"""Vertex-connectivity decision oracles.

``vertex_connectivity_at_least`` runs unit-vertex-capacity max-flow on the
split digraph (Even-Tarjan style pair schedule); the brute-force twin
enumerates all small cut candidates and exists to cross-check the flow
routine at desk scale.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ArgumentError, CapacityError
from .graphs import AbstractGraph

BRUTE_FORCE_VERTEX_LIMIT = 20


def _local_connectivity_at_least(adj, n, s, t, k):
    """True iff there are >= k internally disjoint s-t paths (s,t non-adjacent).

    Max-flow with vertex splitting: node 2v = in, 2v+1 = out.  All arcs have
    unit capacity except the s/t split arcs, which are effectively infinite.
    Augments one unit per BFS and stops as soon as k units are routed.
    """
    arc_to: list[int] = []
    arc_cap: list[int] = []
    arc_adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add_arc(a, b, cap):
        arc_adj[a].append(len(arc_to))
        arc_to.append(b)
        arc_cap.append(cap)
        arc_adj[b].append(len(arc_to))
        arc_to.append(a)
        arc_cap.append(0)

    big = 2 * n
    for v in range(n):
        add_arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for w in adj[u]:
            if u < w:
                add_arc(2 * u + 1, 2 * w, 1)
                add_arc(2 * w + 1, 2 * u, 1)

    src, dst = 2 * s + 1, 2 * t
    flow = 0
    parent_arc = [-1] * (2 * n)
    while flow < k:
        for i in range(2 * n):
            parent_arc[i] = -1
        parent_arc[src] = -2
        queue = [src]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            x = queue[qi]
            qi += 1
            for ai in arc_adj[x]:
                if arc_cap[ai] > 0 and parent_arc[arc_to[ai]] == -1:
                    parent_arc[arc_to[ai]] = ai
                    if arc_to[ai] == dst:
                        found = True
                        break
                    queue.append(arc_to[ai])
        if not found:
            return False
        x = dst
        while x != src:
            ai = parent_arc[x]
            arc_cap[ai] -= 1
            arc_cap[ai ^ 1] += 1
            x = arc_to[ai ^ 1]
        flow += 1
    return True


def vertex_connectivity_at_least(g: AbstractGraph, k: int) -> bool:
    """True iff g has more than k vertices and no vertex cut of size < k."""
    if k <= 0:
        raise ArgumentError("k must be positive")
    n = g.n
    if n <= k:
        return False
    adj = g.adjacency()
    if not g.is_connected():
        return False
    if k == 1:
        return True
    if any(len(a) < k for a in adj):
        return False
    # if the complement has no edge at all, g is complete: connectivity n-1 >= k
    if g.m == n * (n - 1) // 2:
        return True
    # fixed vertex: minimum degree, ties by index (deterministic pivot)
    v = min(range(n), key=lambda x: (len(adj[x]), x))
    nbrs = set(adj[v])
    for u in range(n):
        if u != v and u not in nbrs:
            if not _local_connectivity_at_least(adj, n, v, u, k):
                return False
    # v might sit inside a minimum cut: every cut vertex has neighbors in all
    # components, so some non-adjacent pair inside N(v) would separate.
    for x, y in combinations(sorted(nbrs), 2):
        if y not in adj[x] and not _local_connectivity_at_least(adj, n, x, y, k):
            return False
    return True


def vertex_connectivity_bruteforce(g: AbstractGraph, k: int) -> bool:
    """Exhaustive twin of vertex_connectivity_at_least (n <= 20 guard).

    Checks that removing every vertex subset of size < k leaves a connected
    graph; complete graphs K_n therefore count as k-connected exactly for
    k <= n-1, matching the flow oracle's convention.
    """
    if k <= 0:
        raise ArgumentError("k must be positive")
    if g.n > BRUTE_FORCE_VERTEX_LIMIT:
        raise CapacityError(f"brute force limited to n <= {BRUTE_FORCE_VERTEX_LIMIT}")
    n = g.n
    if n <= k:
        return False
    adj = g.adjacency()
    for size in range(k):
        for cut in combinations(range(n), size):
            if not _connected_after_removal(adj, n, set(cut)):
                return False
    return True


def _connected_after_removal(adj, n, removed) -> bool:
    remaining = n - len(removed)
    if remaining == 0:
        return True
    start = next(v for v in range(n) if v not in removed)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == remaining
