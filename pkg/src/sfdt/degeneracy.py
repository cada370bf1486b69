"""Strict f-degeneracy tests over arbitrary labeled graphs.

A graph-with-values here is just an adjacency mapping {vertex: neighbors}
together with a value mapping {vertex: nonnegative int}.  Vertices can be
ints or (vertex, index) pairs; they only need to be sortable and hashable.

A graph is strictly f-degenerate when every nonempty subgraph has a vertex
of degree strictly below its value.  The greedy test deletes any vertex
whose current degree is below its value until stuck; deletion never
increases degrees, so a deletable vertex stays deletable and the greedy
choice order cannot affect the outcome.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

Vertex = Hashable

_BRUTE_FORCE_LIMIT = 20


def f_removing_order(adjacency: Mapping, f: Mapping) -> list | None:
    """Greedy deletion order witnessing strict f-degeneracy, or None.

    Each returned vertex has fewer than f(v) neighbors among the vertices
    after it.  Ties break to the smallest vertex so witnesses are
    reproducible.
    """
    alive = sorted(adjacency)
    nbrs = {v: [u for u in adjacency[v] if u in adjacency] for v in alive}
    deg = {v: len(nbrs[v]) for v in alive}
    order = []
    alive_set = set(alive)
    while alive_set:
        pick = None
        for v in alive:
            if v in alive_set and deg[v] < f[v]:
                pick = v
                break
        if pick is None:
            return None
        order.append(pick)
        alive_set.remove(pick)
        for u in nbrs[pick]:
            if u in alive_set:
                deg[u] -= 1
    return order


def is_strictly_f_degenerate(adjacency: Mapping, f: Mapping) -> bool:
    return f_removing_order(adjacency, f) is not None


def is_strictly_k_degenerate(adjacency: Mapping, k: int) -> bool:
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return is_strictly_f_degenerate(adjacency, {v: k for v in adjacency})


def coloring_number(adjacency: Mapping) -> int:
    """Least k such that the graph is strictly k-degenerate (degeneracy + 1)."""
    if not adjacency:
        return 0
    alive = sorted(adjacency)
    nbrs = {v: [u for u in adjacency[v] if u in adjacency] for v in alive}
    deg = {v: len(nbrs[v]) for v in alive}
    alive_set = set(alive)
    worst = 0
    while alive_set:
        v = min(alive_set, key=lambda x: (deg[x], x))
        worst = max(worst, deg[v])
        alive_set.remove(v)
        for u in nbrs[v]:
            if u in alive_set:
                deg[u] -= 1
    return worst + 1


def brute_force_strictly_f_degenerate(adjacency: Mapping, f: Mapping) -> bool:
    """Definition applied literally: every nonempty vertex subset must have
    a vertex of induced degree below its value.  Guarded to small graphs."""
    verts = sorted(adjacency)
    n = len(verts)
    if n > _BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {_BRUTE_FORCE_LIMIT} vertices, got {n}")
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * n
    for v in verts:
        for u in adjacency[v]:
            if u in index:
                masks[index[v]] |= 1 << index[u]
    fvals = [f[v] for v in verts]
    for subset in range(1, 1 << n):
        ok = False
        rest = subset
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if (masks[i] & subset).bit_count() < fvals[i]:
                ok = True
                break
            rest ^= low
        if not ok:
            return False
    return True


def check_removing_order(adjacency: Mapping, f: Mapping, order: Iterable) -> bool:
    """Recount that each vertex has fewer than f(v) neighbors to its right."""
    seq = list(order)
    if sorted(seq) != sorted(adjacency):
        return False
    position = {v: i for i, v in enumerate(seq)}
    for v in seq:
        later = sum(1 for u in adjacency[v] if u in position and position[u] > position[v])
        if later >= f[v]:
            return False
    return True
