"""Base graphs: simple, undirected, vertices are dense ints 0..n-1.

Graphs are immutable after construction; derived data (adjacency, blocks)
is computed on demand and cached on the instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]  # each edge stored as (u, v) with u < v

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.

    Isolated vertices belong to no block.  block_cut_tree lists the
    (block index, cut vertex) incidences.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]


def make_graph(n: int, edge_list) -> Graph:
    """Build a graph, rejecting out-of-range indices, loops and duplicates."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    seen: set[Edge] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
        seen.add(e)
    return Graph(n, frozenset(seen))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for root in range(g.n):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components via iterative Hopcroft-Tarjan."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    edge_stack: list[Edge] = []
    block_edges: list[list[Edge]] = []
    cut: set[int] = set()

    for root in range(g.n):
        if disc[root] != -1 or g.degree(root) == 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, i = stack[-1]
            nbrs = g.neighbors(v)
            if i < len(nbrs):
                stack[-1] = (v, i + 1)
                w = nbrs[i]
                if w == parent[v]:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp: list[Edge] = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (u, v):
                            break
                    block_edges.append(comp)
                    if u != root:
                        cut.add(u)
        if root_children > 1:
            cut.add(root)

    block_sets = [frozenset(x for e in comp for x in e) for comp in block_edges]
    order = sorted(range(len(block_sets)), key=lambda i: (min(block_sets[i]), sorted(block_sets[i])))
    ordered = tuple(block_sets[i] for i in order)
    tree = tuple(
        (bi, w) for bi, bset in enumerate(ordered) for w in sorted(bset) if w in cut
    )
    return BlockDecomposition(ordered, frozenset(cut), tree)


def is_2connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and len(blocks(g).blocks) == 1


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def is_regular(g: Graph, d: int) -> bool:
    return all(g.degree(v) == d for v in range(g.n))


# ---------------------------------------------------------------------------
# Families

def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bowtie_graph() -> Graph:
    # two triangles sharing vertex 0
    return make_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.3) -> Graph:
    """Random spanning tree plus independently kept extra edges."""
    if n <= 0:
        raise ValueError("need at least one vertex")
    edges: set[Edge] = set()
    verts = list(range(n))
    rng.shuffle(verts)
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = verts[i], verts[j]
        edges.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < extra_edge_prob:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v"; '#' comments.

def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(lines) - 1}")
    edge_list = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected edge line 'u v', got {ln!r}")
        edge_list.append((int(parts[0]), int(parts[1])))
    return make_graph(n, edge_list)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
