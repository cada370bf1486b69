"""Covers of a base graph: fibers, per-edge matchings, value maps, transversals.

A cover H of G places a fiber X_v = {(v,1),...,(v,kappa)} above every base
vertex and joins consecutive fibers by a (possibly empty, possibly partial)
matching per base edge.  Fibers are always independent sets.  A transversal
picks one cover vertex per fiber; the induced subgraph H[R] is what the
degeneracy machinery judges.

All objects here are immutable after construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .graph import Graph, make_graph, cycle_graph, complete_graph

Pair = tuple[int, int]  # cover vertex (v, q); q is 1-based
MatchingMap = dict[tuple[int, int], tuple[Pair, ...]]


@dataclass(frozen=True, eq=False)
class Cover:
    base: Graph
    kappa: int
    # edge (u,v) with u<v maps to sorted pairs (p,q) meaning (u,p)~(v,q)
    matchings: MatchingMap

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cover)
            and self.base == other.base
            and self.kappa == other.kappa
            and self.matchings == other.matchings
        )

    def vertices(self) -> list[Pair]:
        return [(v, q) for v in range(self.base.n) for q in range(1, self.kappa + 1)]

    def matching(self, u: int, v: int) -> tuple[Pair, ...]:
        """Pairs of the matching on base edge uv, oriented as (index at u, index at v)."""
        if u < v:
            return self.matchings.get((u, v), ())
        return tuple(sorted((q, p) for p, q in self.matchings.get((v, u), ())))

    def matched(self, u: int, p: int, v: int, q: int) -> bool:
        """True when (u,p) and (v,q) are adjacent in the cover."""
        if u > v:
            u, p, v, q = v, q, u, p
        return (p, q) in self.matchings.get((u, v), ())

    @cached_property
    def adjacency(self) -> dict[Pair, tuple[Pair, ...]]:
        nbrs: dict[Pair, list[Pair]] = {x: [] for x in self.vertices()}
        for (u, v), pairs in self.matchings.items():
            for p, q in pairs:
                nbrs[(u, p)].append((v, q))
                nbrs[(v, q)].append((u, p))
        return {x: tuple(sorted(a)) for x, a in nbrs.items()}

    @cached_property
    def flat_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency over int-encoded cover vertices v*kappa + (q-1); solver hot path."""
        k = self.kappa
        nbrs: list[list[int]] = [[] for _ in range(self.base.n * k)]
        for (u, v), pairs in self.matchings.items():
            for p, q in pairs:
                a = u * k + p - 1
                b = v * k + q - 1
                nbrs[a].append(b)
                nbrs[b].append(a)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def __repr__(self) -> str:
        return f"Cover(n={self.base.n}, kappa={self.kappa}, m={len(self.matchings)})"


@dataclass(frozen=True)
class ValueMap:
    rows: tuple[tuple[int, ...], ...]  # rows[v][q-1]

    def __post_init__(self):
        for v, row in enumerate(self.rows):
            for q, val in enumerate(row, start=1):
                if val < 0:
                    raise ValueError(f"negative value {val} at ({v},{q})")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def kappa(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def at(self, v: int, q: int) -> int:
        return self.rows[v][q - 1]

    def sum_at(self, v: int) -> int:
        return sum(self.rows[v])

    def as_dict(self) -> dict[Pair, int]:
        return {(v, q): val for v, row in enumerate(self.rows) for q, val in enumerate(row, start=1)}

    def with_entry(self, v: int, q: int, value: int) -> "ValueMap":
        rows = [list(r) for r in self.rows]
        rows[v][q - 1] = value
        return ValueMap(tuple(tuple(r) for r in rows))

    @staticmethod
    def constant(n: int, kappa: int, value: int) -> "ValueMap":
        return ValueMap(tuple((value,) * kappa for _ in range(n)))

    @staticmethod
    def from_rows(rows) -> "ValueMap":
        return ValueMap(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class Transversal:
    picks: tuple[int, ...]  # picks[v] in 1..kappa

    def pairs(self) -> tuple[Pair, ...]:
        return tuple((v, q) for v, q in enumerate(self.picks))


@dataclass(frozen=True, eq=False)
class CoverSubgraph:
    cover: Cover
    vertex_set: frozenset[Pair]

    @cached_property
    def adjacency(self) -> dict[Pair, tuple[Pair, ...]]:
        full = self.cover.adjacency
        return {
            x: tuple(y for y in full[x] if y in self.vertex_set)
            for x in sorted(self.vertex_set)
        }

    def edges(self) -> list[tuple[Pair, Pair]]:
        out = []
        for x, nbrs in self.adjacency.items():
            for y in nbrs:
                if x < y:
                    out.append((x, y))
        return sorted(out)

    def degree(self, x: Pair) -> int:
        return len(self.adjacency[x])

    def components(self) -> list[frozenset[Pair]]:
        seen: set[Pair] = set()
        comps = []
        for root in sorted(self.vertex_set):
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps


# ---------------------------------------------------------------------------
# Construction

def _normalize_matching(kappa: int, edge: tuple[int, int], pairs) -> tuple[Pair, ...]:
    u, v = edge
    seen_left: set[int] = set()
    seen_right: set[int] = set()
    out = []
    for p, q in pairs:
        if not (1 <= p <= kappa and 1 <= q <= kappa):
            raise ValueError(f"matching index ({p},{q}) on edge ({u},{v}) out of 1..{kappa}")
        if p in seen_left or q in seen_right:
            raise ValueError(f"pairs on edge ({u},{v}) do not form a matching")
        seen_left.add(p)
        seen_right.add(q)
        out.append((p, q))
    return tuple(sorted(out))


def make_cover(g: Graph, kappa: int, matchings) -> Cover:
    """Build a cover from {edge: pair list}.  Missing edges get empty matchings."""
    if kappa < 1:
        raise ValueError(f"kappa must be positive, got {kappa}")
    norm: MatchingMap = {}
    for edge, pairs in matchings.items():
        u, v = min(edge), max(edge)
        if not g.has_edge(u, v):
            raise ValueError(f"matching given for non-edge ({u},{v})")
        if (u, v) in norm:
            raise ValueError(f"duplicate matching for edge ({u},{v})")
        oriented = pairs if edge[0] < edge[1] else [(q, p) for p, q in pairs]
        norm[(u, v)] = _normalize_matching(kappa, (u, v), oriented)
    for e in g.sorted_edges():
        norm.setdefault(e, ())
    return Cover(g, kappa, dict(sorted(norm.items())))


def id_cover(g: Graph, kappa: int) -> Cover:
    """All matchings are the identity; isomorphic to g stacked kappa times."""
    ident = [(q, q) for q in range(1, kappa + 1)]
    return make_cover(g, kappa, {e: ident for e in g.sorted_edges()})


def circular_ladder_cover(n: int) -> Cover:
    """Two-layer identity cover of the n-cycle (two disjoint n-cycles)."""
    return id_cover(cycle_graph(n), 2)


def mobius_ladder_cover(n: int) -> Cover:
    """Two-layer cover of the n-cycle whose closing edge swaps the layers.

    The full cover subgraph is a single 2n-cycle.
    """
    if n < 3:
        raise ValueError(f"Mobius ladder needs a cycle of length >= 3, got {n}")
    g = cycle_graph(n)
    matchings = {}
    for u, v in g.sorted_edges():
        if (u, v) == (0, n - 1):
            matchings[(u, v)] = [(1, 2), (2, 1)]
        else:
            matchings[(u, v)] = [(1, 1), (2, 2)]
    return make_cover(g, 2, matchings)


def tilde_complete_cover(p: int, kappa: int) -> Cover:
    """Identity cover of K_p: kappa disjoint copies of K_p."""
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    return id_cover(complete_graph(p), kappa)


# ---------------------------------------------------------------------------
# Derived subgraphs

def kernel(c: Cover, f: ValueMap) -> CoverSubgraph:
    """Induced cover subgraph on the vertices with positive value."""
    keep = frozenset(
        (v, q) for v in range(c.base.n) for q in range(1, c.kappa + 1) if f.at(v, q) > 0
    )
    return CoverSubgraph(c, keep)


def induced_on_transversal(c: Cover, r: Transversal) -> CoverSubgraph:
    if len(r.picks) != c.base.n:
        raise ValueError("transversal length does not match base")
    for v, q in enumerate(r.picks):
        if not (1 <= q <= c.kappa):
            raise ValueError(f"pick {q} at vertex {v} out of 1..{c.kappa}")
    return CoverSubgraph(c, frozenset(r.pairs()))


def induced_cover(c: Cover, f: ValueMap, keep) -> tuple[Cover, ValueMap, list[int]]:
    """Sub-cover on a base vertex subset.  Returns (cover, values, old_of_new)."""
    old = sorted(set(keep))
    pos = {v: i for i, v in enumerate(old)}
    edges = [(pos[u], pos[v]) for u, v in c.base.sorted_edges() if u in pos and v in pos]
    g2 = make_graph(len(old), edges)
    m2 = {}
    for u, v in c.base.sorted_edges():
        if u in pos and v in pos:
            a, b = pos[u], pos[v]
            pairs = c.matchings[(u, v)]
            m2[(min(a, b), max(a, b))] = pairs if a < b else [(q, p) for p, q in pairs]
    f2 = ValueMap(tuple(f.rows[v] for v in old))
    return make_cover(g2, c.kappa, m2), f2, old


def delete_fiber(c: Cover, f: ValueMap, v: int) -> tuple[Cover, ValueMap, list[int]]:
    return induced_cover(c, f, [u for u in range(c.base.n) if u != v])


def transversal_degrees(c: Cover, r: Transversal) -> dict[Pair, int]:
    """Degree of each pick inside H[R]."""
    picks = r.pairs()
    chosen = {v: q for v, q in picks}
    deg = {x: 0 for x in picks}
    for u, v in c.base.sorted_edges():
        if c.matched(u, chosen[u], v, chosen[v]):
            deg[(u, chosen[u])] += 1
            deg[(v, chosen[v])] += 1
    return deg


def transversal_edge_count(c: Cover, r: Transversal) -> int:
    chosen = r.picks
    return sum(
        1 for u, v in c.base.sorted_edges() if c.matched(u, chosen[u], v, chosen[v])
    )


def is_semi_constant(c: Cover, f: ValueMap) -> bool:
    """True when f is constant on every connected component of the full cover."""
    full = CoverSubgraph(c, frozenset(c.vertices()))
    for comp in full.components():
        vals = {f.at(v, q) for v, q in comp}
        if len(vals) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# JSON instance format:
# { "n": int, "kappa": int, "edges": [[u,v],...],
#   "matchings": {"u-v": [[p,q],...]},       # omitted matchings are empty
#   "f": [[v,q,value],...] }                 # omitted entries are 0

def cover_to_json(c: Cover, f: ValueMap | None = None) -> dict:
    obj = {
        "n": c.base.n,
        "kappa": c.kappa,
        "edges": [list(e) for e in c.base.sorted_edges()],
        "matchings": {
            f"{u}-{v}": [list(p) for p in pairs]
            for (u, v), pairs in sorted(c.matchings.items())
            if pairs
        },
    }
    if f is not None:
        obj["f"] = [
            [v, q, f.at(v, q)]
            for v in range(c.base.n)
            for q in range(1, c.kappa + 1)
            if f.at(v, q) != 0
        ]
    return obj


def cover_from_json(obj: dict) -> tuple[Cover, ValueMap]:
    try:
        n = int(obj["n"])
        kappa = int(obj["kappa"])
        edges = [tuple(int(x) for x in e) for e in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed cover object: {exc}") from exc
    g = make_graph(n, edges)
    matchings = {}
    for key, pairs in obj.get("matchings", {}).items():
        try:
            u, v = (int(x) for x in key.split("-"))
        except ValueError as exc:
            raise ValueError(f"bad matching key {key!r}") from exc
        if u >= v:
            raise ValueError(f"matching key {key!r} must use u<v")
        matchings[(u, v)] = [tuple(int(x) for x in p) for p in pairs]
    c = make_cover(g, kappa, matchings)
    rows = [[0] * kappa for _ in range(n)]
    for entry in obj.get("f", []):
        v, q, val = (int(x) for x in entry)
        if not (0 <= v < n and 1 <= q <= kappa):
            raise ValueError(f"f entry ({v},{q}) out of range")
        rows[v][q - 1] = val
    return c, ValueMap.from_rows(rows)


def canonical_instance_json(c: Cover, f: ValueMap | None = None) -> str:
    return json.dumps(cover_to_json(c, f), sort_keys=True, separators=(",", ":"))
