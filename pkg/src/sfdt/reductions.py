"""Encode classical coloring problems as valued-cover instances.

Every encoder returns (Cover, ValueMap) so one exact solver decides all of
them: a witness for the encoded instance decodes back to a proper list
coloring, a partition into variable-degeneracy classes, a signed coloring,
or a forested coloring.  Brute-force oracles for the source problems live
here too so the encodings can be checked against direct search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cover import Cover, Transversal, ValueMap, id_cover, make_cover
from .degeneracy import is_strictly_f_degenerate
from .graph import Graph, make_graph


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[frozenset[int], ...]  # colors per vertex, drawn from 1..kappa
    kappa: int

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("palette must be nonempty")
        for v, colors in enumerate(self.lists):
            bad = [cl for cl in colors if not (1 <= cl <= self.kappa)]
            if bad:
                raise ValueError(f"colors {bad} at vertex {v} outside 1..{self.kappa}")

    @staticmethod
    def from_lists(lists, kappa: int | None = None) -> "ListAssignment":
        sets = tuple(frozenset(x) for x in lists)
        if kappa is None:
            kappa = max((max(s) for s in sets if s), default=1)
        return ListAssignment(sets, kappa)


@dataclass(frozen=True)
class SignedGraph:
    base: Graph
    signs: dict[tuple[int, int], int]  # edge (u<v) -> +1 or -1

    def __post_init__(self):
        for e in self.base.sorted_edges():
            if self.signs.get(e) not in (1, -1):
                raise ValueError(f"edge {e} needs a sign +1 or -1")
        if set(self.signs) != self.base.edges:
            raise ValueError("signs must cover exactly the edge set")


@dataclass(frozen=True)
class PartitionSpec:
    classes: tuple[tuple[int, ...], ...]  # classes[i][v] = allowed residual degree

    @property
    def kappa(self) -> int:
        return len(self.classes)

    def value(self, i: int, v: int) -> int:
        return self.classes[i - 1][v]


# ---------------------------------------------------------------------------
# Partitions into variable-degeneracy classes

def encode_partition(g: Graph, spec: PartitionSpec) -> tuple[Cover, ValueMap]:
    """Identity cover; class i's function becomes layer i of the value map."""
    c = id_cover(g, spec.kappa)
    rows = tuple(
        tuple(spec.value(i, v) for i in range(1, spec.kappa + 1)) for v in range(g.n)
    )
    return c, ValueMap(rows)


def decode_partition(c: Cover, r: Transversal) -> tuple[tuple[int, ...], ...]:
    """Vertex classes V_i = {v : v picked layer i}."""
    return tuple(
        tuple(v for v, q in enumerate(r.picks) if q == i)
        for i in range(1, c.kappa + 1)
    )


def encode_from_partition(g: Graph, spec: PartitionSpec, parts) -> Transversal:
    """Rebuild the transversal a vertex partition corresponds to."""
    picks = [0] * g.n
    for i, part in enumerate(parts, start=1):
        for v in part:
            picks[v] = i
    if any(q == 0 for q in picks):
        raise ValueError("parts do not cover every vertex")
    return Transversal(tuple(picks))


def partition_is_valid(g: Graph, spec: PartitionSpec, parts) -> bool:
    """Each class must induce a strictly f_i-degenerate subgraph."""
    seen: set[int] = set()
    for i, part in enumerate(parts, start=1):
        pset = set(part)
        if pset & seen:
            return False
        seen |= pset
        adj = {v: [u for u in g.neighbors(v) if u in pset] for v in pset}
        f = {v: spec.value(i, v) for v in pset}
        if not is_strictly_f_degenerate(adj, f):
            return False
    return seen == set(range(g.n))


def brute_force_partition(g: Graph, spec: PartitionSpec):
    """Direct search over all class assignments; oracle for the encoding."""
    for choice in product(range(1, spec.kappa + 1), repeat=g.n):
        parts = [
            tuple(v for v in range(g.n) if choice[v] == i)
            for i in range(1, spec.kappa + 1)
        ]
        if partition_is_valid(g, spec, parts):
            return parts
    return None


# ---------------------------------------------------------------------------
# List coloring

def encode_list_coloring(g: Graph, L: ListAssignment) -> tuple[Cover, ValueMap]:
    """Identity cover with value 1 exactly on the listed colors."""
    c = id_cover(g, L.kappa)
    rows = tuple(
        tuple(1 if i in L.lists[v] else 0 for i in range(1, L.kappa + 1))
        for v in range(g.n)
    )
    return c, ValueMap(rows)


def decode_coloring(r: Transversal) -> dict[int, int]:
    return {v: q for v, q in enumerate(r.picks)}


def is_proper_list_coloring(g: Graph, L: ListAssignment, phi: dict[int, int]) -> bool:
    if any(phi[v] not in L.lists[v] for v in range(g.n)):
        return False
    return all(phi[u] != phi[v] for u, v in g.sorted_edges())


def brute_force_list_coloring(g: Graph, L: ListAssignment) -> dict[int, int] | None:
    pools = [sorted(L.lists[v]) for v in range(g.n)]
    if any(not p for p in pools):
        return None
    for choice in product(*pools):
        if all(choice[u] != choice[v] for u, v in g.sorted_edges()):
            return dict(enumerate(choice))
    return None


# ---------------------------------------------------------------------------
# DP instances: value maps into {0,1} make a witness an independent transversal

def encode_dp(c: Cover, f: ValueMap, threshold: int) -> ValueMap:
    """Validate a 0/1 value map with per-vertex sums at least the threshold."""
    for v in range(c.base.n):
        for q in range(1, c.kappa + 1):
            if f.at(v, q) not in (0, 1):
                raise ValueError(f"DP values must be 0 or 1, got {f.at(v, q)} at ({v},{q})")
    short = [v for v in range(c.base.n) if f.sum_at(v) < threshold]
    if short:
        raise ValueError(f"value sums below threshold {threshold} at vertices {short}")
    return f


# ---------------------------------------------------------------------------
# Signed coloring

def signed_palette(k: int) -> list[int]:
    """Color set for k colors: 0,+1,-1,... when k is odd, +1,-1,... when even."""
    if k < 1:
        raise ValueError(f"need at least one color, got {k}")
    s = k // 2
    colors = [0] if k % 2 == 1 else []
    for i in range(1, s + 1):
        colors += [i, -i]
    return colors


def encode_signed(sg: SignedGraph, k: int) -> tuple[Cover, ValueMap]:
    """Fibers index the signed palette; matchings join conflicting choices.

    Negation is a bijection of the palette, so each edge really contributes
    a (perfect) matching and the generic solver decides signed colorability.
    """
    palette = signed_palette(k)
    index = {color: i + 1 for i, color in enumerate(palette)}
    g = sg.base
    matchings = {}
    for u, v in g.sorted_edges():
        s = sg.signs[(u, v)]
        matchings[(u, v)] = [(index[s * color], index[color]) for color in palette]
    c = make_cover(g, k, matchings)
    return c, ValueMap.constant(g.n, k, 1)


def decode_signed(r: Transversal, k: int) -> dict[int, int]:
    palette = signed_palette(k)
    return {v: palette[q - 1] for v, q in enumerate(r.picks)}


def is_proper_signed_coloring(sg: SignedGraph, k: int, phi: dict[int, int]) -> bool:
    palette = set(signed_palette(k))
    if any(phi[v] not in palette for v in range(sg.base.n)):
        return False
    return all(
        phi[u] != sg.signs[(u, v)] * phi[v] for u, v in sg.base.sorted_edges()
    )


def brute_force_signed_coloring(sg: SignedGraph, k: int) -> dict[int, int] | None:
    palette = signed_palette(k)
    for choice in product(palette, repeat=sg.base.n):
        phi = dict(enumerate(choice))
        if is_proper_signed_coloring(sg, k, phi):
            return phi
    return None


# ---------------------------------------------------------------------------
# Forested colorings (classes induce forests)

def encode_forested(g: Graph, L: ListAssignment) -> tuple[Cover, ValueMap]:
    """Identity cover with value 2 on listed colors: forests are exactly the
    strictly 2-degenerate graphs."""
    c = id_cover(g, L.kappa)
    rows = tuple(
        tuple(2 if i in L.lists[v] else 0 for i in range(1, L.kappa + 1))
        for v in range(g.n)
    )
    return c, ValueMap(rows)


# ---------------------------------------------------------------------------
# Text formats

def parse_list_assignment(text: str, n: int) -> ListAssignment:
    """One line per vertex: 'v: c1 c2 ...'."""
    lists: dict[int, frozenset[int]] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        head, _, rest = ln.partition(":")
        if not _:
            raise ValueError(f"expected 'v: colors', got {ln!r}")
        v = int(head)
        if not (0 <= v < n):
            raise ValueError(f"vertex {v} out of range")
        if v in lists:
            raise ValueError(f"vertex {v} listed twice")
        lists[v] = frozenset(int(x) for x in rest.split())
    missing = [v for v in range(n) if v not in lists]
    if missing:
        raise ValueError(f"missing lists for vertices {missing}")
    return ListAssignment.from_lists([lists[v] for v in range(n)])


def parse_signed_edge_list(text: str) -> SignedGraph:
    """Edge-list format with a trailing sign per edge line: 'u v +1'."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty signed edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    signs = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"expected 'u v sign', got {ln!r}")
        u, v, s = int(parts[0]), int(parts[1]), int(parts[2])
        if s not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {s}")
        edges.append((u, v))
        signs[(min(u, v), max(u, v))] = s
    g = make_graph(n, edges)
    return SignedGraph(g, signs)
