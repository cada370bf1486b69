"""Recognition of building covers and constructible valued covers.

A building cover over a connected base B has per-vertex value sums equal to
the base degree and one of four shapes: the kernel is a copy of B itself
(monoblock); the base is complete and the kernel splits into stacked
complete copies with a constant value each; the base is an odd cycle and the
kernel is the two-layer circular ladder with all values 1; the base is an
even cycle and the kernel is the Mobius ladder with all values 1.

Constructible covers arise from building covers by repeatedly gluing two
covers at a single base vertex, adding the values on the shared fiber.
Recognition works per block: gluing never merges edges, so every block of
the base ends up inside a single building leaf, and a multi-block monoblock
always splits into per-block monoblocks.  The search enumerates, for each
cut vertex, all ways to split its value row across the incident blocks with
the per-block sums pinned to the block degrees, and accepts when every
block becomes a building cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import Cover, ValueMap, induced_cover, kernel
from .graph import blocks, is_complete, is_connected, is_cycle


@dataclass(frozen=True)
class BuildingKind:
    tag: str  # monoblock | tilde_complete | odd_cycle_ladder | even_cycle_mobius
    picks: tuple[int, ...] | None = None            # monoblock: chosen index per vertex
    copies: tuple[tuple[int, ...], ...] | None = None  # stacked complete: index per vertex, per copy
    constants: tuple[int, ...] | None = None        # stacked complete: value per copy
    layers: tuple[tuple[int, int], ...] | None = None  # ladders: the two kernel indices per vertex

    def to_json(self) -> dict:
        obj: dict = {"tag": self.tag}
        if self.picks is not None:
            obj["picks"] = list(self.picks)
        if self.copies is not None:
            obj["copies"] = [list(c) for c in self.copies]
        if self.constants is not None:
            obj["constants"] = list(self.constants)
        if self.layers is not None:
            obj["layers"] = [list(l) for l in self.layers]
        return obj


@dataclass(frozen=True)
class ConstructionLeaf:
    vertices: tuple[int, ...]              # global base vertices, sorted
    share: tuple[tuple[int, ...], ...]     # value rows aligned with vertices
    kind: BuildingKind                     # witnesses use leaf-local indices


@dataclass(frozen=True)
class Gluing:
    cut_vertex: int
    left: tuple[int, ...]   # accumulated values on the shared fiber before gluing
    right: tuple[int, ...]  # glued leaf's values on the shared fiber


@dataclass(frozen=True)
class ConstructionTree:
    leaves: tuple[ConstructionLeaf, ...]   # in gluing order
    gluings: tuple[Gluing, ...]            # gluings[i] attaches leaves[i+1]

    def to_json(self) -> dict:
        return {
            "leaves": [
                {
                    "vertices": list(leaf.vertices),
                    "share": [list(r) for r in leaf.share],
                    "kind": leaf.kind.to_json(),
                }
                for leaf in self.leaves
            ],
            "gluings": [
                {"cut_vertex": g.cut_vertex, "left": list(g.left), "right": list(g.right)}
                for g in self.gluings
            ],
        }


# ---------------------------------------------------------------------------
# Building-cover recognition

def _positive_indices(c: Cover, f: ValueMap) -> list[tuple[int, ...]]:
    return [
        tuple(q for q in range(1, c.kappa + 1) if f.at(v, q) > 0)
        for v in range(c.base.n)
    ]


def _match_monoblock(c: Cover, f: ValueMap, pos) -> BuildingKind | None:
    if any(len(p) != 1 for p in pos):
        return None
    picks = tuple(p[0] for p in pos)
    for u, v in c.base.sorted_edges():
        if not c.matched(u, picks[u], v, picks[v]):
            return None
    return BuildingKind("monoblock", picks=picks)


def _match_stacked_complete(c: Cover, f: ValueMap, pos) -> BuildingKind | None:
    p = c.base.n
    t = len(pos[0])
    if t == 0 or any(len(x) != t for x in pos):
        return None
    comps = kernel(c, f).components()
    if len(comps) != t:
        return None
    copies = []
    constants = []
    for comp in comps:
        byv: dict[int, int] = {}
        for v, q in comp:
            if v in byv:
                return None
            byv[v] = q
        if len(byv) != p:
            return None
        for u, v in c.base.sorted_edges():
            if not c.matched(u, byv[u], v, byv[v]):
                return None
        vals = {f.at(v, q) for v, q in comp}
        if len(vals) != 1:
            return None
        copies.append(tuple(byv[v] for v in range(p)))
        constants.append(vals.pop())
    order = sorted(range(t), key=lambda i: copies[i][0])
    return BuildingKind(
        "tilde_complete",
        copies=tuple(copies[i] for i in order),
        constants=tuple(constants[i] for i in order),
    )


def _cycle_order(g) -> list[int]:
    order = [0, g.neighbors(0)[0]]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = [w for w in g.neighbors(cur) if w != prev][0]
        if nxt == 0:
            return order
        order.append(nxt)


def _match_cycle_ladder(c: Cover, f: ValueMap, pos) -> BuildingKind | None:
    g = c.base
    n = g.n
    if any(len(x) != 2 for x in pos):
        return None
    # degree equality plus two positive entries forces value 1 on the kernel
    cyc = _cycle_order(g)
    maps = []
    for i in range(n):
        a, b = cyc[i], cyc[(i + 1) % n]
        m = {p: q for p in pos[a] for q in pos[b] if c.matched(a, p, b, q)}
        if len(m) != 2:
            return None
        maps.append(m)
    top, bot = pos[cyc[0]]
    per_vertex = {cyc[0]: (top, bot)}
    x, y = top, bot
    for i in range(n - 1):
        x, y = maps[i][x], maps[i][y]
        per_vertex[cyc[i + 1]] = (x, y)
    back = (maps[n - 1][x], maps[n - 1][y])
    layers = tuple(per_vertex[v] for v in range(n))
    if n % 2 == 1 and back == (top, bot):
        return BuildingKind("odd_cycle_ladder", layers=layers)
    if n % 2 == 0 and back == (bot, top):
        return BuildingKind("even_cycle_mobius", layers=layers)
    return None


def check_building(c: Cover, f: ValueMap) -> BuildingKind | None:
    """Match one of the four building shapes; None when none applies."""
    g = c.base
    if g.n == 0 or not is_connected(g):
        raise ValueError("building check needs a connected nonempty base")
    if any(f.sum_at(v) != g.degree(v) for v in range(g.n)):
        return None
    pos = _positive_indices(c, f)
    kind = _match_monoblock(c, f, pos)
    if kind is not None:
        return kind
    if g.n >= 2 and is_complete(g):
        kind = _match_stacked_complete(c, f, pos)
        if kind is not None:
            return kind
    if is_cycle(g):
        kind = _match_cycle_ladder(c, f, pos)
        if kind is not None:
            return kind
    return None


def verify_building(c: Cover, f: ValueMap, kind: BuildingKind) -> bool:
    """Independent recheck that the witness data exhibits the tagged shape."""
    g = c.base
    if g.n == 0 or not is_connected(g):
        return False
    if any(f.sum_at(v) != g.degree(v) for v in range(g.n)):
        return False
    pos = _positive_indices(c, f)
    if kind.tag == "monoblock":
        picks = kind.picks
        if picks is None or len(picks) != g.n:
            return False
        if any(pos[v] != (picks[v],) for v in range(g.n)):
            return False
        return all(c.matched(u, picks[u], v, picks[v]) for u, v in g.sorted_edges())
    if kind.tag == "tilde_complete":
        if kind.copies is None or kind.constants is None:
            return False
        if g.n < 2 or not is_complete(g):
            return False
        claimed: dict[int, set[int]] = {v: set() for v in range(g.n)}
        for row, const in zip(kind.copies, kind.constants):
            if const <= 0 or len(row) != g.n:
                return False
            for v, q in enumerate(row):
                if f.at(v, q) != const or q in claimed[v]:
                    return False
                claimed[v].add(q)
            if not all(c.matched(u, row[u], v, row[v]) for u, v in g.sorted_edges()):
                return False
        return all(set(pos[v]) == claimed[v] for v in range(g.n))
    if kind.tag in ("odd_cycle_ladder", "even_cycle_mobius"):
        if kind.layers is None or len(kind.layers) != g.n or not is_cycle(g):
            return False
        if kind.tag == "odd_cycle_ladder" and g.n % 2 == 0:
            return False
        if kind.tag == "even_cycle_mobius" and g.n % 2 == 1:
            return False
        for v, (a, b) in enumerate(kind.layers):
            if a == b or set((a, b)) != set(pos[v]):
                return False
            if f.at(v, a) != 1 or f.at(v, b) != 1:
                return False
        crossed = 0
        for u, v in g.sorted_edges():
            ua, ub = kind.layers[u]
            va, vb = kind.layers[v]
            parallel = c.matched(u, ua, v, va) and c.matched(u, ub, v, vb)
            cross = c.matched(u, ua, v, vb) and c.matched(u, ub, v, va)
            if parallel:
                continue
            if cross:
                crossed += 1
            else:
                return False
        # layer-preserving walks close up iff the number of crossings is even
        return crossed % 2 == (0 if kind.tag == "odd_cycle_ladder" else 1)
    return False


# ---------------------------------------------------------------------------
# Constructibility

def _vectors_under(cap: list[int], total: int) -> list[tuple[int, ...]]:
    """Nonnegative vectors componentwise at most cap with the given sum."""
    if total < 0:
        return []
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(cap) - 1:
            if 0 <= left <= cap[-1]:
                out.append(tuple(acc + [left]))
            return
        for x in range(0, min(cap[i], left) + 1):
            rec(i + 1, left - x, acc + [x])

    if cap:
        rec(0, total, [])
    elif total == 0:
        out.append(())
    return out


def _splits(fvec: tuple[int, ...], targets: list[int]):
    """Split fvec into len(targets) nonneg vectors with the given sums."""

    def rec(i: int, remaining: list[int]):
        if i == len(targets) - 1:
            if sum(remaining) == targets[-1]:
                yield (tuple(remaining),)
            return
        for vec in _vectors_under(remaining, targets[i]):
            rest = [r - x for r, x in zip(remaining, vec)]
            for tail in rec(i + 1, rest):
                yield (vec,) + tail

    yield from rec(0, list(fvec))


@dataclass
class _BlockData:
    gset: tuple[int, ...]
    sub: Cover
    local: dict[int, int]
    cuts: tuple[int, ...]


def is_constructible(c: Cover, f: ValueMap) -> ConstructionTree | None:
    g = c.base
    if not is_connected(g):
        raise ValueError("constructibility is defined for connected bases")
    if any(f.sum_at(v) != g.degree(v) for v in range(g.n)):
        return None
    dec = blocks(g)
    if len(dec.blocks) == 0:
        return None
    if len(dec.blocks) == 1:
        kind = check_building(c, f)
        if kind is None:
            return None
        leaf = ConstructionLeaf(tuple(range(g.n)), f.rows, kind)
        return ConstructionTree((leaf,), ())

    cuts = sorted(dec.cut_vertices)
    binfo: list[_BlockData] = []
    for bset in dec.blocks:
        sub, _, old = induced_cover(c, f, bset)
        local = {v: i for i, v in enumerate(old)}
        bcuts = tuple(w for w in cuts if w in local)
        binfo.append(_BlockData(tuple(old), sub, local, bcuts))

    cut_step = {w: i for i, w in enumerate(cuts)}
    last_step = [max(cut_step[w] for w in b.cuts) for b in binfo]
    cut_blocks = {w: [bi for bi, b in enumerate(binfo) if w in b.local] for w in cuts}

    shares: dict[tuple[int, int], tuple[int, ...]] = {}
    kinds: dict[int, BuildingKind] = {}
    memo: dict[tuple[int, tuple], BuildingKind | None] = {}

    def block_rows(bi: int) -> tuple[tuple[int, ...], ...]:
        b = binfo[bi]
        return tuple(
            shares[(bi, v)] if v in cut_step else f.rows[v] for v in b.gset
        )

    def block_ok(bi: int) -> bool:
        rows = block_rows(bi)
        key = (bi, rows)
        if key not in memo:
            memo[key] = check_building(binfo[bi].sub, ValueMap(rows))
        kind = memo[key]
        if kind is None:
            return False
        kinds[bi] = kind
        return True

    def assign(ci: int) -> bool:
        if ci == len(cuts):
            return True
        w = cuts[ci]
        bis = cut_blocks[w]
        targets = [binfo[bi].sub.base.degree(binfo[bi].local[w]) for bi in bis]
        for split in _splits(f.rows[w], targets):
            for bi, vec in zip(bis, split):
                shares[(bi, w)] = vec
            if all(block_ok(bi) for bi in bis if last_step[bi] == ci) and assign(ci + 1):
                return True
        for bi in bis:
            shares.pop((bi, w), None)
        return False

    if not assign(0):
        return None

    # assemble leaves in a deterministic attach order over the block-cut tree
    attached = [0]
    remaining = set(range(len(binfo))) - {0}
    covered = set(binfo[0].gset)
    order_glue: list[int] = []
    while remaining:
        nxt = None
        for bi in sorted(remaining):
            shared = covered & set(binfo[bi].gset)
            if shared:
                nxt = bi
                (w,) = shared  # block-cut structure is a tree
                order_glue.append(w)
                break
        attached.append(nxt)
        remaining.remove(nxt)
        covered |= set(binfo[nxt].gset)

    leaves = []
    for bi in attached:
        leaves.append(ConstructionLeaf(binfo[bi].gset, block_rows(bi), kinds[bi]))
    acc: dict[int, list[int]] = {}
    for i, v in enumerate(leaves[0].vertices):
        acc[v] = list(leaves[0].share[i])
    gluings = []
    for leaf, w in zip(leaves[1:], order_glue):
        right = leaf.share[leaf.vertices.index(w)]
        gluings.append(Gluing(w, tuple(acc.get(w, [0] * c.kappa)), right))
        for i, v in enumerate(leaf.vertices):
            if v not in acc:
                acc[v] = [0] * c.kappa
            for qi in range(c.kappa):
                acc[v][qi] += leaf.share[i][qi]
    return ConstructionTree(tuple(leaves), tuple(gluings))


def verify_construction_tree(tree: ConstructionTree, c: Cover, f: ValueMap) -> bool:
    """Recombine the tree and check it reproduces (c, f) from building leaves."""
    g = c.base
    if not tree.leaves or len(tree.gluings) != len(tree.leaves) - 1:
        return False

    edge_multiset: list = []
    seen_vertices: set[int] = set()
    for leaf in tree.leaves:
        vs = set(leaf.vertices)
        if tuple(sorted(vs)) != leaf.vertices or len(leaf.share) != len(leaf.vertices):
            return False
        seen_vertices |= vs
        edge_multiset.extend(e for e in g.sorted_edges() if e[0] in vs and e[1] in vs)
    if seen_vertices != set(range(g.n)) or sorted(edge_multiset) != g.sorted_edges():
        return False

    total = [[0] * c.kappa for _ in range(g.n)]
    for leaf in tree.leaves:
        for i, v in enumerate(leaf.vertices):
            row = leaf.share[i]
            if len(row) != c.kappa or any(x < 0 for x in row):
                return False
            for qi in range(c.kappa):
                total[v][qi] += row[qi]
    if tuple(tuple(r) for r in total) != f.rows:
        return False

    for leaf in tree.leaves:
        sub, _, _ = induced_cover(c, f, leaf.vertices)
        vmap = ValueMap.from_rows(leaf.share)
        if not verify_building(sub, vmap, leaf.kind):
            return False

    covered = set(tree.leaves[0].vertices)
    acc: dict[int, list[int]] = {
        v: list(tree.leaves[0].share[i]) for i, v in enumerate(tree.leaves[0].vertices)
    }
    for leaf, glue in zip(tree.leaves[1:], tree.gluings):
        shared = covered & set(leaf.vertices)
        if shared != {glue.cut_vertex}:
            return False
        w = glue.cut_vertex
        if tuple(acc[w]) != glue.left:
            return False
        if leaf.share[leaf.vertices.index(w)] != glue.right:
            return False
        covered |= set(leaf.vertices)
        for i, v in enumerate(leaf.vertices):
            if v not in acc:
                acc[v] = [0] * c.kappa
            for qi in range(c.kappa):
                acc[v][qi] += leaf.share[i][qi]
    return covered == set(range(g.n))
