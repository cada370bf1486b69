"""Exact search for strictly f-degenerate transversals.

The search assigns fibers in a BFS order from a maximum-degree root and
prunes a partial assignment as soon as the already-picked cover vertices
fail the greedy peel: strict f-degeneracy is hereditary, so a stuck partial
pick set can never extend to a witness.  Correctness rests on exhaustive
search; the ordering and pruning only affect node counts.

Degree-capped refinements run a deficiency descent from any witness:
def(R) = |E(H[R])| - sum of f over R drops strictly at every swap, so the
descent terminates.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from .cover import (
    Cover,
    Transversal,
    ValueMap,
    delete_fiber,
    transversal_degrees,
    transversal_edge_count,
)

FOUND = "found"
EXHAUSTED = "exhausted"
ABORTED = "aborted"


@dataclass(frozen=True)
class SolveResult:
    status: str
    witness: Transversal | None
    nodes_expanded: int
    bounded: bool = False
    descent_defs: tuple[int, ...] = field(default=())

    def found(self) -> bool:
        return self.status == FOUND


class SearchLimit(Exception):
    pass


def degree_condition(c: Cover, f: ValueMap) -> bool:
    """Per-vertex value sums at least the base degree."""
    return all(f.sum_at(v) >= c.base.degree(v) for v in range(c.base.n))


def strict_degree_condition(c: Cover, f: ValueMap) -> bool:
    return all(f.sum_at(v) > c.base.degree(v) for v in range(c.base.n))


def _fiber_order(c: Cover) -> list[int]:
    """BFS from a max-degree root per component; ties to the lowest index."""
    g = c.base
    seen = [False] * g.n
    order: list[int] = []
    comps: list[list[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        i = 0
        while i < len(comp):
            for w in g.neighbors(comp[i]):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            i += 1
        comps.append(sorted(comp))
    for comp in comps:
        start = max(comp, key=lambda v: (g.degree(v), -v))
        visited = {start}
        queue = [start]
        i = 0
        while i < len(queue):
            v = queue[i]
            i += 1
            for w in g.neighbors(v):
                if w not in visited:
                    visited.add(w)
                    queue.append(w)
        order.extend(queue)
    return order


def _peel_ok(picked: list[int], adj, fvals: list[int]) -> bool:
    """Greedy peel over int-encoded cover vertices; True if everything peels."""
    alive = set(picked)
    deg = {}
    for x in picked:
        d = 0
        for y in adj[x]:
            if y in alive:
                d += 1
        deg[x] = d
    pending = sorted(alive)
    while alive:
        pick = -1
        for x in pending:
            if x in alive and deg[x] < fvals[x]:
                pick = x
                break
        if pick < 0:
            return False
        alive.remove(pick)
        for y in adj[pick]:
            if y in alive:
                deg[y] -= 1
    return True


def find_sfdt(
    c: Cover,
    f: ValueMap,
    *,
    max_nodes: int | None = None,
    timeout_s: float | None = None,
) -> SolveResult:
    """Complete backtracking search over the kappa^n transversal space."""
    g = c.base
    k = c.kappa
    adj = c.flat_adjacency
    fvals = [f.at(v, q) for v in range(g.n) for q in range(1, k + 1)]
    order = _fiber_order(c)
    deadline = time.monotonic() + timeout_s if timeout_s is not None else None

    picks = [0] * g.n
    stack: list[int] = []  # int-encoded picked cover vertices, assignment order
    nodes = 0

    def step(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for q in range(1, k + 1):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise SearchLimit
            if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
                raise SearchLimit
            cid = v * k + q - 1
            stack.append(cid)
            if _peel_ok(stack, adj, fvals):
                picks[v] = q
                if step(i + 1):
                    return True
            stack.pop()
        return False

    try:
        ok = step(0)
    except SearchLimit:
        return SolveResult(ABORTED, None, nodes)
    if not ok:
        return SolveResult(EXHAUSTED, None, nodes)
    witness = Transversal(tuple(picks))
    return SolveResult(FOUND, witness, nodes, bounded=_is_bounded(c, f, witness))


def brute_force_find_sfdt(c: Cover, f: ValueMap) -> Transversal | None:
    """Oracle: test every transversal in lexicographic order with the peel."""
    adj = c.flat_adjacency
    k = c.kappa
    fvals = [f.at(v, q) for v in range(c.base.n) for q in range(1, k + 1)]
    for choice in product(range(1, k + 1), repeat=c.base.n):
        cids = [v * k + q - 1 for v, q in enumerate(choice)]
        if _peel_ok(cids, adj, fvals):
            return Transversal(choice)
    return None


def deficiency(c: Cover, f: ValueMap, r: Transversal) -> int:
    """Edge count of H[R] minus the sum of f over the picks."""
    return transversal_edge_count(c, r) - sum(f.at(v, q) for v, q in r.pairs())


def _is_bounded(c: Cover, f: ValueMap, r: Transversal, strict: bool = False) -> bool:
    deg = transversal_degrees(c, r)
    if strict:
        return all(d < f.at(v, q) for (v, q), d in deg.items())
    return all(d <= f.at(v, q) for (v, q), d in deg.items())


def _descent(c: Cover, f: ValueMap, r: Transversal, strict: bool) -> tuple[Transversal, tuple[int, ...]]:
    """Swap out picks whose degree violates the cap; def(R) strictly drops.

    Requires the degree condition (strict for the strict variant) so a
    replacement index always exists.  The violator and its replacement both
    break ties to the lowest index for reproducibility.
    """
    picks = list(r.picks)
    trace = [deficiency(c, f, r)]
    while True:
        cur = Transversal(tuple(picks))
        deg = transversal_degrees(c, cur)
        violator = None
        for v, q in sorted(deg):
            d = deg[(v, q)]
            if d > f.at(v, q) or (strict and d >= f.at(v, q)):
                violator = (v, q)
                break
        if violator is None:
            return cur, tuple(trace)
        w, _ = violator
        chosen = {v: picks[v] for v in range(c.base.n) if v != w}
        replacement = None
        for q in range(1, c.kappa + 1):
            d = sum(
                1 for u in c.base.neighbors(w) if c.matched(w, q, u, chosen[u])
            )
            if d < f.at(w, q):
                replacement = q
                break
        if replacement is None:
            raise RuntimeError("no replacement pick; degree condition violated")
        picks[w] = replacement
        trace.append(deficiency(c, f, Transversal(tuple(picks))))
        if trace[-1] >= trace[-2]:
            raise RuntimeError("deficiency failed to decrease")


def deficiency_descent(
    c: Cover, f: ValueMap, r: Transversal, strict: bool = False
) -> tuple[Transversal, tuple[int, ...]]:
    """Upgrade a witness to a degree-capped one; returns it with the def trace."""
    return _descent(c, f, r, strict)


def find_sfdt_bounded(
    c: Cover,
    f: ValueMap,
    *,
    max_nodes: int | None = None,
    timeout_s: float | None = None,
) -> SolveResult:
    """Witness additionally satisfying deg_R(v,q) <= f(v,q) at every pick.

    Under the degree condition the deficiency descent upgrades any witness.
    Without it, falls back to exhaustive search for a capped witness and
    reports the plain one (bounded=False) when none exists.
    """
    base = find_sfdt(c, f, max_nodes=max_nodes, timeout_s=timeout_s)
    if base.status != FOUND:
        return base
    if degree_condition(c, f):
        witness, trace = _descent(c, f, base.witness, strict=False)
        return SolveResult(FOUND, witness, base.nodes_expanded, bounded=True, descent_defs=trace)
    adj = c.flat_adjacency
    k = c.kappa
    fvals = [f.at(v, q) for v in range(c.base.n) for q in range(1, k + 1)]
    for choice in product(range(1, k + 1), repeat=c.base.n):
        cand = Transversal(choice)
        if _is_bounded(c, f, cand, strict=False):
            cids = [v * k + q - 1 for v, q in enumerate(choice)]
            if _peel_ok(cids, adj, fvals):
                return SolveResult(FOUND, cand, base.nodes_expanded, bounded=True)
    return base


def find_sfdt_strictly_bounded(
    c: Cover,
    f: ValueMap,
    *,
    max_nodes: int | None = None,
    timeout_s: float | None = None,
) -> SolveResult:
    """Witness with deg_R(v,q) < f(v,q) everywhere; needs strict value sums."""
    bad = [v for v in range(c.base.n) if f.sum_at(v) <= c.base.degree(v)]
    if bad:
        raise ValueError(
            f"strict variant needs per-vertex value sums above the degree; fails at {bad}"
        )
    base = find_sfdt(c, f, max_nodes=max_nodes, timeout_s=timeout_s)
    if base.status != FOUND:
        return base
    witness, trace = _descent(c, f, base.witness, strict=True)
    return SolveResult(FOUND, witness, base.nodes_expanded, bounded=True, descent_defs=trace)


def find_minimal_non_sfdt(c: Cover, f: ValueMap) -> bool:
    """No witness overall, but deleting any one fiber restores one."""
    if find_sfdt(c, f).found():
        return False
    for v in range(c.base.n):
        sub, fsub, _ = delete_fiber(c, f, v)
        if sub.base.n == 0:
            continue  # empty cover has the empty transversal
        if not find_sfdt(sub, fsub).found():
            return False
    return True


def is_strictly_bounded_witness(c: Cover, f: ValueMap, r: Transversal) -> bool:
    return _is_bounded(c, f, r, strict=True)


def is_bounded_witness(c: Cover, f: ValueMap, r: Transversal) -> bool:
    return _is_bounded(c, f, r, strict=False)
