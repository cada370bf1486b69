"""Desk-scale instance enumeration and executable property sweeps.

Each sweep runs one of the library's structural guarantees over an instance
family and reports counterexamples (expected: none).  Counterexample
records carry the full serialized instance so a failure replays
deterministically.  All randomness flows through a seeded random.Random, so
a family is a reproducible description, not a one-off sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb, factorial

from .constructible import is_constructible, verify_construction_tree
from .cover import (
    Cover,
    ValueMap,
    cover_from_json,
    cover_to_json,
    make_cover,
    transversal_degrees,
)
from .degeneracy import coloring_number
from .graph import (
    Graph,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    is_complete,
    is_connected,
    is_cycle,
    make_graph,
    path_graph,
    petersen_graph,
    random_connected_graph,
    star_graph,
    blocks,
)
from .solver import (
    degree_condition,
    deficiency,
    find_minimal_non_sfdt,
    find_sfdt,
    find_sfdt_bounded,
    find_sfdt_strictly_bounded,
    is_bounded_witness,
    is_strictly_bounded_witness,
    strict_degree_condition,
)

_EXHAUSTIVE_GUARD = 10**7


# ---------------------------------------------------------------------------
# Named bases

def named_graph(name: str) -> Graph:
    key = name.strip().lower()
    if key == "bowtie":
        return bowtie_graph()
    if key == "petersen":
        return petersen_graph()
    if key.startswith("p") and key[1:].isdigit():
        return path_graph(int(key[1:]))
    if key.startswith("c") and key[1:].isdigit():
        return cycle_graph(int(key[1:]))
    if key.startswith("k1,") and key[3:].isdigit():
        return star_graph(int(key[3:]))
    if key.startswith("k") and key[1:].isdigit():
        return complete_graph(int(key[1:]))
    raise ValueError(f"unknown graph name {name!r}")


# ---------------------------------------------------------------------------
# Matching and value-map enumeration

def all_matchings(kappa: int) -> list[tuple[tuple[int, int], ...]]:
    """Every partial injective pairing between two kappa-sets, sorted."""
    idx = range(1, kappa + 1)
    out = []
    for k in range(kappa + 1):
        for dom in combinations(idx, k):
            for img in permutations(idx, k):
                out.append(tuple(sorted(zip(dom, img))))
    return sorted(set(out))


def perfect_matchings(kappa: int) -> list[tuple[tuple[int, int], ...]]:
    idx = range(1, kappa + 1)
    return sorted(tuple(zip(idx, img)) for img in permutations(idx))


def matching_count(kappa: int) -> int:
    """Closed form: sum over sizes k of C(kappa,k)^2 * k!."""
    return sum(comb(kappa, k) ** 2 * factorial(k) for k in range(kappa + 1))


def enumerate_covers(
    g: Graph,
    kappa: int,
    policy: str = "all",
    rng: random.Random | None = None,
    samples: int | None = None,
):
    """Stream covers of g: exhaustive over per-edge matchings, or sampled."""
    edges = g.sorted_edges()
    if policy == "all":
        options = all_matchings(kappa)
    elif policy in ("perfect", "perfect-only"):
        options = perfect_matchings(kappa)
    elif policy == "sampled":
        if rng is None or samples is None:
            raise ValueError("sampled policy needs an rng and a sample count")
        options = all_matchings(kappa)
        for _ in range(samples):
            picked = {e: list(rng.choice(options)) for e in edges}
            yield make_cover(g, kappa, picked)
        return
    else:
        raise ValueError(f"unknown matching policy {policy!r}")
    total = len(options) ** len(edges)
    if total > _EXHAUSTIVE_GUARD:
        raise ValueError(
            f"{total} covers exceed the exhaustive guard; use the sampled policy"
        )
    for combo in product(options, repeat=len(edges)):
        yield make_cover(g, kappa, {e: list(m) for e, m in zip(edges, combo)})


def vectors_with_sum(length: int, total: int, cap: int) -> list[tuple[int, ...]]:
    """Nonnegative vectors of the given length and sum with entries <= cap."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]):
        if i == length - 1:
            if 0 <= left <= cap:
                out.append(tuple(acc + [left]))
            return
        for x in range(0, min(cap, left) + 1):
            rec(i + 1, left - x, acc + [x])

    if length == 0:
        return [()] if total == 0 else []
    rec(0, total, [])
    return out


def _entry_cap(deg: int, kappa: int, cap: int) -> int:
    """Cap entries at min(deg, cap), raised to ceil(deg/kappa) when the sum
    would otherwise be unreachable (e.g. high degrees at kappa=1)."""
    return max(min(deg, cap), -(-deg // kappa))


def degree_equal_value_maps(g: Graph, kappa: int, cap: int = 3):
    """All value maps with per-vertex sums equal to the degree."""
    per_vertex = [
        vectors_with_sum(kappa, g.degree(v), _entry_cap(g.degree(v), kappa, cap))
        for v in range(g.n)
    ]
    for rows in product(*per_vertex):
        yield ValueMap(rows)


def random_value_map(
    g: Graph, kappa: int, policy: str, rng: random.Random, cap: int = 3
) -> ValueMap:
    """One random value map under the named sum policy."""

    def random_vector(total: int, vcap: int) -> tuple[int, ...]:
        opts = vectors_with_sum(kappa, total, vcap)
        if not opts:
            raise ValueError(
                f"no value vector of sum {total} with {kappa} entries <= {vcap}"
            )
        return rng.choice(opts)

    if policy == "degree-equal":
        rows = [
            random_vector(g.degree(v), _entry_cap(g.degree(v), kappa, cap))
            for v in range(g.n)
        ]
        return ValueMap(tuple(rows))
    if policy == "degree-ge":
        f = random_value_map(g, kappa, "degree-equal", rng, cap)
        for _ in range(rng.randint(1, max(2, g.n // 2))):
            v = rng.randrange(g.n)
            q = rng.randint(1, kappa)
            f = f.with_entry(v, q, f.at(v, q) + 1)
        return f
    if policy == "strict":
        rows = [
            random_vector(g.degree(v) + 1, _entry_cap(g.degree(v) + 1, kappa, cap))
            for v in range(g.n)
        ]
        return ValueMap(tuple(rows))
    if policy == "col-ge":
        adj = {v: g.neighbors(v) for v in range(g.n)}
        m = coloring_number(adj)
        rows = []
        for _ in range(g.n):
            total = m + rng.randint(0, 1)
            rows.append(random_vector(total, _entry_cap(total, kappa, cap)))
        return ValueMap(tuple(rows))
    if policy == "bounded":
        rows = [tuple(rng.randint(0, cap) for _ in range(kappa)) for _ in range(g.n)]
        return ValueMap(tuple(rows))
    raise ValueError(f"unknown value policy {policy!r}")


# ---------------------------------------------------------------------------
# Instance families

@dataclass(frozen=True)
class InstanceFamily:
    """Reproducible description of a stream of (cover, value map) instances."""

    bases: tuple[str, ...] = ()
    random_bases: int = 0
    min_n: int = 2
    max_n: int = 6
    kappas: tuple[int, ...] = (2,)
    matching_policy: str = "perfect"
    covers_per_base: int | None = None  # sample count for the sampled policy
    f_policy: str = "degree-equal"
    f_cap: int = 3
    f_samples: int | None = None  # None: exhaustive (degree-equal only); else per cover
    seed: int = 0


def family_instances(family: InstanceFamily):
    """Yield (cover, value map) pairs; deterministic for a fixed family."""
    rng = random.Random(family.seed)
    bases = [named_graph(nm) for nm in family.bases]
    for _ in range(family.random_bases):
        n = rng.randint(family.min_n, family.max_n)
        bases.append(random_connected_graph(n, rng))
    for g in bases:
        for kappa in family.kappas:
            covers = enumerate_covers(
                g,
                kappa,
                family.matching_policy,
                rng=rng,
                samples=family.covers_per_base,
            )
            for c in covers:
                if family.f_samples is None:
                    if family.f_policy != "degree-equal":
                        raise ValueError(
                            "exhaustive value maps only exist for the degree-equal policy"
                        )
                    for f in degree_equal_value_maps(g, kappa, family.f_cap):
                        yield c, f
                else:
                    for _ in range(family.f_samples):
                        yield c, random_value_map(
                            g, kappa, family.f_policy, rng, family.f_cap
                        )


# ---------------------------------------------------------------------------
# Reports

@dataclass
class TheoremReport:
    name: str
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }


def _record(check: str, c: Cover, f: ValueMap, info: dict) -> dict:
    return {"check": check, "instance": cover_to_json(c, f), **info}


# ---------------------------------------------------------------------------
# Individual instance checks (also used for replaying counterexamples)

def check_mr_instance(c: Cover, f: ValueMap) -> tuple[bool, dict]:
    """Exact search exhausts iff the instance is constructible."""
    res = find_sfdt(c, f)
    tree = is_constructible(c, f)
    info = {"solver": res.status, "constructible": tree is not None}
    if tree is not None and not verify_construction_tree(tree, c, f):
        return False, {**info, "reason": "construction tree failed verification"}
    if res.found() != (tree is None):
        return False, {**info, "reason": "search and recognition disagree"}
    return True, info


def check_ge_instance(c: Cover, f: ValueMap) -> tuple[bool, dict]:
    res = find_sfdt(c, f)
    return res.found(), {"solver": res.status}


def check_smr_instance(c: Cover, f: ValueMap) -> tuple[bool, dict]:
    """Found instances upgrade to degree-capped witnesses via a strictly
    decreasing deficiency descent; strict-sum instances upgrade further."""
    res = find_sfdt(c, f)
    info: dict = {"solver": res.status}
    if not res.found():
        return True, info
    bres = find_sfdt_bounded(c, f)
    trace = bres.descent_defs
    info["descent_len"] = max(0, len(trace) - 1)
    if not (bres.found() and bres.bounded and is_bounded_witness(c, f, bres.witness)):
        return False, {**info, "reason": "no degree-capped witness"}
    if any(b >= a for a, b in zip(trace, trace[1:])):
        return False, {**info, "reason": "descent trace not strictly decreasing"}
    if trace and deficiency(c, f, bres.witness) != trace[-1]:
        return False, {**info, "reason": "trace end disagrees with witness deficiency"}
    if strict_degree_condition(c, f):
        sres = find_sfdt_strictly_bounded(c, f)
        if not (sres.found() and is_strictly_bounded_witness(c, f, sres.witness)):
            return False, {**info, "reason": "no strictly capped witness"}
        entries = {f.at(v, q) for v in range(c.base.n) for q in range(1, c.kappa + 1)}
        if entries <= {0, 1, 2}:
            deg = transversal_degrees(c, sres.witness)
            if deg and max(deg.values()) > 1:
                return False, {**info, "reason": "witness degree above one"}
    return True, info


def _two_connected_subsets(g: Graph, allowed: set[int]):
    verts = sorted(allowed)
    for size in range(3, len(verts) + 1):
        for sub in combinations(verts, size):
            pos = {v: i for i, v in enumerate(sub)}
            edges = [
                (pos[u], pos[v])
                for u, v in g.sorted_edges()
                if u in pos and v in pos
            ]
            h = make_graph(size, edges)
            if is_connected(h) and len(blocks(h).blocks) == 1:
                yield sub, h


def minimal_pair_structure(c: Cover, f: ValueMap) -> tuple[bool, str]:
    """Checks a known minimal pair: connected base, value sums at most the
    degree, and every well-valued 2-connected induced subgraph is a cycle,
    complete, or low-degree against the max fiber value."""
    g = c.base
    if not is_connected(g):
        return False, "minimal pair with disconnected base"
    over = [v for v in range(g.n) if f.sum_at(v) > g.degree(v)]
    if over:
        return False, f"value sum exceeds degree at {over}"
    well_valued = {v for v in range(g.n) if f.sum_at(v) >= g.degree(v)}
    for sub, h in _two_connected_subsets(g, well_valued):
        if is_cycle(h) or is_complete(h):
            continue
        caps = [max(f.rows[v]) for v in sub]
        if all(h.degree(i) <= caps[i] for i in range(h.n)):
            continue
        return False, f"structure fails on subset {list(sub)}"
    return True, ""


def check_gallai_instance(c: Cover, f: ValueMap) -> tuple[bool, dict]:
    res = find_sfdt(c, f)
    info: dict = {"solver": res.status, "minimal": False}
    if res.found():
        return True, info
    if not find_minimal_non_sfdt(c, f):
        return True, info
    info["minimal"] = True
    ok, reason = minimal_pair_structure(c, f)
    if not ok:
        return False, {**info, "reason": reason}
    return True, info


def check_t51_instance(c: Cover, f: ValueMap) -> tuple[bool, dict]:
    g = c.base
    adj = {v: g.neighbors(v) for v in range(g.n)}
    m = coloring_number(adj)
    if any(f.sum_at(v) < m for v in range(g.n)):
        return True, {"skipped": "sums below the coloring number"}
    res = find_sfdt(c, f)
    return res.found(), {"solver": res.status, "m": m}


_CHECKS = {
    "mr": check_mr_instance,
    "ge": check_ge_instance,
    "smr": check_smr_instance,
    "gallai": check_gallai_instance,
    "t51": check_t51_instance,
}


def replay(record: dict) -> bool:
    """Re-run a counterexample record; True when it still fails."""
    c, f = cover_from_json(record["instance"])
    ok, _ = _CHECKS[record["check"]](c, f)
    return not ok


# ---------------------------------------------------------------------------
# Sweeps

def _sweep(name: str, family: InstanceFamily, precondition, check) -> TheoremReport:
    report = TheoremReport(name)
    counts: dict[str, int] = {}
    for c, f in family_instances(family):
        if not precondition(c, f):
            continue
        report.checked += 1
        ok, info = check(c, f)
        for key in ("solver", "minimal"):
            if key in info:
                label = f"{key}:{info[key]}"
                counts[label] = counts.get(label, 0) + 1
        if not ok:
            report.counterexamples.append(_record(name, c, f, info))
    report.details["counts"] = dict(sorted(counts.items()))
    return report


def verify_mr(family: InstanceFamily) -> TheoremReport:
    """Search-vs-recognition equivalence over the family."""
    return _sweep(
        "mr",
        family,
        lambda c, f: is_connected(c.base) and degree_condition(c, f),
        check_mr_instance,
    )


def verify_ge(family: InstanceFamily) -> TheoremReport:
    """Slack anywhere in the value sums guarantees a witness."""

    def pre(c: Cover, f: ValueMap) -> bool:
        return (
            is_connected(c.base)
            and degree_condition(c, f)
            and any(f.sum_at(v) > c.base.degree(v) for v in range(c.base.n))
        )

    return _sweep("ge", family, pre, check_ge_instance)


def verify_smr(family: InstanceFamily) -> TheoremReport:
    """Degree-capped and strictly capped witness upgrades."""
    return _sweep(
        "smr",
        family,
        lambda c, f: is_connected(c.base) and degree_condition(c, f),
        check_smr_instance,
    )


def verify_gallai(family: InstanceFamily) -> TheoremReport:
    """Structure of discovered minimal pairs."""
    return _sweep("gallai", family, lambda c, f: True, check_gallai_instance)


def verify_t51(family: InstanceFamily) -> TheoremReport:
    """Low coloring number of the base guarantees a witness."""
    return _sweep("t51", family, lambda c, f: True, check_t51_instance)


VERIFIERS = {
    "mr": verify_mr,
    "ge": verify_ge,
    "smr": verify_smr,
    "gallai": verify_gallai,
    "t51": verify_t51,
}
