"""Acceptance suite: nine go/no-go checks with exhaustive desk-scale oracles.

Each criterion function returns a JSON-serializable report whose bytes are
reproducible for a fixed seed (timings are asserted as booleans, never
embedded as floats).  run_all executes criteria 1-8 twice and adds the
determinism criterion comparing the two serializations.
"""

from __future__ import annotations

import json
import random
import time
from itertools import combinations

from .constructible import check_building, is_constructible, verify_construction_tree
from .cover import (
    ValueMap,
    circular_ladder_cover,
    id_cover,
    induced_on_transversal,
    mobius_ladder_cover,
    tilde_complete_cover,
    transversal_degrees,
)
from .degeneracy import (
    brute_force_strictly_f_degenerate,
    is_strictly_f_degenerate,
)
from .graph import (
    Graph,
    is_connected,
    make_graph,
    petersen_graph,
    random_connected_graph,
)
from .harness import (
    InstanceFamily,
    degree_equal_value_maps,
    enumerate_covers,
    family_instances,
    minimal_pair_structure,
    named_graph,
)
from .reductions import (
    ListAssignment,
    PartitionSpec,
    SignedGraph,
    brute_force_list_coloring,
    brute_force_partition,
    decode_partition,
    encode_from_partition,
    encode_list_coloring,
    encode_partition,
    encode_signed,
    is_proper_list_coloring,
    partition_is_valid,
)
from .solver import (
    deficiency_descent,
    find_minimal_non_sfdt,
    find_sfdt,
    find_sfdt_strictly_bounded,
    is_bounded_witness,
    is_strictly_bounded_witness,
)

DEFAULT_SEED = 987654321

MR_BASES = ("P2", "P3", "K3", "P4", "C4", "C5", "K4", "bowtie")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _report(criterion: int, name: str, passed: bool, detail: dict) -> dict:
    return {"criterion": criterion, "name": name, "pass": bool(passed), "detail": detail}


# ---------------------------------------------------------------------------
# 1. Greedy peel agrees with the literal subset oracle.

def criterion_1(seed: int) -> dict:
    rng = random.Random(seed)
    start = time.monotonic()
    checked = 0
    disagreements = 0

    def compare(g: Graph):
        nonlocal checked, disagreements
        adj = {v: g.neighbors(v) for v in range(g.n)}
        f = {v: rng.randint(0, 3) for v in range(g.n)}
        checked += 1
        if is_strictly_f_degenerate(adj, f) != brute_force_strictly_f_degenerate(adj, f):
            disagreements += 1

    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            g = make_graph(n, edges)
            if not is_connected(g):
                continue
            for _ in range(5):
                compare(g)
    for n in (6, 7):
        for _ in range(5000):
            compare(random_connected_graph(n, rng))

    elapsed = time.monotonic() - start
    return _report(
        1,
        "greedy peel vs subset oracle",
        disagreements == 0 and elapsed < 120,
        {"checked": checked, "disagreements": disagreements, "within_2min": elapsed < 120},
    )


# ---------------------------------------------------------------------------
# 2/5/6/7 share one pass over the exhaustive perfect-matching family.

def _shared_sweep() -> dict:
    start = time.monotonic()
    state = {
        "checked": 0,
        "found": 0,
        "exhausted": 0,
        "minimal": 0,
        "mr_failures": 0,
        "descent_failures": 0,
        "descent_steps_max": 0,
        "structure_failures": 0,
        "partition_keys": {},  # (base name, f rows) -> (Graph, ValueMap)
        "elapsed": 0.0,
    }
    for name in MR_BASES:
        g = named_graph(name)
        for c in enumerate_covers(g, 2, "perfect"):
            for f in degree_equal_value_maps(g, 2, cap=3):
                state["checked"] += 1
                res = find_sfdt(c, f)
                tree = is_constructible(c, f)
                agree = res.found() == (tree is None)
                if tree is not None and not verify_construction_tree(tree, c, f):
                    agree = False
                if not agree:
                    state["mr_failures"] += 1
                if res.found():
                    state["found"] += 1
                    witness, trace = deficiency_descent(c, f, res.witness)
                    ok = (
                        is_bounded_witness(c, f, witness)
                        and all(b < a for a, b in zip(trace, trace[1:]))
                    )
                    if not ok:
                        state["descent_failures"] += 1
                    state["descent_steps_max"] = max(
                        state["descent_steps_max"], len(trace) - 1
                    )
                    state["partition_keys"].setdefault((name, f.rows), (g, f))
                else:
                    state["exhausted"] += 1
                    if find_minimal_non_sfdt(c, f):
                        state["minimal"] += 1
                        ok, _ = minimal_pair_structure(c, f)
                        if not ok:
                            state["structure_failures"] += 1
    state["elapsed"] = time.monotonic() - start
    return state


def criterion_2(sweep: dict) -> dict:
    within = sweep["elapsed"] < 600
    return _report(
        2,
        "search-vs-recognition equivalence",
        sweep["mr_failures"] == 0 and within,
        {
            "checked": sweep["checked"],
            "found": sweep["found"],
            "exhausted": sweep["exhausted"],
            "disagreements": sweep["mr_failures"],
            "within_10min": within,
        },
    )


# ---------------------------------------------------------------------------
# 3. Ground-truth building covers.

def _criterion3_instances():
    items = []
    items.append(("gamma3", circular_ladder_cover(3), ValueMap.constant(3, 2, 1), True))
    items.append(("gamma5", circular_ladder_cover(5), ValueMap.constant(5, 2, 1), True))
    items.append(("mobius4", mobius_ladder_cover(4), ValueMap.constant(4, 2, 1), True))
    items.append(("mobius6", mobius_ladder_cover(6), ValueMap.constant(6, 2, 1), True))
    for p in (2, 3, 4):
        for a in range(p):
            b = p - 1 - a
            f = ValueMap.from_rows([[a, b]] * p)
            items.append((f"tilde{p}_{a}_{b}", tilde_complete_cover(p, 2), f, True))
    for name in ("P3", "K3"):
        g = named_graph(name)
        f = ValueMap.from_rows([[g.degree(v), 0] for v in range(g.n)])
        items.append((f"monoblock_{name}", id_cover(g, 2), f, True))
    items.append(("gamma4", circular_ladder_cover(4), ValueMap.constant(4, 2, 1), False))
    items.append(("mobius5", mobius_ladder_cover(5), ValueMap.constant(5, 2, 1), False))
    return items


def criterion_3() -> tuple[dict, list]:
    exceptions = []
    items = _criterion3_instances()
    minimal_candidates = []
    for label, c, f, expect_building in items:
        res = find_sfdt(c, f)
        kind = check_building(c, f)
        ok = (not res.found()) == expect_building and (kind is not None) == expect_building
        if not ok:
            exceptions.append(label)
        elif expect_building:
            minimal_candidates.append((c, f))
    report = _report(
        3,
        "building-cover ground truth",
        not exceptions,
        {"instances": len(items), "exceptions": exceptions},
    )
    return report, minimal_candidates


# ---------------------------------------------------------------------------
# 4. Slack in the value sums always yields a witness.

def criterion_4(seed: int) -> dict:
    fam = InstanceFamily(
        random_bases=200,
        min_n=2,
        max_n=6,
        kappas=(2, 3),
        matching_policy="sampled",
        covers_per_base=1,
        f_policy="degree-ge",
        f_samples=3,
        seed=seed,
    )
    checked = 0
    misses = 0
    for c, f in family_instances(fam):
        if not is_connected(c.base):
            continue
        if any(f.sum_at(v) < c.base.degree(v) for v in range(c.base.n)):
            continue
        if not any(f.sum_at(v) > c.base.degree(v) for v in range(c.base.n)):
            continue
        checked += 1
        if not find_sfdt(c, f).found():
            misses += 1
    return _report(
        4,
        "guaranteed witness under slack sums",
        checked >= 1000 and misses == 0,
        {"checked": checked, "misses": misses},
    )


# ---------------------------------------------------------------------------
# 5. Degree-capped refinements.

def criterion_5(sweep: dict, seed: int) -> dict:
    rng = random.Random(seed + 5)
    strict_checked = 0
    strict_failures = 0
    low_checked = 0
    low_failures = 0
    for cap, count in ((3, 600), (2, 600)):
        fam = InstanceFamily(
            random_bases=count // 3,
            min_n=2,
            max_n=6,
            kappas=(3,),
            matching_policy="sampled",
            covers_per_base=1,
            f_policy="strict",
            f_cap=cap,
            f_samples=3,
            seed=rng.randrange(2**30),
        )
        for c, f in family_instances(fam):
            entries = {f.at(v, q) for v in range(c.base.n) for q in range(1, c.kappa + 1)}
            strict_checked += 1
            res = find_sfdt_strictly_bounded(c, f)
            ok = res.found() and is_strictly_bounded_witness(c, f, res.witness)
            if not ok:
                strict_failures += 1
                continue
            if entries <= {0, 1, 2}:
                low_checked += 1
                deg = transversal_degrees(c, res.witness)
                if deg and max(deg.values()) > 1:
                    low_failures += 1
    passed = (
        sweep["descent_failures"] == 0
        and strict_checked >= 1000
        and strict_failures == 0
        and low_failures == 0
    )
    return _report(
        5,
        "capped and strictly capped witnesses",
        passed,
        {
            "descent_checked": sweep["found"],
            "descent_failures": sweep["descent_failures"],
            "descent_steps_max": sweep["descent_steps_max"],
            "strict_checked": strict_checked,
            "strict_failures": strict_failures,
            "low_value_checked": low_checked,
            "low_value_failures": low_failures,
        },
    )


# ---------------------------------------------------------------------------
# 6. Minimal pairs: connectivity, sums below degree, and block structure.

def criterion_6(sweep: dict, candidates: list) -> dict:
    extra_minimal = 0
    extra_failures = 0
    for c, f in candidates:
        if find_minimal_non_sfdt(c, f):
            extra_minimal += 1
            ok, _ = minimal_pair_structure(c, f)
            if not ok:
                extra_failures += 1
    violations = sweep["structure_failures"] + extra_failures
    return _report(
        6,
        "minimal-pair structure",
        violations == 0,
        {
            "minimal_pairs": sweep["minimal"] + extra_minimal,
            "violations": violations,
        },
    )


# ---------------------------------------------------------------------------
# 7. Reductions agree with direct brute force.

def criterion_7(sweep: dict, seed: int) -> dict:
    rng = random.Random(seed + 7)
    lc_checked = 0
    lc_failures = 0
    while lc_checked < 1000:
        n = rng.randint(2, 5)
        kappa = rng.randint(1, 3)
        g = random_connected_graph(n, rng)
        lists = [frozenset(cl for cl in range(1, kappa + 1) if rng.random() < 0.7) for _ in range(n)]
        L = ListAssignment(tuple(lists), kappa)
        lc_checked += 1
        c, f = encode_list_coloring(g, L)
        res = find_sfdt(c, f)
        direct = brute_force_list_coloring(g, L)
        if res.found() != (direct is not None):
            lc_failures += 1
            continue
        if res.found():
            phi = {v: q for v, q in enumerate(res.witness.picks)}
            if not is_proper_list_coloring(g, L, phi):
                lc_failures += 1

    rt_checked = 0
    rt_failures = 0
    for (name, rows), (g, f) in sorted(sweep["partition_keys"].items()):
        spec = PartitionSpec(
            tuple(tuple(f.at(v, i) for v in range(g.n)) for i in range(1, f.kappa + 1))
        )
        rt_checked += 1
        c, fid = encode_partition(g, spec)
        res = find_sfdt(c, fid)
        direct = brute_force_partition(g, spec)
        if res.found() != (direct is not None):
            rt_failures += 1
            continue
        if res.found():
            parts = decode_partition(c, res.witness)
            if not partition_is_valid(g, spec, parts):
                rt_failures += 1
                continue
            back = encode_from_partition(g, spec, parts)
            sub = induced_on_transversal(c, back)
            fdict = {x: fid.at(*x) for x in sub.vertex_set}
            if not is_strictly_f_degenerate(sub.adjacency, fdict):
                rt_failures += 1

    tri = named_graph("K3")
    sg = SignedGraph(tri, {e: 1 for e in tri.sorted_edges()})
    edge = named_graph("P2")
    sgn = SignedGraph(edge, {(0, 1): -1})
    signed_expect = [(sg, 2, False), (sg, 3, True), (sgn, 1, False)]
    signed_failures = 0
    for s, k, expect_found in signed_expect:
        c, f = encode_signed(s, k)
        if find_sfdt(c, f).found() != expect_found:
            signed_failures += 1

    passed = lc_failures == 0 and rt_failures == 0 and signed_failures == 0
    return _report(
        7,
        "reduction sanity",
        passed,
        {
            "list_coloring_checked": lc_checked,
            "list_coloring_failures": lc_failures,
            "partition_round_trips": rt_checked,
            "partition_failures": rt_failures,
            "signed_failures": signed_failures,
        },
    )


# ---------------------------------------------------------------------------
# 8. A 3-regular 3-chromatic instance solves instantly to a proper coloring.

def criterion_8() -> dict:
    g = petersen_graph()
    c = id_cover(g, 3)
    f = ValueMap.constant(g.n, 3, 1)
    start = time.monotonic()
    res = find_sfdt(c, f)
    elapsed = time.monotonic() - start
    proper = res.found() and all(
        res.witness.picks[u] != res.witness.picks[v] for u, v in g.sorted_edges()
    )
    within = elapsed < 1.0
    return _report(
        8,
        "Petersen proper 3-coloring",
        proper and within,
        {"status": res.status, "proper_coloring": proper, "within_1s": within},
    )


# ---------------------------------------------------------------------------
# Orchestration

def run_criteria_1_8(seed: int = DEFAULT_SEED) -> list[dict]:
    reports = [criterion_1(seed)]
    sweep = _shared_sweep()
    reports.append(criterion_2(sweep))
    c3, minimal_candidates = criterion_3()
    reports.append(c3)
    reports.append(criterion_4(seed))
    reports.append(criterion_5(sweep, seed))
    reports.append(criterion_6(sweep, minimal_candidates))
    reports.append(criterion_7(sweep, seed))
    reports.append(criterion_8())
    return sorted(reports, key=lambda r: r["criterion"])


def run_all(seed: int = DEFAULT_SEED) -> dict:
    first = run_criteria_1_8(seed)
    second = run_criteria_1_8(seed)
    identical = canonical_json(first) == canonical_json(second)
    reports = first + [
        _report(9, "seeded determinism", identical, {"byte_identical": identical})
    ]
    return {"seed": seed, "pass": all(r["pass"] for r in reports), "criteria": reports}


def format_summary(result: dict) -> str:
    lines = []
    for rep in result["criteria"]:
        status = "PASS" if rep["pass"] else "FAIL"
        lines.append(f"criterion {rep['criterion']}: {status} - {rep['name']}")
    overall = "PASS" if result["pass"] else "FAIL"
    lines.append(f"overall: {overall}")
    return "\n".join(lines)
