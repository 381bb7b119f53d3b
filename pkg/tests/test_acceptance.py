"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are also written
with capture disabled, so plain ``pytest -v`` shows them too).
"""

import random
import time
from itertools import combinations

import networkx as nx
import pytest

from generators import (
    random_2degenerate_subcubic, random_apollonian, random_bounded_degree, random_clawfree_subcubic,
    random_fan_heavy_outerplanar, random_outerplanar, random_partial_instance, random_sp_subcubic,
    random_subcubic_outerplanar, random_tree,
)
from ttone import catalog as cat
from ttone.bounds import cycle_index_2tone, path_index
from ttone.coloring import (
    free_colors, is_pairwise_intersecting, label_conflicts, max_intersecting_family, valid_labels, verify,
)
from ttone.colorers import (
    color_2degenerate_subcubic, color_clawfree_subcubic, color_general, color_outerplanar, color_planar,
    color_sp_subcubic, color_subcubic_outerplanar, color_tree, replay,
)
from ttone.errors import HypothesisViolated
from ttone.exact import exact_index
from ttone.graph import Multigraph, intermediate_vertices
from ttone.search import SearchTask, canonical_graph6, run_search
from ttone.structure import classify, has_claw


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {n}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail

    return emit


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


# 1 ----------------------------------------------------------------------------


def test_criterion_1_exact_small_values(report):
    cases = [("K4", cat.complete(4), 9), ("K4-e", cat.k4_minus_e(), 8), ("Petersen", cat.petersen(), 6)]
    cases += [(f"C{n}", cat.cycle(n), 6 if n in (3, 4, 7) else 5) for n in range(3, 13)]
    cases += [(f"P{n}", cat.path(n), path_index(n, 2)) for n in range(2, 11)]
    cases += [(f"K1,{n}", cat.star(n), 2 * n) for n in range(1, 6)]
    bad = []
    slowest = 0.0
    for name, g, want in cases:
        res, secs = timed(exact_index, g, 2)
        slowest = max(slowest, secs)
        if res.index != want or secs >= 10 or verify(g, res.witness):
            bad.append(f"{name}: got {res.index} in {secs:.2f}s, want {want}")
    # the closed forms agree with the listed values too
    assert all(cycle_index_2tone(n) == (6 if n in (3, 4, 7) else 5) for n in range(3, 13))
    assert [path_index(n, 2) for n in range(2, 11)] == [2, 4, 5, 5, 5, 5, 5, 5, 5]
    report(1, not bad, "; ".join(bad) or f"{len(cases)} graphs exact, slowest {slowest:.2f}s")


# 2 ----------------------------------------------------------------------------


def test_criterion_2_petersen_golden_coloring(report):
    g, c = cat.petersen(), cat.petersen_six_coloring()
    bad, secs = timed(verify, g, c)
    ok = bad == [] and c.is_complete(g) and c.k == 6 and secs < 1
    report(2, ok, f"{len(bad)} violations, {secs * 1000:.1f} ms")


# 3 ----------------------------------------------------------------------------


def test_criterion_3_extremal_k4me_free_cubic(report):
    f2 = cat.fig2()
    cls = classify(f2)
    idx = exact_index(f2, 2)
    part_a = cls.is_cubic and cls.is_k4_minus_e_free and idx.index == 8 and not verify(f2, idx.witness)

    small, secs8 = timed(run_search, SearchTask(max_n=8, forbidden=frozenset({"k4me"}), threshold=8))
    part_b = small.findings == [] and secs8 <= 300

    full, secs10 = timed(run_search, SearchTask(max_n=10, min_n=10, forbidden=frozenset({"k4me"}), threshold=8))
    target = canonical_graph6(f2)
    hits = [f for f in full.findings if f.graph == target and f.index == 8]
    part_c = bool(hits) and secs10 <= 1800 and full.examined + full.filtered == 19
    detail = (
        f"fig2 cubic={cls.is_cubic} k4me-free={cls.is_k4_minus_e_free} index={idx.index}; "
        f"n<=8 findings={len(small.findings)} in {secs8:.1f}s; "
        f"n=10 scanned {full.examined} of {full.examined + full.filtered}, "
        f"findings={[f.graph for f in full.findings]} in {secs10:.1f}s"
    )
    report(3, part_a and part_b and part_c, detail)


# 4 ----------------------------------------------------------------------------


def test_criterion_4_tree_optimality(report):
    rng = random.Random(2024)
    bad = []
    confirmed = 0
    for i in range(100):
        g = random_tree(rng, max_edges=40, dmin=3, dmax=6)
        delta = g.max_degree()
        out = color_tree(g)
        if out.k != 2 * delta or verify(g, out.coloring) or not out.coloring.is_complete(g):
            bad.append(f"tree {i}: k={out.k}, delta={delta}")
        if g.edge_count <= 20:
            confirmed += 1
            if exact_index(g, 2).index != 2 * delta:
                bad.append(f"tree {i}: exact index differs from 2*delta")
    report(4, not bad and confirmed > 0, "; ".join(bad) or f"100 trees at 2*delta, {confirmed} confirmed exact")


# 5 ----------------------------------------------------------------------------


def _planar_instance(rng):
    # stacked triangulations, thinned; every such graph has a low-degree
    # vertex with few heavy neighbors at each peel
    return random_apollonian(rng, rng.randint(4, 40), rng.choice([1.0, 0.9, 0.7]))


def _outerplanar_instance(rng):
    if rng.random() < 0.3:
        return random_fan_heavy_outerplanar(rng, rng.randint(4, 12))
    return random_outerplanar(rng, rng.randint(3, 16), rng.uniform(0.6, 1.0), rng.randint(0, 4))


def _clawfree_instance(rng):
    while True:
        g = random_clawfree_subcubic(rng)
        if g.edge_count and not has_claw(g):
            return g


def _general_instance(rng):
    while True:
        g = random_bounded_degree(rng, rng.randint(4, 16), rng.uniform(0.2, 0.7), rng.randint(2, 6))
        if g.max_degree() >= 2:
            return g


CLASSES = [
    ("general", _general_instance, color_general, lambda g: 6 * g.max_degree() - 4),
    ("planar", _planar_instance, color_planar, lambda g: max(41, 3 * g.max_degree() + 5)),
    ("outerplanar", _outerplanar_instance, color_outerplanar, lambda g: max(14, 3 * g.max_degree())),
    ("claw-free subcubic", _clawfree_instance, color_clawfree_subcubic, lambda g: 11),
    ("2-degenerate subcubic", lambda r: random_2degenerate_subcubic(r, r.randint(3, 20)),
     color_2degenerate_subcubic, lambda g: 10),
    ("SP subcubic", lambda r: random_sp_subcubic(r, r.randint(0, 30)), color_sp_subcubic, lambda g: 9),
    ("subcubic outerplanar", lambda r: random_subcubic_outerplanar(r, 24), color_subcubic_outerplanar, lambda g: 8),
]


def _lone_k4(g):
    core = g.without_isolated()
    return core.vertex_count == 4 and core.edge_count == 6


def test_criterion_5_class_colorer_bounds(report):
    rng = random.Random(55)
    bad = []
    counts = {}
    for name, make, colorer, bound in CLASSES:
        n = 0
        while n < 120:
            g = make(rng)
            if g.max_degree() < 2 and name in ("general", "planar", "outerplanar"):
                continue
            if name == "claw-free subcubic" and _lone_k4(g):
                # a lone K4 is colored exactly with 9 colors, below the class palette
                out = colorer(g)
                ok = out.k == 9
            else:
                try:
                    out = colorer(g)
                except HypothesisViolated as exc:
                    bad.append(f"{name}: generator produced an out-of-class graph ({exc})")
                    break
                ok = out.k == bound(g)
            ok = ok and out.coloring.is_complete(g) and not verify(g, out.coloring)
            ok = ok and replay(out.trace, 2, out.k) == out.coloring
            if not ok:
                bad.append(f"{name}: instance {n} failed (k={out.k}, want {bound(g)})")
            n += 1
        counts[name] = n
    detail = "; ".join(bad) or ", ".join(f"{k}={v}" for k, v in counts.items())
    report(5, not bad, detail)


# 6 ----------------------------------------------------------------------------


def _brute_max_family(free):
    pairs = [frozenset(p) for p in combinations(sorted(free), 2)]
    h = nx.Graph()
    h.add_nodes_from(pairs)
    h.add_edges_from((a, b) for a, b in combinations(pairs, 2) if a & b)
    return max(len(q) for q in nx.find_cliques(h))


def test_criterion_6_extension_oracles(report):
    rng = random.Random(66)
    fam_bad = 0
    for _ in range(10_000):
        m = rng.randint(3, 8)
        free = set(rng.sample(range(1, 25), m))
        fam = max_intersecting_family(free)
        if not (is_pairwise_intersecting(fam) and all(l <= free for l in fam)):
            fam_bad += 1
        elif len(set(fam)) != _brute_max_family(free):
            fam_bad += 1
    count_bad = 0
    for _ in range(500):
        g, c, e = random_partial_instance(rng)
        fam = max_intersecting_family(free_colors(g, c, e))
        m = len(intermediate_vertices(g, e))
        # count survivors directly from the conflict check, not through valid_labels
        survivors = [lab for lab in fam if not label_conflicts(g, c, e, lab)]
        if len(survivors) < len(fam) - m or survivors != valid_labels(g, c, e, fam):
            count_bad += 1
    report(6, fam_bad == 0 and count_bad == 0,
           f"family mismatches {fam_bad}/10000, counting failures {count_bad}/500")


# 7 ----------------------------------------------------------------------------


def test_criterion_7_cubic_index_scans(report):
    start = time.perf_counter()
    all_cubic = run_search(SearchTask(max_n=8, threshold=10))
    k4_free = run_search(SearchTask(max_n=8, forbidden=frozenset({"k4"}), threshold=9))
    secs = time.perf_counter() - start
    # run_search re-verifies every witness and brackets every index above
    # t*Delta with an exhaustive refutation; reaching here means both held
    findings = all_cubic.findings + k4_free.findings
    for f in findings:
        print(f"finding\t{f.row()}")
    ok = secs <= 600 and all(f.status == "exact" for f in findings)
    detail = (
        f"all cubic n<=8: max index {all_cubic.max_index}, findings {len(all_cubic.findings)}; "
        f"K4-free: max index {k4_free.max_index}, findings {len(k4_free.findings)}; {secs:.1f}s"
    )
    report(7, ok, detail)


# 8 ----------------------------------------------------------------------------


def test_criterion_8_monotone_and_chain(report):
    rng = random.Random(88)
    mono_bad = []
    pairs = 0
    while pairs < 50:
        g = random_bounded_degree(rng, rng.randint(3, 8), rng.uniform(0.3, 0.7), rng.randint(2, 4))
        if g.edge_count < 2:
            continue
        keep = [g.endpoints(e) for e in g.edges if rng.random() < 0.7]
        h = Multigraph(g.vertex_count, keep)
        a, b = exact_index(h, 2).index, exact_index(g, 2).index
        if a > b:
            mono_bad.append((g.edge_items(), a, b))
        pairs += 1
    # The chain bound needs a line graph with at least one edge, i.e. two
    # adjacent edges.  A matching has both indices equal to the tone, so the
    # gap there is exactly 1; check that separately.
    chain_bad = []
    graphs = 0
    while graphs < 30:
        g = random_bounded_degree(rng, rng.randint(3, 8), rng.uniform(0.3, 0.7), rng.randint(2, 4))
        if g.max_degree() < 2:
            continue
        one, two = exact_index(g, 1).index, exact_index(g, 2).index
        if two < one + 2:
            chain_bad.append((g.edge_items(), one, two))
        graphs += 1
    matching = Multigraph(6, [(0, 1), (2, 3), (4, 5)])
    matching_gap = exact_index(matching, 2).index - exact_index(matching, 1).index
    report(8, not mono_bad and not chain_bad and matching_gap == 1,
           f"monotonicity violations {len(mono_bad)}/50, chain violations {len(chain_bad)}/30 "
           f"(max degree >= 2), matching gap {matching_gap}")
