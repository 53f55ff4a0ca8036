"""The nine acceptance criteria; each test records one PASS/FAIL line that
is repeated in the terminal summary."""

import random
import time

import pytest

from lfec import discharge, embed, exact, genio, reduce
from lfec.facial import available_colors, is_valid, is_valid_vertex_coloring, verify
from lfec.listcolor import core, is_proper_list_coloring, l_color, theorem_applies

from . import brute
from .corpus import named, random_corpus, random_graph, small_corpus
from .test_discharge import patch
from .test_listcolor import random_instance


def corpus():
    return list(named().values()) + list(random_corpus(220, 60, 1))


# -- 1 ----------------------------------------------------------------------------


def test_criterion_1_lower_bound_family(acceptance):
    got = {}
    for ell in (1, 2):
        t = time.perf_counter()
        rep = exact.min_colors(genio.tight_family(ell), ell)
        got[ell] = (rep.chi, time.perf_counter() - t)
    ok = all(got[ell][0] == 3 * ell + 1 and got[ell][1] < 60 for ell in got)
    detail = ", ".join(f"l={ell} chi={c} ({s:.2f}s)" for ell, (c, s) in got.items())
    acceptance(1, ok, detail)
    assert ok


# -- 2 ----------------------------------------------------------------------------


def multigraph(seed):
    rng = random.Random(seed)
    while True:
        n = rng.randint(3, 9)
        extra = rng.randint(0, 5)
        hi = max(n - 1, min(3 * n - 6, 16 - extra))
        G = genio.random_multigraph(n, rng.randrange(10**9), edges=rng.randint(n - 1, hi), extra=extra)
        if G.n_edges <= 16 and G.is_connected():
            return G


def test_criterion_2_seven_colors_suffice(acceptance):
    t = time.perf_counter()
    worst, bad, multi = 0, [], 0
    for seed in range(500):
        G = multigraph(seed)
        ends = [frozenset(G.endpoints(e)) for e in G.edges()]
        multi += len(set(ends)) < len(ends) or any(G.is_loop(e) for e in G.edges())
        rep = exact.min_colors(G, 2, kmax=8)
        if rep.chi is None or rep.chi > 7:
            bad.append(seed)
        else:
            worst = max(worst, rep.chi)
    ok = not bad
    acceptance(
        2, ok, f"500 multigraphs ({multi} with loops or parallel edges), max chi={worst}, "
        f"violations={len(bad)} ({time.perf_counter() - t:.1f}s)"
    )
    assert ok, bad


# -- 3 ----------------------------------------------------------------------------


def test_criterion_3_constructive_engine(acceptance):
    gs = corpus()
    failures = gaps = invalid = 0
    for G in gs:
        try:
            phi, trace = reduce.construct_7_coloring(G)
        except reduce.ExtensionFailed:
            failures += 1
            continue
        gaps += trace.detect_gaps
        if verify(G, 2, phi) or phi.k != 7 or max(phi.assignment.values(), default=1) > 7:
            invalid += 1
    ok = failures == gaps == invalid == 0
    acceptance(3, ok, f"{len(gs)} graphs, ExtensionFailed={failures}, DetectGap={gaps}, invalid={invalid}")
    assert ok


# -- 4 ----------------------------------------------------------------------------


def test_criterion_4_discharging_conservation(acceptance):
    gs = corpus()
    bad = 0
    for G in gs:
        init = discharge.initial_charges(G)
        final, log = discharge.apply_rules(G)
        if not (init.total() == final.total() == -28 and discharge.replay(init, log) == final):
            bad += 1
    ok = bad == 0
    acceptance(4, ok, f"{len(gs)} connected graphs, totals -28 before and after, replay exact; mismatches={bad}")
    assert ok


# -- 5 ----------------------------------------------------------------------------


def test_criterion_5_four_face_patch(acceptance):
    G = patch()
    final, log = discharge.apply_rules(G)
    alpha = next(w.face for w in G.faces if sorted(G.vertex_of(d) for d in w.darts) == [1, 2, 3, 4])
    q = final.face_charge[alpha]
    ok = q == 1
    acceptance(5, ok, f"4-face with one 3-vertex ends at {discharge.fmt(q)}")
    assert ok


# -- 6 ----------------------------------------------------------------------------


def test_criterion_6_list_coloring_theorem(acceptance):
    rng = random.Random(6)
    hyp = 0
    while hyp < 10**4:
        g = random_instance(rng, 10, slack=(0, 0, 0, 1))
        if not theorem_applies(g):
            continue
        hyp += 1
        sol = l_color(g)
        assert sol is not None and is_proper_list_coloring(g, sol), g
    rng = random.Random(66)
    compared = 0
    for _ in range(10**4):
        g = random_instance(rng, 8)
        sol = l_color(g)
        assert (sol is not None) == brute.list_colorable(g.adj, g.lists), g
        assert sol is None or is_proper_list_coloring(g, sol)
        compared += 1
    acceptance(6, True, f"{hyp} instances under the hypotheses all colored; {compared} verdicts match brute force")


# -- 7 ----------------------------------------------------------------------------


def test_criterion_7_core_soundness(acceptance):
    rng = random.Random(7)
    mismatches = 0
    for _ in range(10**3):
        g = random_instance(rng, 8)
        c = core(g)
        mismatches += brute.list_colorable(g.adj, g.lists) != brute.list_colorable(c.adj, c.lists)
    ok = mismatches == 0
    acceptance(7, ok, f"1000 instances, colorability of G and core(G) differ in {mismatches}")
    assert ok


# -- 8 ----------------------------------------------------------------------------


def test_criterion_8_oracle_equivalences(acceptance):
    gs = small_corpus(8, 120)
    pairs = dist_bad = chi_bad = 0
    for G in gs:
        for e in G.edges():
            for f in G.edges():
                if e != f:
                    pairs += 1
                    dist_bad += G.facial_distance(e, f) != brute.facial_distance(G, e, f)
        for ell in (1, 2, 3):
            chi_bad += exact.min_colors(G, ell).chi != brute.min_colors_enum(G, ell)
    ok = dist_bad == chi_bad == 0
    acceptance(8, ok, f"{len(gs)} graphs <= 8 edges, {pairs} distance pairs, l in 1..3; "
               f"distance mismatches={dist_bad}, chi mismatches={chi_bad}")
    assert ok


# -- 9 ----------------------------------------------------------------------------


def sampled_colorings(G, rng, count=100):
    """A third uniform over few colors, a third valid for G (random greedy),
    a third valid colorings with one edge recolored."""
    es = G.edges()
    out = []
    for i in range(count):
        if i % 3 == 0:
            out.append({e: rng.randint(1, 4) for e in es})
            continue
        col = {}
        for e in rng.sample(es, len(es)):
            free = sorted(available_colors(G, 2, col, e, len(es) + 1))
            col[e] = rng.choice(free[:3])
        if i % 3 == 2:
            col[rng.choice(es)] = rng.randint(1, 4)
        out.append(col)
    return out


def medial_check(gs, ells, seed=9):
    """(checked, iff mismatches, implication failures, mismatches at max
    degree <= 3, first mismatch)."""
    rng = random.Random(seed)
    checked = mism = impl = sub = 0
    first = None
    for G in gs:
        M = embed.medial_graph(G)
        cubic = max(G.degree(v) for v in G.vertices()) <= 3
        for col in sampled_colorings(G, rng):
            for ell in ells:
                checked += 1
                a = is_valid(G, ell, col)
                b = is_valid_vertex_coloring(M, ell, col)
                if a != b:
                    mism += 1
                    sub += cubic
                    first = first or (G, ell)
                impl += b and not a
    return checked, mism, impl, sub, first


@pytest.mark.xfail(strict=True, reason="the iff fails for l >= 2 at vertices of degree >= 4; see ledger")
def test_criterion_9_medial_correspondence(acceptance):
    gs = [G for G in small_corpus(12, 120) if G.n_edges > 0]
    n1, m1, i1, _, _ = medial_check(gs, (1,))
    n2, m2, i2, s2, first = medial_check(gs, (2,))
    ok = m1 == m2 == 0
    where = "" if first is None else f" (first on a graph with {first[0].n_edges} edges, max degree {max(first[0].degree(v) for v in first[0].vertices())})"
    acceptance(
        9, ok, f"{len(gs)} graphs x 100 colorings: l=1 iff mismatches={m1}/{n1}; "
        f"l=2 iff mismatches={m2}/{n2}{where}; l=2 medial-valid but edge-invalid={i2}; "
        f"l=2 mismatches at max degree <= 3: {s2}"
    )
    assert ok


def test_medial_correspondence_true_parts():
    gs = [G for G in small_corpus(12, 120) if G.n_edges > 0]
    # l = 1 is an iff
    assert medial_check(gs, (1,))[1] == 0
    # vertex-valid on M(G) implies edge-valid on G for l = 2, 3
    assert medial_check(gs, (2, 3))[2] == 0
    # and for l = 2 the converse holds when every degree is at most 3
    sub = [G for G in gs if max(G.degree(v) for v in G.vertices()) <= 3]
    assert sub and medial_check(sub, (2,))[1] == 0


def test_medial_counterexample_at_degree_four():
    # a 4-star with a 4-cycle through the leaves: opposite spokes share no
    # face in G but lie at distance 2 on the vertex face of M(G)
    G = genio.wheel(4)
    spokes = [e for e in G.edges() if 0 in G.endpoints(e)]
    col = {e: i + 1 for i, e in enumerate(G.edges())}
    hub_opposite = [f for f in spokes[1:] if G.facial_distance(spokes[0], f) == float("inf")]
    assert hub_opposite
    col[hub_opposite[0]] = col[spokes[0]]
    assert is_valid(G, 2, col)
    assert not is_valid_vertex_coloring(embed.medial_graph(G), 2, col)


def test_corpus_shapes():
    gs = list(random_corpus(220, 60, 1))
    assert all(G.is_connected() and G.n_edges <= 60 for G in gs)
    assert random_graph(1, 16).n_edges <= 16
