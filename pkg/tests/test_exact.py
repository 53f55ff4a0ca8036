import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfec import exact, genio
from lfec.embed import PlaneGraph
from lfec.facial import verify

from . import brute
from .corpus import named, random_graph, small_corpus

# 2-facial chromatic indices, frozen from brute.min_colors_backtrack
CHI2 = {
    "cycle3": 3, "cycle4": 4, "cycle5": 5, "cycle6": 3, "cycle7": 4, "cycle8": 4,
    "wheel3": 3, "wheel4": 4, "wheel5": 5, "wheel6": 3, "wheel7": 4, "wheel8": 4,
    "prism3": 5, "prism4": 4, "prism5": 5, "prism6": 5, "prism7": 5,
    "cube": 4, "dodecahedron": 5, "octahedron": 3,
    "tight2": 7, "tight3": 5, "tight4": 4,
    "subk4_1": 3, "subk4_2": 6, "subk4_3": 4, "subk4_4": 5,
}  # fmt: skip


@pytest.mark.parametrize("name", sorted(CHI2))
def test_frozen_chi2(name):
    G = named()[name]
    rep = exact.min_colors(G, 2)
    assert rep.status == "optimal" and rep.chi == CHI2[name]
    assert verify(G, 2, rep.witness) == []
    assert exact.is_k_colorable(G, 2, rep.chi - 1) is None


def test_triangle():
    c3 = genio.cycle(3)
    assert exact.is_k_colorable(c3, 2, 3) is not None
    assert exact.is_k_colorable(c3, 2, 2) is None


def test_empty_graph():
    G = PlaneGraph({0: []}, {})
    assert exact.is_k_colorable(G, 2, 0) is not None
    assert exact.min_colors(G, 2).chi == 0


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles(n):
    want = 3 if n % 3 == 0 else (5 if n == 5 else 4)
    assert exact.min_colors(genio.cycle(n), 2).chi == want


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_tight_family(ell):
    assert exact.min_colors(genio.tight_family(ell), ell).chi == 3 * ell + 1


def test_against_enumeration():
    for G in small_corpus(8, 40):
        for ell in (1, 2):
            assert exact.min_colors(G, ell).chi == brute.min_colors_enum(G, ell)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_symmetry_pruning_is_neutral(seed):
    G = random_graph(seed, 10)
    a = exact.min_colors(G, 2, symmetry=True)
    b = exact.min_colors(G, 2, symmetry=False)
    assert a.chi == b.chi == brute.min_colors_backtrack(G, 2)


def test_budget_reports_unknown():
    G = genio.dodecahedron()
    rep = exact.min_colors(G, 2, budget=5)
    assert rep.status == "unknown" and rep.chi is None
    with pytest.raises(exact.SearchBudgetExceeded):
        exact.is_k_colorable(G, 2, 5, budget=5)


def test_kmax():
    rep = exact.min_colors(genio.tight_family(2), 2, kmax=6)
    assert rep.status == "above_kmax" and rep.chi is None
    assert rep.lower_bound == 7


def test_parallel_matches_serial():
    for G in [genio.dodecahedron(), genio.prism(7), genio.tight_family(2)]:
        assert exact.min_colors(G, 2, jobs=3).chi == exact.min_colors(G, 2).chi
