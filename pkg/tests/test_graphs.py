"""
Tests for pattern graphs, Cayley graph oracles, injective counting and the
subdivision expansion
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constructions import inner_product
from core import BooleanFunction, BudgetExceededError, PreconditionError
from graphs import (
    BipartitePattern,
    Estimate,
    InjectionMap,
    SimplePattern,
    bc_adjacent,
    bc_edge_count,
    bhom_fixed_left,
    bipartite_from_edges,
    codegree,
    codegree_direct,
    codegree_target,
    complete_graph,
    degree_target,
    falling_factorial,
    injective_product_sum,
    monte_carlo_injective_mean,
    path_graph,
    rainbow_density_via_subdivision,
    rainbow_embedding_density,
    rhg_edge,
    set_partitions,
    small_graphs,
    star_graph,
    subdivision,
    subgraph_expansion_sum,
)
from graphs.counting import bell_number


def cherry() -> BipartitePattern:
    return bipartite_from_edges([("a", "r"), ("b", "r"), ("a", "s")])


# ======================================================================
# Patterns
# ======================================================================

def test_bipartite_degree_classes():
    G = cherry()
    assert G.left == ("a", "b")
    assert G.right == ("r", "s")
    assert G.neighbors("r") == ("a", "b")
    assert G.D1 == ("s",) and G.D2 == ("r",)
    assert (G.r1, G.r2, G.max_right_degree) == (1, 1, 2)
    assert G.to_networkx().number_of_edges() == 3


def test_bipartite_validation():
    with pytest.raises(PreconditionError):
        BipartitePattern(("a", "a"), ("r",), ())
    with pytest.raises(PreconditionError):
        BipartitePattern(("a",), ("a",), ())
    with pytest.raises(PreconditionError):
        BipartitePattern(("a",), ("r",), (("a", "r"), ("a", "r")))
    with pytest.raises(PreconditionError):
        BipartitePattern(("a",), ("r",), (("r", "a"),))


def test_simple_pattern_validation():
    with pytest.raises(PreconditionError):
        SimplePattern(("0", "1"), (("0", "0"),))
    with pytest.raises(PreconditionError):
        SimplePattern(("0", "1"), (("0", "1"), ("1", "0")))
    with pytest.raises(PreconditionError):
        SimplePattern(("0",), (("0", "1"),))


def test_injection_validation():
    with pytest.raises(PreconditionError):
        InjectionMap(3, (("a", 1), ("b", 1)))
    with pytest.raises(PreconditionError):
        InjectionMap(3, (("a", 8),))
    with pytest.raises(PreconditionError):
        InjectionMap(3, (("a", 1), ("a", 2)))
    psi = InjectionMap.from_dict(3, {"a": 1, "b": 6})
    assert psi["b"] == 6
    assert psi.diameter == 3
    assert psi.as_dict() == {"a": "1", "b": "6"}
    with pytest.raises(KeyError):
        psi["c"]


def test_subdivision_of_triangle():
    sub = subdivision(complete_graph(3))
    assert sub.left == ("0", "1", "2")
    assert len(sub.right) == 3
    assert len(sub.edges) == 6
    assert sub.r2 == 3 and sub.r1 == 0


def test_named_graphs():
    assert len(path_graph(4).edges) == 3
    assert len(star_graph(3).vertices) == 4
    assert len(complete_graph(4).edges) == 6


def test_small_graph_atlas_counts():
    # 1, 2, 4 and 11 graphs on 1..4 vertices
    assert len(small_graphs(4)) == 18
    with pytest.raises(PreconditionError):
        small_graphs(8)


# ======================================================================
# Cayley graph oracles
# ======================================================================

def test_bc_adjacency_is_symmetric():
    f = BooleanFunction.random(4, seed=6)
    for u, v in itertools.product(range(16), repeat=2):
        assert bc_adjacent(f, u, v) == bc_adjacent(f, v, u)


def test_bc_edge_count_and_targets():
    f = inner_product(2)
    assert bc_edge_count(f) == 16 * 6
    assert codegree_target(f) == Fraction(1, 8)
    assert degree_target(f) == Fraction(3, 8)


def test_codegree_from_spectrum_matches_direct_count():
    f = BooleanFunction.random(4, seed=17)
    for u, v in itertools.product(range(16), repeat=2):
        assert codegree(f, u, v) == codegree_direct(f, u, v)


@given(st.integers(1, 6), st.integers(0, 2 ** 16), st.data())
@settings(max_examples=25, deadline=None)
def test_codegree_is_translation_invariant(n, seed, data):
    f = BooleanFunction.random(n, seed=seed)
    u, v, w = data.draw(st.tuples(*[st.integers(0, (1 << n) - 1)] * 3))
    assert codegree(f, u ^ w, v ^ w) == codegree(f, u, v)
    assert codegree_direct(f, u ^ w, v ^ w) == codegree_direct(f, u, v)


def test_codegree_rejects_outside_points():
    with pytest.raises(PreconditionError):
        codegree(inner_product(2), 0, 16)


def test_rhg_edges():
    f = BooleanFunction([1, -1, 1, 1])
    assert rhg_edge(f, 0, 2, 0)
    assert not rhg_edge(f, 0, 1, 0)
    with pytest.raises(PreconditionError):
        rhg_edge(f, 1, 1, 0)


# ======================================================================
# Counting
# ======================================================================

@pytest.mark.parametrize("m, bell", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
def test_set_partitions_are_counted_by_bell_numbers(m, bell):
    partitions = list(set_partitions(list(range(m))))
    assert len(partitions) == bell
    assert bell_number(m) == bell
    for partition in partitions:
        assert sorted(x for block in partition for x in block) == list(range(m))


def test_falling_factorial():
    assert falling_factorial(8, 3) == 336
    assert falling_factorial(4, 5) == 0
    assert falling_factorial(5, 0) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_injective_product_sum_matches_enumeration(m):
    rng = np.random.default_rng(m)
    indicators = [rng.integers(0, 2, size=8) for _ in range(m)]
    brute = sum(
        int(np.prod([indicators[r][c[r]] for r in range(m)]))
        for c in itertools.permutations(range(8), m)
    )
    assert injective_product_sum(indicators) == brute


def test_star_density_on_inner_product():
    """Test the 2-star density on IP4: two distinct right images among six negatives"""
    f = inner_product(2)
    star = bipartite_from_edges([("a", "r"), ("a", "s")])
    psi = InjectionMap.from_dict(4, {"a": 0})
    est = bhom_fixed_left(star, psi, f)
    assert est.exact
    assert est.value == Fraction(6 * 5, 16 * 15)


def test_monte_carlo_agrees_with_exact():
    f = inner_product(3)
    psi = InjectionMap.from_dict(6, {"a": 1, "b": 2})
    exact = bhom_fixed_left(cherry(), psi, f, mode="exact").value
    est = bhom_fixed_left(cherry(), psi, f, mode="montecarlo", samples=20000, seed=3)
    assert est.method == "montecarlo"
    assert abs(est.value - float(exact)) <= 5 * est.stderr
    assert est.ci_low < est.value < est.ci_high


def test_monte_carlo_does_not_depend_on_workers():
    f = inner_product(3)
    psi = InjectionMap.from_dict(6, {"a": 1, "b": 2})
    serial = bhom_fixed_left(cherry(), psi, f, mode="montecarlo", samples=10000, seed=9)
    parallel = bhom_fixed_left(cherry(), psi, f, mode="montecarlo", samples=10000, seed=9, n_jobs=2)
    assert serial == parallel


def test_estimate_as_dict():
    assert Estimate(Fraction(1, 2), "exact").as_dict() == {"value": Fraction(1, 2), "method": "exact"}
    sampled = Estimate(0.5, "montecarlo", stderr=0.1, ci_low=0.2, ci_high=0.8, samples=10, seed=1).as_dict()
    assert sampled["ci"] == [0.2, 0.8]
    assert sampled["seed"] == 1


def test_counting_preconditions():
    f = inner_product(2)
    with pytest.raises(PreconditionError):
        bhom_fixed_left(cherry(), InjectionMap.from_dict(4, {"a": 1}), f)
    with pytest.raises(PreconditionError):
        bhom_fixed_left(cherry(), InjectionMap.from_dict(3, {"a": 1, "b": 2}), f)
    with pytest.raises(PreconditionError):
        bhom_fixed_left(cherry(), InjectionMap.from_dict(4, {"a": 1, "b": 2}), f, mode="fast")
    with pytest.raises(BudgetExceededError):
        bhom_fixed_left(cherry(), InjectionMap.from_dict(4, {"a": 1, "b": 2}), f, mode="exact", budget=1)
    with pytest.raises(PreconditionError):
        monte_carlo_injective_mean([np.ones(4)], 2, samples=1)


# ======================================================================
# Rainbow embeddings and the subdivision expansion
# ======================================================================

def test_subgraph_expansion_is_a_power():
    points = np.random.default_rng(9).uniform(0.0, 1.0, size=(5, 3))
    for G in small_graphs(4):
        for x, y, z in points:
            expected = (1 + x + y + z) ** len(G.edges)
            assert subgraph_expansion_sum(G, x, y, z) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("G", [complete_graph(2), star_graph(2), path_graph(4), complete_graph(3)],
                         ids=["K2", "star2", "path4", "K3"])
def test_rainbow_density_through_subdivision(G):
    f = BooleanFunction.random(5, seed=31)
    phi = InjectionMap.from_dict(5, {v: p for v, p in zip(G.vertices, (0b00000, 0b00011, 0b00101, 0b01001))})
    direct = rainbow_embedding_density(G, phi, f)
    assert direct.exact
    assert rainbow_density_via_subdivision(G, phi, f) == direct.value


def test_repeated_colours_give_product_density():
    f = BooleanFunction.random(4, seed=2)
    G = path_graph(3)
    phi = InjectionMap.from_dict(4, {"0": 1, "1": 2, "2": 4})
    est = rainbow_embedding_density(G, phi, f, injective_colors=False)
    points = np.arange(16)
    first = int(np.count_nonzero(f.table[points ^ 1] == f.table[points ^ 2]))
    second = int(np.count_nonzero(f.table[points ^ 2] == f.table[points ^ 4]))
    assert est.value == Fraction(first * second, 256)


def test_rainbow_injection_must_fit_the_ball():
    f = BooleanFunction.random(4, seed=2)
    G = complete_graph(2)
    with pytest.raises(PreconditionError):
        rainbow_embedding_density(G, InjectionMap.from_dict(4, {"0": 0, "1": 0b111}), f, d=2)
    with pytest.raises(PreconditionError):
        rainbow_embedding_density(G, InjectionMap.from_dict(4, {"0": 0b11, "1": 0b1100}), f, d=2)
    with pytest.raises(PreconditionError):
        rainbow_embedding_density(G, InjectionMap.from_dict(4, {"0": 0}), f)
