from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph
from stlab.constructions import c5_blowup, complete_graph, cycle_graph, edgeless_graph, z_graph
from stlab.graph import GraphError, edges_inside, induced_subgraph, iter_bits, mask_of, new_graph
from stlab.properties import (
    KOutOfRange,
    SExceedsOrder,
    StQuery,
    chvatal_erdos_holds,
    cycle_spectrum,
    has_cycle_of_length,
    independence_number,
    independence_number_bruteforce,
    is_biconnected,
    is_hamiltonian,
    is_pancyclic,
    is_st_graph,
    is_triangle_free,
    max_independent_set,
    min_induced_size,
    ore_holds,
    st_violation_witness,
    summarize,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)


def subset_sizes(G, s):
    """Induced sizes of all s-subsets, in lexicographic order of the subsets."""
    return [(S, edges_inside(G, mask_of(S))) for S in combinations(range(G.order), s)]


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(G.edges())
    return H


def cycle_lengths_bruteforce(G):
    """Lengths k such that some k-subset, in some order, closes into a cycle."""
    from itertools import permutations

    out = set()
    for k in range(3, G.order + 1):
        for S in combinations(range(G.order), k):
            first, rest = S[0], S[1:]
            if any(
                G.has_edge(first, p[0]) and G.has_edge(p[-1], first)
                and all(G.has_edge(a, b) for a, b in zip(p, p[1:]))
                for p in permutations(rest)
            ):
                out.add(k)
                break
    return out


# ---------------------------------------------------------------- [s,t]


def test_st_query_validation():
    StQuery(4, 6)
    with pytest.raises(GraphError):
        StQuery(4, 7)
    with pytest.raises(GraphError):
        StQuery(0, 0)
    assert StQuery.parse("4,2") == StQuery(4, 2)


def test_min_induced_size_examples():
    sizes = subset_sizes(cycle_graph(6), 4)
    assert len(sizes) == 15
    assert min(e for _, e in sizes) == 2
    assert min_induced_size(cycle_graph(6), 4) == 2
    assert min_induced_size(complete_graph(5), 3) == 3
    assert min_induced_size(edgeless_graph(5), 3) == 0
    with pytest.raises(SExceedsOrder):
        min_induced_size(cycle_graph(5), 6)


def test_st_examples():
    assert is_st_graph(cycle_graph(6), (4, 2))
    sizes = subset_sizes(cycle_graph(7), 4)
    assert len(sizes) == 35
    expected = next(S for S, e in sizes if e < 2)
    assert not is_st_graph(cycle_graph(7), (4, 2))
    w = st_violation_witness(cycle_graph(7), StQuery(4, 2))
    assert tuple(iter_bits(w)) == expected
    assert edges_inside(cycle_graph(7), w) == 1
    assert is_st_graph(complete_graph(3), (4, 2))
    assert is_st_graph(new_graph(3), (4, 2))
    assert st_violation_witness(cycle_graph(6), (4, 2)) is None


@given(graphs(max_order=9), st.integers(1, 6))
def test_min_induced_size_matches_enumeration(G, s):
    if s > G.order:
        return
    assert min_induced_size(G, s) == min(e for _, e in subset_sizes(G, s))
    t = min(s * (s - 1) // 2, min_induced_size(G, s) + 1)
    sizes = subset_sizes(G, s)
    first_bad = next((S for S, e in sizes if e < t), None)
    w = st_violation_witness(G, (s, t))
    assert (w is None) == (first_bad is None)
    if w is not None:
        assert tuple(iter_bits(w)) == first_bad


@given(graphs(max_order=10), st.integers(1, 5))
def test_fact_independence_equivalence(G, k):
    assert (independence_number(G) <= k) == is_st_graph(G, (k + 1, 1))


@given(graphs(min_order=1, max_order=10), st.integers(1, 6), st.integers(1, 8))
def test_fact_monotone(G, s, t):
    if t > s * (s - 1) // 2 or G.order < s + 1:
        return
    if is_st_graph(G, (s, t)):
        assert is_st_graph(G, (s + 1, t + 1))


def test_fact_monotone_needs_positive_t():
    # every graph is a [1,0]-graph, but two isolated vertices are not a [2,1]-graph
    G = new_graph(2)
    assert is_st_graph(G, (1, 0)) and not is_st_graph(G, (2, 1))


@given(graphs(max_order=10), st.integers(1, 5), st.integers(0, 4), st.data())
def test_hereditary(G, s, t, data):
    if t > s * (s - 1) // 2 or not is_st_graph(G, (s, t)):
        return
    S = data.draw(st.integers(0, G.full_mask))
    if S.bit_count() >= s:
        assert is_st_graph(induced_subgraph(G, S), (s, t))


# ---------------------------------------------------------------- independence / connectivity


def test_independence_examples():
    assert independence_number(complete_graph(6)) == 1
    b2 = c5_blowup(2)
    assert independence_number_bruteforce(b2) == 4
    assert independence_number(b2) == 4
    assert independence_number(z_graph(9)) == 3
    assert independence_number(new_graph(0)) == 0


@given(graphs(max_order=11))
def test_independence_matches_bruteforce(G):
    a = independence_number(G)
    assert a == independence_number_bruteforce(G)
    S = max_independent_set(G)
    assert S.bit_count() == a
    assert edges_inside(G, S) == 0


def test_max_independent_set_is_lexicographically_least():
    G = cycle_graph(6)
    assert max_independent_set(G) == mask_of([0, 2, 4])
    c = z_graph(9)
    best = min(
        S for S in combinations(range(9), 3) if edges_inside(c, mask_of(S)) == 0
    )
    assert tuple(iter_bits(max_independent_set(c))) == best


def test_connectivity_examples():
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(z_graph(9)) == 2
    b2 = c5_blowup(2)
    assert vertex_connectivity_bruteforce(b2) == 4
    assert vertex_connectivity(b2) == 4
    assert vertex_connectivity(complete_graph(1)) == 0
    assert vertex_connectivity(new_graph(4)) == 0
    assert vertex_connectivity(complete_graph(2)) == 1


def test_connectivity_dual_algorithm_agreement(rng):
    for _ in range(400):
        n = rng.randint(1, 10)
        G = random_graph(rng, n, rng.uniform(0.2, 0.95))
        k = vertex_connectivity(G)
        assert k == vertex_connectivity_bruteforce(G)
        if n >= 2:
            assert k == nx.node_connectivity(to_nx(G))
        assert is_biconnected(G) == (k >= 2)


# ---------------------------------------------------------------- cycles


def test_triangle_free_examples():
    assert is_triangle_free(c5_blowup(3))
    assert not is_triangle_free(complete_graph(4))
    assert not is_triangle_free(z_graph(9))


def test_cycle_examples():
    assert cycle_spectrum(cycle_graph(6)) == {6}
    assert cycle_spectrum(complete_graph(5)) == {3, 4, 5}
    assert all(has_cycle_of_length(z_graph(9), k) for k in range(3, 10))
    assert is_pancyclic(complete_graph(3))
    assert is_hamiltonian(cycle_graph(6)) and not is_pancyclic(cycle_graph(6))
    assert is_pancyclic(z_graph(9))
    assert not is_pancyclic(complete_graph(2))
    with pytest.raises(KOutOfRange):
        has_cycle_of_length(cycle_graph(5), 2)
    with pytest.raises(KOutOfRange):
        has_cycle_of_length(cycle_graph(5), 6)


@settings(max_examples=150)
@given(graphs(max_order=7))
def test_cycle_spectrum_matches_bruteforce(G):
    assert set(cycle_spectrum(G)) == cycle_lengths_bruteforce(G)


@given(graphs(max_order=9))
def test_pancyclic_implications(G):
    if is_pancyclic(G):
        assert is_hamiltonian(G)
        assert not is_triangle_free(G)


# ---------------------------------------------------------------- classical conditions


def test_classical_conditions():
    assert not chvatal_erdos_holds(z_graph(9))
    assert chvatal_erdos_holds(complete_graph(4))
    assert ore_holds(cycle_graph(4))
    assert not ore_holds(cycle_graph(5))


def test_summaries():
    s = summarize(c5_blowup(3))
    assert (s.order, s.min_degree, s.max_degree, s.triangle_free) == (15, 6, 6, True)
    k1 = summarize(complete_graph(1))
    assert (k1.independence_number, k1.connectivity, k1.cycle_spectrum) == (1, 0, ())
    z = summarize(z_graph(9))
    assert (z.connectivity, z.independence_number) == (2, 3)
    assert z.pancyclic and z.cycle_spectrum == tuple(range(3, 10))


@given(graphs(min_order=1, max_order=9))
def test_summary_invariants(G):
    s = summarize(G)
    assert s.min_degree <= s.max_degree < s.order
    assert s.connectivity <= s.min_degree
    assert s.independence_number >= 1
    assert set(s.cycle_spectrum) <= set(range(3, s.order + 1))
