import networkx as nx
import pytest

from src.chordal import (
    ChordlessCycleCertificate,
    EliminationOrdering,
    find_chordless_cycle_brute_force,
    is_chordal,
    lex_bfs,
    normalize_cycle,
    peo_violations,
    verify_peo,
    wedge_retraction_deloops,
)
from src.chordal.ordering import first_violation
from src.complex import Graph, cycle, octahedron, path, simplex_boundary, skeleton_graph
from src.errors import InvalidOrderingError, NotFlagError
from src.sampling import random_chordal_graph, random_graph, small_graphs

CHORDED_SQUARE = Graph.from_edges(range(1, 5), [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])


def test_lex_bfs_visitation_order():
    assert lex_bfs(skeleton_graph(cycle(5))).order == (1, 2, 5, 3, 4)
    assert lex_bfs(skeleton_graph(octahedron())).order == (1, 3, 5, 6, 4, 2)


def test_verify_peo():
    assert verify_peo(CHORDED_SQUARE, (1, 3, 2, 4))
    assert not verify_peo(CHORDED_SQUARE, (2, 4, 1, 3))
    assert peo_violations(CHORDED_SQUARE, (2, 4, 1, 3)) == [(1, 2, 4), (3, 2, 4)]
    assert first_violation(CHORDED_SQUARE, (1, 2, 3, 4)) is None


def test_ordering_must_be_a_permutation():
    with pytest.raises(InvalidOrderingError):
        verify_peo(CHORDED_SQUARE, (1, 2, 3))
    with pytest.raises(InvalidOrderingError):
        peo_violations(CHORDED_SQUARE, (1, 2, 3, 3))


def test_chordal_graph_gets_an_ordering():
    certificate = is_chordal(CHORDED_SQUARE)
    assert isinstance(certificate, EliminationOrdering)
    assert verify_peo(CHORDED_SQUARE, certificate)


@pytest.mark.parametrize("m", [4, 5, 6, 7, 8])
def test_cycles_get_the_whole_cycle(m):
    certificate = is_chordal(skeleton_graph(cycle(m)))
    assert isinstance(certificate, ChordlessCycleCertificate)
    assert certificate.cycle == tuple(range(1, m + 1))


def test_octahedron_certificate():
    graph = skeleton_graph(octahedron())
    certificate = is_chordal(graph)
    assert certificate.cycle == (3, 5, 4, 6)
    assert certificate.is_valid_for(graph)


def test_normalize_cycle():
    assert normalize_cycle([4, 5, 3, 6]) == (3, 5, 4, 6)
    assert normalize_cycle([3, 2, 1, 4]) == (1, 2, 3, 4)
    assert normalize_cycle([1, 2, 5, 3]) == (1, 2, 5, 3)


def test_invalid_certificates_are_detected():
    graph = skeleton_graph(cycle(5))
    assert not ChordlessCycleCertificate((1, 2, 3)).is_valid_for(graph)
    assert not ChordlessCycleCertificate((1, 2, 3, 4)).is_valid_for(graph)
    assert ChordlessCycleCertificate((1, 2, 3, 4, 5)).is_valid_for(graph)


def test_brute_force_oracle():
    assert find_chordless_cycle_brute_force(skeleton_graph(cycle(6))) == (1, 2, 3, 4, 5, 6)
    assert find_chordless_cycle_brute_force(skeleton_graph(path(6))) is None
    assert find_chordless_cycle_brute_force(skeleton_graph(octahedron())) == (1, 3, 2, 4)


def _check_against_oracles(graph: Graph):
    certificate = is_chordal(graph)
    brute = find_chordless_cycle_brute_force(graph)
    chordal = isinstance(certificate, EliminationOrdering)
    assert chordal == (brute is None), graph
    assert chordal == nx.is_chordal(graph.to_networkx()), graph
    if chordal:
        assert verify_peo(graph, certificate)
    else:
        assert certificate.is_valid_for(graph)
        assert len(certificate) >= len(brute)


def test_agrees_with_oracles_on_all_small_graphs():
    for graph in small_graphs(max_nodes=6):
        _check_against_oracles(graph)


def test_agrees_with_oracles_on_random_graphs(rng):
    for _ in range(300):
        _check_against_oracles(random_graph(rng.randint(7, 8), p=rng.random(), seed=rng))


@pytest.mark.slow
def test_agrees_with_oracles_sweep(rng):
    for graph in small_graphs(max_nodes=7):
        _check_against_oracles(graph)
    for _ in range(10_000):
        _check_against_oracles(random_graph(rng.randint(7, 8), p=rng.random(), seed=rng))


def test_random_chordal_graphs_are_chordal(rng):
    for _ in range(50):
        graph = random_chordal_graph(rng.randint(2, 9), seed=rng)
        assert nx.is_connected(graph.to_networkx())
        assert verify_peo(graph, lex_bfs(graph))


def test_wedge_retraction_deloops():
    assert isinstance(wedge_retraction_deloops(path(4)), EliminationOrdering)
    assert wedge_retraction_deloops(cycle(4)).cycle == (1, 2, 3, 4)
    with pytest.raises(NotFlagError):
        wedge_retraction_deloops(simplex_boundary(3))
