import pytest

from src.complex import clique_complex, cycle, discrete, embed, octahedron, path, point, simplex, simplex_boundary
from src.complex.simplicial import SimplicialComplex
from src.decomposition import SphereAssignment
from src.errors import EnumerationGuardError, GhostVertexError, NotFlagError
from src.homology import (
    BettiTable,
    betti_polyhedral,
    betti_zk,
    boundary_matrices,
    check_boundary_squared,
    is_cone,
    reduced_betti,
    reduced_betti_table,
    verify_decomposition,
)
from src.homology.verification import STATUS_NOT_CO_H, STATUS_PASS
from src.sampling import random_chordal_graph, random_complex, small_graphs


def test_reduced_betti_of_standard_complexes():
    assert reduced_betti_table(cycle(4)) == {1: 1}
    assert reduced_betti_table(simplex_boundary(4)) == {2: 1}
    assert reduced_betti_table(discrete(3)) == {0: 2}
    assert reduced_betti_table(octahedron()) == {2: 1}
    assert reduced_betti_table(point()) == {}
    assert reduced_betti(cycle(6), 1) == 1


def test_void_complex_has_homology_in_degree_minus_one():
    void = SimplicialComplex((1,), frozenset({0}))
    assert reduced_betti_table(void) == {-1: 1}


def test_cone_shortcut_agrees_with_rank_computation():
    K = simplex(4)
    assert is_cone(K)
    assert not is_cone(cycle(4))
    assert reduced_betti_table(K, cone_shortcut=True) == reduced_betti_table(K, cone_shortcut=False) == {}


def test_boundary_squares_to_zero(rng):
    check_boundary_squared(boundary_matrices(octahedron()))
    for _ in range(30):
        K = random_complex(rng.randint(1, 6), seed=rng)
        check_boundary_squared(boundary_matrices(K))
        # check=True also compares Euler characteristics
        reduced_betti_table(K, check=True, cone_shortcut=False)


def test_boundary_ranks_of_a_triangle():
    matrices = boundary_matrices(simplex(3))
    assert matrices[0].shape == (1, 3)
    assert [matrices[k].rank for k in (0, 1, 2)] == [1, 2, 1]


@pytest.mark.parametrize(
    "complex_, expected",
    [
        (discrete(3), {0: 1, 3: 3, 4: 2}),
        (path(3), {0: 1, 3: 1}),
        (cycle(4), {0: 1, 3: 2, 6: 1}),
        (cycle(5), {0: 1, 3: 5, 4: 5, 7: 1}),
        (octahedron(), {0: 1, 3: 3, 6: 3, 9: 1}),
        (simplex_boundary(3), {0: 1, 5: 1}),
    ],
    ids=["three_points", "path_3", "square", "pentagon", "octahedron", "hollow_triangle"],
)
def test_betti_zk(complex_, expected):
    assert betti_zk(complex_) == expected


def test_betti_polyhedral_shifts_degrees():
    table = betti_polyhedral(path(3), SphereAssignment((3, 2, 4)))
    assert table == {0: 1, 6: 1}
    assert table.euler_characteristic() == 2
    assert table.as_series().terms() == {0: 1, 6: 1}
    assert table.truncated(5) == {0: 1}


def test_betti_table_behaviour():
    table = BettiTable({3: 0, 0: 1, 4: 2})
    assert table.ranks == {0: 1, 4: 2}
    assert table[7] == 0
    assert table.total == 3
    assert table.top_degree == 4


def test_oracle_guards():
    with pytest.raises(EnumerationGuardError):
        betti_zk(cycle(11))
    assert betti_zk(cycle(4), max_vertices=4) == {0: 1, 3: 2, 6: 1}
    with pytest.raises(GhostVertexError):
        betti_zk(embed(path(3), [4]))
    with pytest.raises(ValueError):
        betti_polyhedral(path(3), SphereAssignment((2, 2)))


def test_verify_pentagon_rejects_with_witnesses():
    report = verify_decomposition(cycle(5))
    assert report.status == STATUS_NOT_CO_H
    assert not report.passed
    assert report.certificate.cycle == (1, 2, 3, 4, 5)
    assert report.witness.omega == (1, 2, 3, 4, 5)
    assert report.witness.degree == 1 and report.witness.rank == 1
    assert report.witness_betti_degree == 7
    assert report.betti[7] == 1


def test_verify_tree_passes(corpus):
    report = verify_decomposition(corpus("tree"))
    assert report.status == STATUS_PASS
    assert report.wedge_betti == report.betti == {0: 1, 3: 3, 4: 2}
    assert report.higher_homology == []


def test_verify_requires_flag():
    with pytest.raises(NotFlagError):
        verify_decomposition(simplex_boundary(3))


@pytest.mark.parametrize("m", [4, 5, 6, 7, 8])
def test_cycles_are_not_co_h(m):
    report = verify_decomposition(cycle(m))
    assert report.status == STATUS_NOT_CO_H
    assert report.witness.degree >= 1 and report.witness.rank >= 1


def test_oracle_equivalence_on_small_chordal_graphs():
    for graph in small_graphs(max_nodes=5):
        K = clique_complex(graph)
        report = verify_decomposition(K)
        assert report.chordal == (report.certificate is None)
        if report.chordal:
            assert report.status == STATUS_PASS, str(K)


def test_oracle_equivalence_on_random_chordal_graphs(rng):
    for _ in range(20):
        K = clique_complex(random_chordal_graph(rng.randint(2, 7), p=rng.random(), seed=rng))
        assert verify_decomposition(K).status == STATUS_PASS, str(K)


@pytest.mark.slow
def test_oracle_equivalence_sweep(rng):
    for graph in small_graphs(max_nodes=6):
        K = clique_complex(graph)
        report = verify_decomposition(K)
        if report.chordal:
            assert report.status == STATUS_PASS, str(K)
    for _ in range(500):
        K = clique_complex(random_chordal_graph(rng.randint(7, 9), p=rng.random(), seed=rng))
        assert verify_decomposition(K).status == STATUS_PASS, str(K)
