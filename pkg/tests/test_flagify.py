import pytest

from src.complex import (
    cycle,
    discrete,
    embed,
    from_facets,
    is_flag,
    octahedron,
    path,
    simplex,
    simplex_boundary,
    skeleton_graph,
)
from src.errors import GroundSetMismatchError
from src.flag import delooping_certificate, flagify, is_minimal_flag_extension
from src.sampling import all_complexes, all_flag_complexes, random_complex


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_flagification_of_simplex_boundary_is_simplex(m):
    result = flagify(simplex_boundary(m))
    assert result.flag_complex == simplex(m)
    assert result.added_faces == [tuple(range(1, m + 1))]
    assert result.changed


def test_flag_input_is_unchanged():
    result = flagify(cycle(5))
    assert result.flag_complex == cycle(5)
    assert result.added_faces == []
    assert not result.changed


def test_added_faces_are_sorted():
    # two hollow triangles sharing the edge {1,2}
    K = from_facets(4, [[1, 2], [1, 3], [2, 3], [1, 4], [2, 4]])
    assert flagify(K).added_faces == [(1, 2, 3), (1, 2, 4)]


def test_ghost_vertices_survive():
    K = embed(simplex_boundary(3), [4])
    F = flagify(K).flag_complex
    assert F.ghost_vertices == (4,)
    assert F.has_face([1, 2, 3])


def test_idempotent_on_random_complexes(rng):
    for _ in range(200):
        K = random_complex(rng.randint(1, 8), seed=rng)
        F = flagify(K).flag_complex
        assert is_flag(F)
        assert K.faces <= F.faces
        assert flagify(F).flag_complex == F


def _minimality_failures(m):
    """Complexes on [m] whose flagification is not inside every flag complex containing them."""
    candidates = [C.faces for C in all_flag_complexes(m)]
    failures = []
    for K in all_complexes(m):
        F = flagify(K).flag_complex
        if not is_minimal_flag_extension(K, F):
            failures.append(K)
        elif any(K.faces <= C and not F.faces <= C for C in candidates):
            failures.append(K)
    return failures


@pytest.mark.parametrize("m, complexes, flag_complexes", [(1, 2, 2), (2, 5, 5), (3, 19, 18), (4, 167, 113)])
def test_exhaustive_enumeration_counts(m, complexes, flag_complexes):
    assert sum(1 for _ in all_complexes(m)) == complexes
    assert sum(1 for _ in all_flag_complexes(m)) == flag_complexes
    assert all(is_flag(C) for C in all_flag_complexes(m))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_minimality_on_every_complex(m):
    assert _minimality_failures(m) == []


def test_minimality_covers_ghost_vertices():
    ghosted = [K for K in all_complexes(3) if K.ghost_vertices]
    assert len(ghosted) == 10
    for K in ghosted:
        assert flagify(K).flag_complex.ghost_vertices == K.ghost_vertices


@pytest.mark.slow
def test_minimality_on_every_complex_with_five_vertices():
    assert sum(1 for _ in all_complexes(5)) == 7580
    assert _minimality_failures(5) == []


def test_skeleton_is_unchanged_by_flagification(rng):
    for K in all_complexes(4):
        assert skeleton_graph(flagify(K).flag_complex) == skeleton_graph(K)
    for _ in range(100):
        K = random_complex(rng.randint(1, 8), seed=rng)
        assert skeleton_graph(flagify(K).flag_complex) == skeleton_graph(K)


def test_is_minimal_flag_extension_rejects_larger_flag_complex():
    assert not is_minimal_flag_extension(discrete(3), simplex(3))
    assert not is_minimal_flag_extension(simplex_boundary(3), simplex_boundary(3))
    with pytest.raises(GroundSetMismatchError):
        is_minimal_flag_extension(discrete(3), simplex(4))


def test_delooping_certificate():
    assert delooping_certificate(path(4)).status == "deloops"
    # hollow triangle: chordal 1-skeleton, not flag
    certificate = delooping_certificate(simplex_boundary(3))
    assert (certificate.status, certificate.reason) == ("deloops", "chordal")
    assert certificate.ordering == (1, 2, 3)


@pytest.mark.parametrize("K", [cycle(4), cycle(5), octahedron()], ids=["cycle_4", "cycle_5", "octahedron"])
def test_flag_complexes_deloop_by_identity(K):
    assert not flagify(K).changed
    certificate = delooping_certificate(K)
    assert (certificate.status, certificate.reason) == ("deloops", "identity")
    assert certificate.cycle is not None


def test_non_flag_with_chordless_cycle_is_undetermined():
    # 4-cycle 1-2-3-4 with a hollow triangle {1,2,5} attached along the edge {1,2}
    K = from_facets(5, [[1, 2], [2, 3], [3, 4], [1, 4], [1, 5], [2, 5]])
    assert flagify(K).added_faces == [(1, 2, 5)]
    certificate = delooping_certificate(K)
    assert (certificate.status, certificate.reason) == ("undetermined", "chordless_cycle")
    assert certificate.cycle == (1, 2, 3, 4)
