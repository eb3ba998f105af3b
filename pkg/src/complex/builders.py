"""Standard complexes used throughout the corpus and tests."""

from typing import Iterable, Optional, Sequence, Set

from src.complex.faces import bit
from src.complex.graph import Graph
from src.complex.operations import join
from src.complex.simplicial import SimplicialComplex, check_enumeration_guard
from src.errors import VertexRangeError


def _ground(m: int, minimum: int = 1) -> Sequence[int]:
    if m < minimum:
        raise VertexRangeError(f"need at least {minimum} vertices, got {m}")
    check_enumeration_guard(m)
    return tuple(range(1, m + 1))


def simplex(m: int) -> SimplicialComplex:
    """Δ^{m-1}: every subset of [m]."""
    labels = _ground(m)
    return SimplicialComplex.from_facet_masks(labels, [(1 << m) - 1])


def simplex_boundary(m: int) -> SimplicialComplex:
    """∂Δ^{m-1}: every proper subset of [m]."""
    labels = _ground(m)
    full = (1 << m) - 1
    return SimplicialComplex.from_facet_masks(labels, [full & ~bit(p) for p in range(m)])


def cycle(m: int) -> SimplicialComplex:
    labels = _ground(m, minimum=3)
    return SimplicialComplex.from_facet_masks(labels, [bit(p) | bit((p + 1) % m) for p in range(m)])


def path(m: int) -> SimplicialComplex:
    labels = _ground(m)
    if m == 1:
        return point()
    return SimplicialComplex.from_facet_masks(labels, [bit(p) | bit(p + 1) for p in range(m - 1)])


def discrete(m: int) -> SimplicialComplex:
    """m disjoint points."""
    labels = _ground(m)
    return SimplicialComplex.from_facet_masks(labels, [bit(p) for p in range(m)])


def point(label: int = 1) -> SimplicialComplex:
    return SimplicialComplex.from_facet_masks((label,), [1])


def octahedron() -> SimplicialComplex:
    """∂Δ¹ * ∂Δ¹ * ∂Δ¹ with antipodal pairs (1,2), (3,4), (5,6)."""
    return join(join(discrete(2), discrete(2)), discrete(2))


def clique_masks(adjacency: Sequence[int], vertex_mask: int) -> Set[int]:
    """
    All cliques of a graph given by position adjacency masks, as face masks.

    Grown one vertex at a time: a clique only extends by vertices above its
    largest member that are adjacent to every member.
    """
    cliques = {0}
    stack = [(0, vertex_mask)]
    while stack:
        clique, candidates = stack.pop()
        remaining = candidates
        while remaining:
            low = remaining & -remaining
            p = low.bit_length() - 1
            remaining &= ~low
            grown = clique | low
            cliques.add(grown)
            stack.append((grown, remaining & adjacency[p]))
    return cliques


def clique_complex(graph: Graph, labels: Optional[Iterable[int]] = None) -> SimplicialComplex:
    """
    Flag complex of a graph: faces are the cliques.

    The ground set defaults to the graph's vertices; pass `labels` to place
    the complex on a larger ground set (extra labels become ghost vertices).
    """
    ground = tuple(sorted(set(labels) | set(graph.vertices))) if labels is not None else graph.vertices
    check_enumeration_guard(len(ground))
    position_of = {label: p for p, label in enumerate(ground)}
    adjacency = [0] * len(ground)
    for u, v in graph.edges:
        adjacency[position_of[u]] |= bit(position_of[v])
        adjacency[position_of[v]] |= bit(position_of[u])
    vertex_mask = 0
    for v in graph.vertices:
        vertex_mask |= bit(position_of[v])
    return SimplicialComplex(ground, frozenset(clique_masks(adjacency, vertex_mask)))
