"""
Seeded random and exhaustive generators for sweeps and tests.

All generators take a `random.Random` (or a seed) so every sweep is
reproducible from the `--seed` value.
"""

import random
from typing import Iterator, Optional, Union

import networkx as nx
import structlog

from src.complex.builders import clique_complex
from src.complex.faces import bit, face_sort_key, positions
from src.complex.graph import Graph
from src.complex.simplicial import SimplicialComplex

logger = structlog.get_logger(__name__)

Seed = Union[int, random.Random, None]


def _rng(seed: Seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def _to_graph(nx_graph: nx.Graph) -> Graph:
    """Relabel nodes to 1..n in sorted order."""
    mapping = {node: i for i, node in enumerate(sorted(nx_graph.nodes), start=1)}
    return Graph.from_networkx(nx.relabel_nodes(nx_graph, mapping))


def random_graph(m: int, p: float = 0.5, seed: Seed = None) -> Graph:
    rng = _rng(seed)
    return _to_graph(nx.gnp_random_graph(m, p, seed=rng))


def random_complex(m: int, facet_count: Optional[int] = None, seed: Seed = None) -> SimplicialComplex:
    """Downward closure of random vertex subsets; may have ghost vertices."""
    rng = _rng(seed)
    if facet_count is None:
        facet_count = rng.randint(1, max(1, m + 1))
    facets = []
    for _ in range(facet_count):
        size = rng.randint(1, m)
        facets.append(rng.sample(range(1, m + 1), size))
    return SimplicialComplex.from_facets(m, facets)


def random_flag_complex(m: int, p: float = 0.5, seed: Seed = None) -> SimplicialComplex:
    return clique_complex(random_graph(m, p, seed))


def random_chordal_graph(m: int, p: float = 0.3, seed: Seed = None, connected: bool = True) -> Graph:
    """
    Random chordal graph on [m]: a G(m, p) sample, optionally joined into one
    component, then completed to a chordal graph by fill-in edges.
    """
    rng = _rng(seed)
    g = nx.gnp_random_graph(m, p, seed=rng)
    if connected:
        components = [sorted(c) for c in nx.connected_components(g)]
        for left, right in zip(components, components[1:]):
            g.add_edge(rng.choice(left), rng.choice(right))
    chordal, _ = nx.complete_to_chordal_graph(g)
    logger.debug("random_chordal_graph", m=m, p=p, edges=chordal.number_of_edges())
    return _to_graph(chordal)


def small_graphs(max_nodes: int = 6, min_nodes: int = 1) -> Iterator[Graph]:
    """Every graph with min_nodes..max_nodes vertices up to isomorphism (max 7)."""
    if max_nodes > 7:
        raise ValueError("the graph atlas only covers graphs with at most 7 nodes")
    for g in nx.graph_atlas_g():
        if min_nodes <= g.number_of_nodes() <= max_nodes:
            yield _to_graph(g)


MAX_EXHAUSTIVE_VERTICES = 5


def all_complexes(m: int) -> Iterator[SimplicialComplex]:
    """
    Every simplicial complex on the ground set [m], ghost vertices included.

    Faces are decided in size order, so a face can be added only once all
    of its codimension-one faces are in. There are 2, 5, 19, 167, 7580 of
    them for m = 1..5.
    """
    if not 1 <= m <= MAX_EXHAUSTIVE_VERTICES:
        raise ValueError(f"exhaustive enumeration needs 1 <= m <= {MAX_EXHAUSTIVE_VERTICES}, got {m}")
    labels = tuple(range(1, m + 1))
    order = sorted(range(1, 1 << m), key=face_sort_key)
    faces = {0}

    def extend(i: int) -> Iterator[SimplicialComplex]:
        if i == len(order):
            yield SimplicialComplex(labels, frozenset(faces))
            return
        face = order[i]
        yield from extend(i + 1)
        if all((face & ~bit(p)) in faces for p in positions(face)):
            faces.add(face)
            yield from extend(i + 1)
            faces.remove(face)

    yield from extend(0)


def all_flag_complexes(m: int) -> Iterator[SimplicialComplex]:
    """Every flag complex on [m]: one clique complex per graph on each vertex subset."""
    if not 1 <= m <= MAX_EXHAUSTIVE_VERTICES:
        raise ValueError(f"exhaustive enumeration needs 1 <= m <= {MAX_EXHAUSTIVE_VERTICES}, got {m}")
    labels = tuple(range(1, m + 1))
    for vertex_mask in range(1 << m):
        vertices = tuple(p + 1 for p in positions(vertex_mask))
        pairs = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]
        for selection in range(1 << len(pairs)):
            edges = frozenset(pairs[i] for i in range(len(pairs)) if selection >> i & 1)
            yield clique_complex(Graph(vertices, edges), labels=labels)
