"""
Vertex orderings and the perfect elimination test.

Convention: an ordering is perfect when, for every vertex, its neighbours
that come EARLIER in the ordering are pairwise adjacent.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import structlog

from src.complex.graph import Graph
from src.errors import InvalidOrderingError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class EliminationOrdering:
    order: Tuple[int, ...]

    @cached_property
    def rank(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def earlier_neighbours(self, graph: Graph, v: int) -> FrozenSet[int]:
        r = self.rank[v]
        return frozenset(u for u in graph.neighbours(v) if self.rank[u] < r)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


def lex_bfs(graph: Graph) -> EliminationOrdering:
    """
    Lexicographic breadth-first search.

    Returns the visitation order. Each unvisited vertex carries a label, the
    list of (n - step) values of its visited neighbours; the vertex with the
    lexicographically largest label is visited next, ties going to the
    lowest vertex. For chordal graphs the visitation order is perfect.
    """
    n = graph.m
    labels: Dict[int, List[int]] = {v: [] for v in graph.vertices}
    order: List[int] = []
    for step in range(n):
        v = max(labels, key=lambda u: (labels[u], -u))
        del labels[v]
        order.append(v)
        for u in graph.neighbours(v):
            if u in labels:
                labels[u].append(n - step)
    logger.debug("lex_bfs_completed", vertices=n, order=order)
    return EliminationOrdering(tuple(order))


def _as_ordering(graph: Graph, order: Iterable[int]) -> EliminationOrdering:
    if not isinstance(order, EliminationOrdering):
        order = EliminationOrdering(tuple(order))
    if sorted(order.order) != sorted(graph.vertices):
        raise InvalidOrderingError(
            f"ordering {list(order.order)} is not a permutation of the vertices {list(graph.vertices)}"
        )
    return order


def _iter_violations(graph: Graph, ordering: EliminationOrdering) -> Iterator[Tuple[int, int, int]]:
    for v in ordering.order:
        earlier = sorted(ordering.earlier_neighbours(graph, v))
        for i, u in enumerate(earlier):
            for w in earlier[i + 1:]:
                if not graph.has_edge(u, w):
                    yield v, u, w


def peo_violations(graph: Graph, order: Iterable[int]) -> List[Tuple[int, int, int]]:
    """
    Every (v, u, w) with u < w earlier, non-adjacent neighbours of v.

    Raises:
        InvalidOrderingError: order is not a permutation of the vertices
    """
    return list(_iter_violations(graph, _as_ordering(graph, order)))


def first_violation(graph: Graph, order: Iterable[int]) -> Optional[Tuple[int, int, int]]:
    return next(_iter_violations(graph, _as_ordering(graph, order)), None)


def verify_peo(graph: Graph, order: Iterable[int]) -> bool:
    return first_violation(graph, order) is None
