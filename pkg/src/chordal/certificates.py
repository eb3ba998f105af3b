"""
Chordality with a certificate either way.

is_chordal returns a perfect elimination ordering when the graph is
chordal, and a chordless cycle of length >= 4 otherwise.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import networkx as nx
import structlog

from src.chordal.ordering import EliminationOrdering, first_violation, lex_bfs, peo_violations
from src.complex.graph import Graph
from src.complex.operations import flag_witness, skeleton_graph
from src.complex.simplicial import SimplicialComplex
from src.errors import NotFlagError, OracleInconsistencyError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ChordlessCycleCertificate:
    """An induced cycle, listed from its smallest vertex towards its smaller neighbour."""
    cycle: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def is_valid_for(self, graph: Graph) -> bool:
        k = len(self.cycle)
        if k < 4 or len(set(self.cycle)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if graph.has_edge(self.cycle[i], self.cycle[j]) != consecutive:
                    return False
        return True


ChordalityCertificate = Union[EliminationOrdering, ChordlessCycleCertificate]


def normalize_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    cycle = list(cycle)
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def _extract_cycle(graph: Graph, ordering: EliminationOrdering) -> ChordlessCycleCertificate:
    """
    For a violation (v, u, w), a shortest u-w path avoiding the rest of the
    closed neighbourhood of v closes a chordless cycle through u, v, w.
    Such a path exists for at least one violation: the latest vertex of any
    chordless cycle has one.
    """
    nx_graph = graph.to_networkx()
    for v, u, w in peo_violations(graph, ordering):
        blocked = (graph.neighbours(v) | {v}) - {u, w}
        allowed = nx_graph.subgraph(x for x in graph.vertices if x not in blocked)
        try:
            path = nx.shortest_path(allowed, u, w)
        except nx.NetworkXNoPath:
            continue
        return ChordlessCycleCertificate(normalize_cycle([v] + path))

    raise OracleInconsistencyError(
        f"ordering {list(ordering.order)} fails the elimination test but no chordless cycle was found"
    )


def is_chordal(graph: Graph) -> ChordalityCertificate:
    ordering = lex_bfs(graph)
    if first_violation(graph, ordering) is None:
        logger.debug("graph_chordal", vertices=graph.m, edges=len(graph.edges))
        return ordering

    certificate = _extract_cycle(graph, ordering)
    if not certificate.is_valid_for(graph):
        raise OracleInconsistencyError(f"extracted cycle {list(certificate.cycle)} is not chordless")
    logger.debug("graph_not_chordal", vertices=graph.m, cycle=list(certificate.cycle))
    return certificate


def wedge_retraction_deloops(K: SimplicialComplex) -> ChordalityCertificate:
    """
    For flag K, the looped inclusion of the wedge summand has a right
    homotopy inverse exactly when the 1-skeleton is chordal. Returns the
    ordering (it does) or the cycle (it does not).

    Raises:
        NotFlagError: K is not flag
    """
    witness = flag_witness(K)
    if witness is not None:
        raise NotFlagError(witness)
    return is_chordal(skeleton_graph(K))
