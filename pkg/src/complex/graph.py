"""Simple undirected graphs (1-skeleta of complexes)."""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Tuple

import networkx as nx

from src.errors import VertexRangeError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]

    def __post_init__(self):
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise ValueError(f"duplicate vertices in {self.vertices}")
        for u, v in self.edges:
            if u == v:
                raise VertexRangeError(f"loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) is not normalized (u < v)")
            if u not in vertex_set or v not in vertex_set:
                raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside {list(self.vertices)}")

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "Graph":
        normalized = set()
        for edge in edges:
            u, v = edge
            normalized.add((min(u, v), max(u, v)))
        return cls(tuple(sorted(vertices)), frozenset(normalized))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        return cls.from_edges(graph.nodes, graph.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(sorted(self.edges))
        return graph

    @property
    def m(self) -> int:
        return len(self.vertices)

    @cached_property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    def neighbours(self, v: int) -> FrozenSet[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise VertexRangeError(f"vertex {v} is not in the graph") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(vertices)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])
