"""Exhaustive induced-cycle search. Exponential; used to cross-check is_chordal."""

from typing import List, Optional, Tuple

from src.chordal.certificates import normalize_cycle
from src.complex.faces import bit, face_sort_key, positions
from src.complex.graph import Graph


def _walk_cycle(members: List[int], adjacency: List[int], mask: int) -> Optional[List[int]]:
    """The members in cyclic order if the subgraph induced on mask is a single cycle."""
    for p in members:
        if (adjacency[p] & mask).bit_count() != 2:
            return None
    walk = [members[0]]
    previous, current = None, members[0]
    while True:
        a, b = positions(adjacency[current] & mask)
        step = b if a == previous else a
        if step == members[0]:
            break
        walk.append(step)
        previous, current = current, step
    return walk if len(walk) == len(members) else None


def find_chordless_cycle_brute_force(graph: Graph) -> Optional[Tuple[int, ...]]:
    """Shortest (then lexicographically first) induced cycle of length >= 4, or None."""
    vertices = graph.vertices
    index = {v: p for p, v in enumerate(vertices)}
    adjacency = [0] * len(vertices)
    for u, v in graph.edges:
        adjacency[index[u]] |= bit(index[v])
        adjacency[index[v]] |= bit(index[u])

    candidates = [mask for mask in range(1 << len(vertices)) if mask.bit_count() >= 4]
    for mask in sorted(candidates, key=face_sort_key):
        walk = _walk_cycle(positions(mask), adjacency, mask)
        if walk is not None:
            return normalize_cycle([vertices[p] for p in walk])
    return None
