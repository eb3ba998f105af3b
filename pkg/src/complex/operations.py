"""
Elementary constructions on simplicial complexes.

Conventions: star_K(v) lives on the same ground set as K; K \\ v and
link_K(v) live on the ground set with v removed, keeping the labels of
the remaining vertices. Full subcomplexes live on ω.
"""

from typing import Iterable, List, Optional

import structlog
from networkx.utils import UnionFind

from src.complex.faces import FaceSet, bit, compress, expand, face_sort_key, positions
from src.complex.graph import Graph
from src.complex.simplicial import SimplicialComplex, check_enumeration_guard

logger = structlog.get_logger(__name__)


def star(K: SimplicialComplex, v: int) -> SimplicialComplex:
    b = bit(K.position(v))
    faces = frozenset(f for f in K.faces if (f | b) in K.faces)
    return SimplicialComplex(K.labels, faces)


def delete(K: SimplicialComplex, v: int) -> SimplicialComplex:
    p = K.position(v)
    b = bit(p)
    kept = [q for q in range(K.m) if q != p]
    faces = frozenset(compress(f, kept) for f in K.faces if not f & b)
    return SimplicialComplex(tuple(K.labels[q] for q in kept), faces)


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    p = K.position(v)
    b = bit(p)
    kept = [q for q in range(K.m) if q != p]
    faces = frozenset(compress(f, kept) for f in K.faces if not f & b and (f | b) in K.faces)
    return SimplicialComplex(tuple(K.labels[q] for q in kept), faces)


def join(K1: SimplicialComplex, K2: SimplicialComplex, max_vertices: Optional[int] = None) -> SimplicialComplex:
    """
    K1 * K2 = {σ1 ∪ σ2}. Disjoint label sets are kept as they are;
    otherwise K2 is re-indexed to follow the largest label of K1.
    """
    if set(K1.labels).isdisjoint(K2.labels):
        labels2 = K2.labels
    else:
        offset = max(K1.labels, default=0)
        labels2 = tuple(label + offset for label in K2.labels)

    merged = tuple(sorted(K1.labels + labels2))
    check_enumeration_guard(len(merged), max_vertices)
    position_of = {label: p for p, label in enumerate(merged)}
    targets1 = [position_of[label] for label in K1.labels]
    targets2 = [position_of[label] for label in labels2]

    faces1 = [expand(f, targets1) for f in K1.faces]
    faces2 = [expand(f, targets2) for f in K2.faces]
    faces = frozenset(a | b for a in faces1 for b in faces2)
    logger.debug("join_built", m1=K1.m, m2=K2.m, faces=len(faces), shifted=labels2 != K2.labels)
    return SimplicialComplex(merged, faces)


def full_subcomplex_mask(K: SimplicialComplex, omega_mask: int) -> SimplicialComplex:
    kept = positions(omega_mask)
    outside = ~omega_mask
    faces = frozenset(compress(f, kept) for f in K.faces if not f & outside)
    return SimplicialComplex(tuple(K.labels[q] for q in kept), faces)


def full_subcomplex(K: SimplicialComplex, omega: Iterable[int]) -> SimplicialComplex:
    """K_ω = {σ ∈ K | σ ⊆ ω}, on the ground set ω."""
    return full_subcomplex_mask(K, K.label_mask(omega))


def missing_face_masks(K: SimplicialComplex) -> List[int]:
    # every missing face is a face plus one vertex
    candidates = set()
    for f in K.faces:
        for p in range(K.m):
            if not f >> p & 1:
                candidates.add(f | bit(p))
    missing = [
        w for w in candidates
        if w not in K.faces and all((w & ~bit(p)) in K.faces for p in positions(w))
    ]
    return sorted(missing, key=face_sort_key)


def missing_faces(K: SimplicialComplex) -> List[FaceSet]:
    """Inclusion-minimal non-faces, by size then lexicographically. Ghost vertices appear as singletons."""
    return [K.face_labels(w) for w in missing_face_masks(K)]


def flag_witness(K: SimplicialComplex) -> Optional[FaceSet]:
    """First missing face with three or more vertices, if any."""
    for w in missing_face_masks(K):
        if w.bit_count() >= 3:
            return K.face_labels(w)
    return None


def is_flag(K: SimplicialComplex) -> bool:
    return flag_witness(K) is None


def skeleton_graph(K: SimplicialComplex) -> Graph:
    edges = frozenset(K.face_labels(f) for f in K.faces if f.bit_count() == 2)
    return Graph(K.vertices, edges)


def induced_component_count(K: SimplicialComplex, omega_mask: int) -> int:
    """Connected components of the 1-skeleton of K_ω (ω given as a mask over vertices of K)."""
    members = positions(omega_mask & K.vertex_mask)
    if not members:
        return 0
    components = UnionFind(members)
    for p in members:
        for q in positions(K.adjacency[p] & omega_mask):
            if q > p:
                components.union(p, q)
    return sum(1 for _ in components.to_sets())


def connected_component_count(K: SimplicialComplex) -> int:
    return induced_component_count(K, K.vertex_mask)


def relabel(K: SimplicialComplex, labels: Iterable[int]) -> SimplicialComplex:
    """Same face family on a new (strictly increasing) ground set."""
    labels = tuple(labels)
    if len(labels) != K.m:
        raise ValueError(f"expected {K.m} labels, got {len(labels)}")
    return SimplicialComplex(labels, K.faces)


def embed(K: SimplicialComplex, labels: Iterable[int]) -> SimplicialComplex:
    """Regard K as a complex on a larger ground set; the new labels become ghost vertices."""
    merged = tuple(sorted(set(labels) | set(K.labels)))
    position_of = {label: p for p, label in enumerate(merged)}
    targets = [position_of[label] for label in K.labels]
    return SimplicialComplex(merged, frozenset(expand(f, targets) for f in K.faces))
