"""
Abstract simplicial complexes on a finite labelled ground set.

The full face family is stored as a frozenset of bit masks. Every complex
carries its ground set as a strictly increasing tuple of labels; bit p of
a face mask refers to labels[p]. Complexes built by from_facets live on
[m] = (1, ..., m); links, deletions and full subcomplexes keep the labels
of the vertices they retain.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import structlog

from src.complex.faces import FaceSet, bit, face_sort_key, positions, submasks
from src.config import get_config
from src.errors import EnumerationGuardError, VertexRangeError

logger = structlog.get_logger(__name__)


def _max_vertices_guard(max_vertices: Optional[int]) -> int:
    if max_vertices is not None:
        return max_vertices
    return get_config().max_vertices


def check_enumeration_guard(m: int, max_vertices: Optional[int] = None, what: str = "core operations") -> None:
    limit = _max_vertices_guard(max_vertices)
    if m > limit:
        logger.warning("enumeration_guard_exceeded", m=m, limit=limit, what=what)
        raise EnumerationGuardError(m, limit, what)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    A downward-closed family of faces on the ground set `labels`.

    The empty face is always present. A label whose singleton is not a face
    is a ghost vertex.
    """
    labels: Tuple[int, ...]
    faces: FrozenSet[int]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.labels, self.labels[1:])):
            raise ValueError(f"labels must be strictly increasing: {self.labels}")
        if self.labels and self.labels[0] < 1:
            raise VertexRangeError(f"labels must be positive: {self.labels}")
        if 0 not in self.faces:
            raise ValueError("the empty face must belong to every complex")
        full = (1 << len(self.labels)) - 1
        if any(f & ~full for f in self.faces):
            raise VertexRangeError("face mask refers to a vertex outside the ground set")

    # ── ground set ──────────────────────────────────────────────────────────

    @property
    def m(self) -> int:
        return len(self.labels)

    @cached_property
    def _position_of(self) -> Dict[int, int]:
        return {label: p for p, label in enumerate(self.labels)}

    def position(self, label: int) -> int:
        try:
            return self._position_of[label]
        except KeyError:
            raise VertexRangeError(
                f"vertex {label} is not in the ground set {list(self.labels)}"
            ) from None

    def label_mask(self, labels: Iterable[int]) -> int:
        mask = 0
        for label in labels:
            mask |= bit(self.position(label))
        return mask

    def face_labels(self, mask: int) -> FaceSet:
        return tuple(self.labels[p] for p in positions(mask))

    @cached_property
    def vertex_mask(self) -> int:
        return sum(bit(p) for p in range(self.m) if bit(p) in self.faces)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.face_labels(self.vertex_mask)

    @property
    def ghost_vertices(self) -> Tuple[int, ...]:
        full = (1 << self.m) - 1
        return self.face_labels(full & ~self.vertex_mask)

    # ── faces ───────────────────────────────────────────────────────────────

    @cached_property
    def sorted_faces(self) -> Tuple[int, ...]:
        """Face masks sorted by size, then lexicographically."""
        return tuple(sorted(self.faces, key=face_sort_key))

    def face_sets(self) -> FrozenSet[FaceSet]:
        return frozenset(self.face_labels(f) for f in self.faces)

    def has_face(self, labels: Iterable[int]) -> bool:
        try:
            return self.label_mask(labels) in self.faces
        except VertexRangeError:
            return False

    def __contains__(self, labels) -> bool:
        return self.has_face(labels)

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def dimension(self) -> int:
        return max(f.bit_count() for f in self.faces) - 1

    def f_vector(self) -> Tuple[int, ...]:
        """Face counts by size; index 0 counts the empty face."""
        counts = [0] * (self.dimension + 2)
        for f in self.faces:
            counts[f.bit_count()] += 1
        return tuple(counts)

    @cached_property
    def facet_masks(self) -> Tuple[int, ...]:
        """Maximal faces, sorted by size then lexicographically."""
        maximal = []
        for f in self.sorted_faces:
            if not any((f | bit(p)) in self.faces for p in range(self.m) if not f >> p & 1):
                maximal.append(f)
        return tuple(maximal)

    def facets(self) -> List[FaceSet]:
        return [self.face_labels(f) for f in self.facet_masks]

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        """adjacency[p] is the mask of positions joined to p by an edge."""
        adj = [0] * self.m
        for f in self.faces:
            if f.bit_count() == 2:
                a, b = positions(f)
                adj[a] |= bit(b)
                adj[b] |= bit(a)
        return tuple(adj)

    def __str__(self) -> str:
        facets = " ".join("{" + ",".join(map(str, face)) + "}" for face in self.facets())
        ghosts = f", ghosts {list(self.ghost_vertices)}" if self.ghost_vertices else ""
        return f"SimplicialComplex(m={self.m}, facets {facets or '{}'}{ghosts})"

    # ── constructors ────────────────────────────────────────────────────────

    @classmethod
    def from_facet_masks(cls, labels: Sequence[int], facet_masks: Iterable[int]) -> "SimplicialComplex":
        faces = {0}
        for facet in facet_masks:
            if facet in faces:
                continue
            faces.update(submasks(facet))
        return cls(tuple(labels), frozenset(faces))

    @classmethod
    def from_facets(
        cls,
        m: int,
        facets: Iterable[Iterable[int]],
        labels: Optional[Sequence[int]] = None,
        max_vertices: Optional[int] = None,
    ) -> "SimplicialComplex":
        """
        Downward closure of a facet list on the ground set [m].

        Args:
            m: ground set size
            facets: vertex subsets (labels; 1-based unless `labels` is given)
            labels: optional ground-set labels, strictly increasing, length m
            max_vertices: enumeration guard (default from config)

        Raises:
            VertexRangeError: m <= 0 or a facet names a vertex outside the ground set
            EnumerationGuardError: m exceeds the guard
        """
        if m <= 0:
            raise VertexRangeError(f"ground set size must be positive, got {m}")
        check_enumeration_guard(m, max_vertices)
        if labels is None:
            labels = tuple(range(1, m + 1))
        elif len(labels) != m:
            raise VertexRangeError(f"expected {m} labels, got {len(labels)}")

        position_of = {label: p for p, label in enumerate(labels)}
        masks = []
        for facet in facets:
            mask = 0
            for v in facet:
                if v not in position_of:
                    raise VertexRangeError(
                        f"facet {sorted(facet)} names vertex {v} outside the ground set {list(labels)}"
                    )
                mask |= bit(position_of[v])
            masks.append(mask)

        complex_ = cls.from_facet_masks(labels, masks)
        logger.debug("complex_constructed", m=m, faces=len(complex_), facets_given=len(masks))
        return complex_


def from_facets(m: int, facets: Iterable[Iterable[int]], max_vertices: Optional[int] = None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(m, facets, max_vertices=max_vertices)


def is_downward_closed(complex_: SimplicialComplex) -> bool:
    """Validator: every codimension-one face of a face is a face."""
    faces = complex_.faces
    for f in faces:
        for p in positions(f):
            if (f & ~bit(p)) not in faces:
                return False
    return 0 in faces
