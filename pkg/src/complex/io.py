"""
Reading and writing complexes.

Two formats:

.scx text::

    # comment
    vertices 4
    labels 2 3 5 7        (optional, defaults to 1..m)
    facet 2 3
    facet 5

.json structured document (ComplexDocument)::

    {"vertices": 4, "facets": [[2, 3], [5]], "labels": [2, 3, 5, 7]}

Facets name vertices by label. Both formats keep ghost vertices.
"""

from pathlib import Path
from typing import List, Optional, Union

import structlog
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.complex.simplicial import SimplicialComplex
from src.errors import ComplexFormatError, PolyflagError, VertexRangeError

logger = structlog.get_logger(__name__)

PathLike = Union[str, Path]


class ComplexDocument(BaseModel):
    """Structured form of a simplicial complex."""
    vertices: int = Field(..., ge=1, description="Ground set size m")
    facets: List[List[int]] = Field(default_factory=list, description="Facets as lists of vertex labels")
    labels: Optional[List[int]] = Field(
        None,
        description="Ground set labels, strictly increasing; omitted means 1..m",
    )

    model_config = {
        "json_schema_extra": {
            "examples": [
                {"vertices": 3, "facets": [[1, 2], [2, 3], [1, 3]]},
                {"vertices": 3, "facets": [[2, 5]], "labels": [2, 5, 9]},
            ]
        }
    }

    @model_validator(mode="after")
    def _labels_match_size(self):
        if self.labels is not None and len(self.labels) != self.vertices:
            raise ValueError(f"labels has {len(self.labels)} entries but vertices is {self.vertices}")
        return self


def _canonical(labels) -> bool:
    return tuple(labels) == tuple(range(1, len(labels) + 1))


# =============================================================================
# .scx
# =============================================================================

def read_scx(text: str, source: Optional[str] = None, max_vertices: Optional[int] = None) -> SimplicialComplex:
    """
    Parse .scx text.

    Raises:
        ComplexFormatError: malformed input, with the offending line number
        EnumerationGuardError: the ground set is larger than the guard
    """
    m: Optional[int] = None
    labels: Optional[List[int]] = None
    facets: List[tuple] = []   # (line number, vertices)

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()
        try:
            values = [int(x) for x in fields]
        except ValueError:
            raise ComplexFormatError(f"expected integers after '{keyword}', got {' '.join(fields)!r}",
                                     line_number, source) from None

        if keyword == "vertices":
            if m is not None:
                raise ComplexFormatError("duplicate 'vertices' line", line_number, source)
            if len(values) != 1 or values[0] <= 0:
                raise ComplexFormatError("'vertices' takes one positive integer", line_number, source)
            m = values[0]
        elif keyword == "labels":
            if m is None:
                raise ComplexFormatError("'labels' before 'vertices'", line_number, source)
            if labels is not None:
                raise ComplexFormatError("duplicate 'labels' line", line_number, source)
            if len(values) != m:
                raise ComplexFormatError(f"'labels' needs {m} entries, got {len(values)}", line_number, source)
            if any(b <= a for a, b in zip(values, values[1:])) or values[0] < 1:
                raise ComplexFormatError("labels must be positive and strictly increasing", line_number, source)
            labels = values
        elif keyword == "facet":
            if m is None:
                raise ComplexFormatError("'facet' before 'vertices'", line_number, source)
            facets.append((line_number, values))
        else:
            raise ComplexFormatError(f"unknown keyword {keyword!r}", line_number, source)

    if m is None:
        raise ComplexFormatError("missing 'vertices' line", None, source)

    ground = labels or list(range(1, m + 1))
    allowed = set(ground)
    for line_number, vertices in facets:
        outside = [v for v in vertices if v not in allowed]
        if outside:
            raise ComplexFormatError(
                f"facet {vertices} names vertex {outside[0]} outside the ground set {ground}",
                line_number, source,
            )

    complex_ = SimplicialComplex.from_facets(m, [v for _, v in facets], labels=ground, max_vertices=max_vertices)
    logger.debug("scx_parsed", source=source, m=m, facets=len(facets))
    return complex_


def write_scx(K: SimplicialComplex) -> str:
    lines = [f"vertices {K.m}"]
    if not _canonical(K.labels):
        lines.append("labels " + " ".join(map(str, K.labels)))
    for facet in K.facets():
        if facet:
            lines.append("facet " + " ".join(map(str, facet)))
    return "\n".join(lines) + "\n"


# =============================================================================
# structured document
# =============================================================================

def to_document(K: SimplicialComplex) -> ComplexDocument:
    return ComplexDocument(
        vertices=K.m,
        facets=[list(f) for f in K.facets() if f],
        labels=None if _canonical(K.labels) else list(K.labels),
    )


def from_document(document: ComplexDocument, max_vertices: Optional[int] = None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(
        document.vertices, document.facets, labels=document.labels, max_vertices=max_vertices
    )


def read_document(text: str, source: Optional[str] = None, max_vertices: Optional[int] = None) -> SimplicialComplex:
    try:
        document = ComplexDocument.model_validate_json(text)
    except ValidationError as e:
        raise ComplexFormatError(f"invalid complex document: {e.errors()[0]['msg']}", None, source) from e
    try:
        return from_document(document, max_vertices=max_vertices)
    except VertexRangeError as e:
        raise ComplexFormatError(str(e), None, source) from e


def write_document(K: SimplicialComplex, indent: Optional[int] = 2) -> str:
    return to_document(K).model_dump_json(indent=indent, exclude_none=True)


# =============================================================================
# files
# =============================================================================

def load_complex(path: PathLike, max_vertices: Optional[int] = None) -> SimplicialComplex:
    """Read a complex from a .scx or .json file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error("complex_read_failed", path=str(path), error=str(e), error_type=type(e).__name__)
        raise ComplexFormatError(f"cannot read file: {e.strerror or e}", None, str(path)) from e
    except UnicodeDecodeError as e:
        logger.error("complex_decode_failed", path=str(path), position=e.start)
        raise ComplexFormatError(f"not UTF-8 text (byte {e.start})", None, str(path)) from e

    if path.suffix.lower() == ".json":
        complex_ = read_document(text, source=str(path), max_vertices=max_vertices)
    else:
        complex_ = read_scx(text, source=str(path), max_vertices=max_vertices)
    logger.info("complex_loaded", path=str(path), m=complex_.m, faces=len(complex_))
    return complex_


def save_complex(K: SimplicialComplex, path: PathLike) -> Path:
    path = Path(path)
    text = write_document(K) + "\n" if path.suffix.lower() == ".json" else write_scx(K)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        logger.error("complex_write_failed", path=str(path), error=str(e), error_type=type(e).__name__)
        raise PolyflagError(f"cannot write {path}: {e.strerror or e}") from e
    logger.info("complex_saved", path=str(path), m=K.m)
    return path
