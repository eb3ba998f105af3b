"""Simplicial complexes on a finite ground set and their elementary constructions."""

from src.complex.builders import (
    clique_complex,
    cycle,
    discrete,
    octahedron,
    path,
    point,
    simplex,
    simplex_boundary,
)
from src.complex.faces import FaceSet
from src.complex.graph import Graph
from src.complex.io import (
    ComplexDocument,
    load_complex,
    read_document,
    read_scx,
    save_complex,
    write_document,
    write_scx,
)
from src.complex.operations import (
    connected_component_count,
    delete,
    embed,
    flag_witness,
    full_subcomplex,
    is_flag,
    join,
    link,
    missing_faces,
    relabel,
    skeleton_graph,
    star,
)
from src.complex.simplicial import SimplicialComplex, from_facets, is_downward_closed

__all__ = [
    "FaceSet",
    "Graph",
    "SimplicialComplex",
    "from_facets",
    "is_downward_closed",
    "star",
    "link",
    "delete",
    "join",
    "embed",
    "relabel",
    "full_subcomplex",
    "missing_faces",
    "flag_witness",
    "is_flag",
    "skeleton_graph",
    "connected_component_count",
    "simplex",
    "simplex_boundary",
    "cycle",
    "path",
    "discrete",
    "point",
    "octahedron",
    "clique_complex",
    "ComplexDocument",
    "read_scx",
    "write_scx",
    "read_document",
    "write_document",
    "load_complex",
    "save_complex",
]
