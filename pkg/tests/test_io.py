import pytest

from src.complex import (
    ComplexDocument,
    cycle,
    load_complex,
    read_document,
    read_scx,
    save_complex,
    simplex,
    write_document,
    write_scx,
)
from src.errors import ComplexFormatError, EnumerationGuardError
from tests.conftest import CORPUS_DIR


def test_read_scx_basic():
    K = read_scx("# square\nvertices 4\nfacet 1 2\nfacet 2 3\n\nfacet 3 4  # last edge\nfacet 1 4\n")
    assert K.face_sets() == cycle(4).face_sets()


def test_read_scx_labels_and_ghosts():
    K = read_scx("vertices 3\nlabels 2 5 9\nfacet 2 5\n")
    assert K.labels == (2, 5, 9)
    assert K.ghost_vertices == (9,)


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("vertices 3\nfacet 1 4\n", 2),
        ("vertices 3\nfacet 1 x\n", 2),
        ("facet 1 2\nvertices 3\n", 1),
        ("vertices 3\nvertices 3\n", 2),
        ("vertices 2\nlabels 3 1\n", 2),
        ("vertices 2\n\nedge 1 2\n", 3),
    ],
)
def test_read_scx_errors_name_the_line(text, line_number):
    with pytest.raises(ComplexFormatError) as excinfo:
        read_scx(text, source="bad.scx")
    assert excinfo.value.line_number == line_number
    assert f"bad.scx:{line_number}" in str(excinfo.value)


def test_read_scx_missing_vertices_line():
    with pytest.raises(ComplexFormatError):
        read_scx("# nothing here\n")


def test_read_scx_guard():
    with pytest.raises(EnumerationGuardError):
        read_scx("vertices 6\nfacet 1\n", max_vertices=5)


def test_write_scx_omits_canonical_labels():
    assert write_scx(cycle(3)) == "vertices 3\nfacet 1 2\nfacet 1 3\nfacet 2 3\n"
    assert "labels 2 5 9" in write_scx(read_scx("vertices 3\nlabels 2 5 9\nfacet 2 5\n"))


@pytest.mark.parametrize("path", sorted(CORPUS_DIR.glob("*.scx")), ids=lambda p: p.stem)
def test_corpus_round_trip(path):
    K = load_complex(path)
    assert read_scx(write_scx(K)) == K
    assert read_document(write_document(K)) == K


def test_document_labels_validated():
    with pytest.raises(ValueError):
        ComplexDocument(vertices=2, facets=[[1]], labels=[1, 2, 3])
    with pytest.raises(ComplexFormatError):
        read_document('{"vertices": 0, "facets": []}')
    with pytest.raises(ComplexFormatError):
        read_document('{"vertices": 2, "facets": [[1, 3]]}')


def test_save_and_load(tmp_path):
    K = simplex(3)
    for name in ("tri.scx", "tri.json"):
        target = save_complex(K, tmp_path / name)
        assert load_complex(target) == K


def test_load_missing_file(tmp_path):
    with pytest.raises(ComplexFormatError):
        load_complex(tmp_path / "absent.scx")


@pytest.mark.parametrize("name", ["latin1.scx", "latin1.json"])
def test_load_non_utf8_file_names_the_path(tmp_path, name):
    target = tmp_path / name
    target.write_bytes(b"vertices 3\n# caf\xe9\nfacet 1 2\n")
    with pytest.raises(ComplexFormatError) as excinfo:
        load_complex(target)
    assert str(target) in str(excinfo.value)
    assert "UTF-8" in str(excinfo.value)
    assert excinfo.value.source == str(target)
