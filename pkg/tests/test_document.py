import json

import pytest
from hypothesis import given

from nervekit import ComplexDocument, DocumentError, emit_complex, emit_cover, parse_complex, parse_cover
from nervekit.generators import circle, circle_arc_cover, coloured_octahedron, path

from strategies import coloured_complexes, complexes


def test_circle_document():
    doc = parse_complex('{"name":"circle","facets":[[0,1],[0,2],[1,2]]}')
    assert doc.complex == circle(3) and doc.colours is None


def test_coloured_path_document():
    doc = parse_complex('{"name":"p","facets":[[0,1],[1,2]],"colours":{"0":[0,2],"1":[1]}}')
    assert doc.complex == path(3)
    assert doc.coloured().classes == ((0, 2), (1,))


@pytest.mark.parametrize("text, code", [
    ('{"facets":[[0,1],[1,2]],"colours":{"0":[0],"1":[1]}}', "COLOUR_PARTITION"),
    ('{"facets":[[0,1],[1,2]],"colours":{"0":[0,1],"1":[1,2]}}', "COLOUR_OVERLAP"),
    ('{"facets":[[0,1]],"colours":{"0":[0],"1":[1,5]}}', "COLOUR_UNKNOWN_VERTEX"),
    ('{"facets":[[0,1],[]]}', "EMPTY_FACET"),
    ('{"facets":[[0,-1]]}', "BAD_VERTEX"),
    ('{"facets":[[0,"a"]]}', "BAD_VERTEX"),
    ('{"facets":[[1,1]]}', "BAD_VERTEX"),
    ('{"facets":[[0,1]]', "MALFORMED"),
    ('[1,2]', "MALFORMED"),
    ('{"name":"x"}', "MALFORMED"),
    ('{"facets":[[0]],"extra":1}', "MALFORMED"),
    ('{"facets":[[0]],"metadata":{"a":1}}', "MALFORMED"),
    ('{"facets":[[0]],"colours":{"zero":[0]}}', "MALFORMED"),
])
def test_error_codes(text, code):
    with pytest.raises(DocumentError) as info:
        parse_complex(text)
    assert info.value.code == code


def test_canonical_field_order():
    doc = ComplexDocument.of("oct", coloured_octahedron(), {"z": "1", "a": "2"})
    data = json.loads(emit_complex(doc))
    assert list(data) == ["name", "facets", "colours", "metadata"]
    assert list(data["metadata"]) == ["a", "z"]
    assert data["facets"] == sorted(data["facets"])


def test_non_maximal_facets_are_dropped():
    doc = parse_complex('{"facets":[[2,1,0],[0,1],[5]]}')
    assert json.loads(emit_complex(doc))["facets"] == [[0, 1, 2], [5]]


@given(complexes())
def test_round_trip_plain(X):
    text = emit_complex(ComplexDocument.of("x", X))
    assert emit_complex(parse_complex(text)) == text
    assert parse_complex(text).complex == X


@given(coloured_complexes())
def test_round_trip_coloured(K):
    text = emit_complex(ComplexDocument.of("k", K))
    back = parse_complex(text)
    assert emit_complex(back) == text
    assert back.coloured().colour_of == K.colour_of


def test_cover_round_trip():
    cov = circle_arc_cover()
    text = emit_cover(cov)
    back = parse_cover(text, cov.host)
    assert back.members == cov.members
    with pytest.raises(DocumentError) as info:
        parse_cover('{"members": [[[0, 9]]]}', cov.host)
    assert info.value.code == "COVER_NOT_SUBCOMPLEX"
    with pytest.raises(DocumentError):
        parse_cover('{"members": []}', cov.host)
