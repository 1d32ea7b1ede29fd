import numpy as np
import pytest

from pqbezier import PQCurve, PQParams, PQSurface, SceneError, parse_scene, serialize_scene
from pqbezier.scene import SceneDocument, document_from_obj, scene_for

from conftest import SURFACE_NET, SURFACE_PARAMS

MINIMAL_CURVE = '{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": [[0, 0], [1, 1]]}'

CANONICAL_CURVE = """{
  "kind": "curve",
  "params": {
    "p": 1.0,
    "q": 0.5
  },
  "points": [
    [
      0.0,
      0.0
    ],
    [
      1.0,
      1.0
    ]
  ]
}
"""


class TestParse:
    def test_minimal_curve_doc(self):
        doc = parse_scene(MINIMAL_CURVE)
        curve = doc.curve()
        assert isinstance(curve, PQCurve)
        assert curve.degree == 1
        assert curve.params == PQParams(1.0, 0.5)
        assert doc.warnings == []

    def test_surface_doc(self):
        doc = parse_scene(
            '{"kind": "surface", "params": {"pu": 1, "qu": 0.5, "pv": 0.8, "qv": 0.5},'
            ' "points": [[[0,0,0],[0,1,0]],[[1,0,0],[1,1,1]]]}'
        )
        surface = doc.surface()
        assert isinstance(surface, PQSurface)
        assert (surface.degree_u, surface.degree_v) == (1, 1)

    def test_non_ordered_parses_with_warning(self):
        doc = parse_scene('{"kind": "curve", "params": {"p": 0.5, "q": 0.9}, "points": [[0,0],[1,1]]}')
        assert len(doc.warnings) == 1
        assert "q > p" in doc.warnings[0]

    def test_metadata_kept(self):
        doc = parse_scene(
            '{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": [[0,0],[1,1]],'
            ' "metadata": {"name": "demo", "samples": 33}}'
        )
        assert doc.metadata == {"name": "demo", "samples": 33}


class TestParseErrors:
    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("not json", "line 1 column 1"),
            ("[1, 2]", "top-level"),
            ('{"params": {}, "points": []}', "kind"),
            ('{"kind": "blob", "params": {}, "points": []}', "kind"),
            ('{"kind": "curve", "params": {"p": 1}, "points": [[0,0]]}', "missing parameter 'q'"),
            ('{"kind": "curve", "params": {"p": 1, "q": 0.5, "x": 2}, "points": [[0,0]]}', "unknown parameter"),
            ('{"kind": "curve", "params": {"p": 0, "q": 0.5}, "points": [[0,0]]}', "positive"),
            ('{"kind": "curve", "params": {"p": true, "q": 0.5}, "points": [[0,0]]}', "number"),
            ('{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": []}', "points"),
            ('{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": [[0,0],[1,1,1]]}', "points[1]"),
            ('{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": [[0,"a"],[1,1]]}', "points[0][1]"),
            ('{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": [[0,0],[1,1]], "extra": 1}', "unknown field"),
            ('{"kind": "surface", "params": {"pu":1,"qu":0.5,"pv":1,"qv":0.5}, "points": [[[0,0,0]],[[0,0,0],[1,1,1]]]}', "rectangular"),
            ('{"kind": "surface", "params": {"pu":1,"qu":0.5,"pv":1,"qv":0.5}, "points": [[[0,0]]]}', "points[0][0]"),
            ('{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": [[0,0],[1,1]], "metadata": 3}', "metadata"),
        ],
    )
    def test_rejects_with_location(self, text, fragment):
        with pytest.raises(SceneError) as err:
            parse_scene(text)
        assert fragment in str(err.value)

    def test_degree_guard(self):
        points = [[float(i), 0.0] for i in range(67)]
        doc = {"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": points}
        with pytest.raises(SceneError, match="degree"):
            document_from_obj(doc)

    def test_kind_mismatch_on_access(self):
        doc = parse_scene(MINIMAL_CURVE)
        with pytest.raises(SceneError):
            doc.surface()


class TestSerialize:
    def test_canonicalizes_integers(self):
        doc = parse_scene(MINIMAL_CURVE)
        assert serialize_scene(doc) == CANONICAL_CURVE

    def test_roundtrip_is_byte_stable(self):
        text = serialize_scene(parse_scene(MINIMAL_CURVE))
        assert serialize_scene(parse_scene(text)) == text

    def test_canonical_doc_roundtrips_byte_for_byte(self):
        assert serialize_scene(parse_scene(CANONICAL_CURVE)) == CANONICAL_CURVE

    def test_metadata_sorted_and_optional(self):
        doc = parse_scene(
            '{"kind": "curve", "params": {"p": 1, "q": 0.5}, "points": [[0,0],[1,1]],'
            ' "metadata": {"zeta": 1, "alpha": 2}}'
        )
        text = serialize_scene(doc)
        assert text.index('"alpha"') < text.index('"zeta"')
        bare = parse_scene(MINIMAL_CURVE)
        assert "metadata" not in serialize_scene(bare)

    def test_surface_roundtrip(self):
        surface = PQSurface(*SURFACE_PARAMS, SURFACE_NET)
        doc = SceneDocument.from_surface(surface, {"name": "patch"})
        text = serialize_scene(doc)
        again = parse_scene(text)
        assert serialize_scene(again) == text
        assert np.array_equal(again.surface().net, surface.net)


class TestBuilders:
    def test_from_curve_roundtrip(self):
        curve = PQCurve(PQParams(0.8, 0.5), [(0.0, 0.0), (1.0, 3.0), (4.0, 0.0)])
        doc = scene_for(curve)
        again = parse_scene(serialize_scene(doc)).curve()
        assert np.array_equal(again.points, curve.points)
        assert again.params == curve.params

    def test_from_surface_builder(self):
        surface = PQSurface(*SURFACE_PARAMS, SURFACE_NET)
        doc = scene_for(surface)
        assert doc.kind == "surface"
        assert doc.warnings == []

    def test_scene_for_rejects_other_types(self):
        with pytest.raises(TypeError):
            scene_for(42)

    def test_non_ordered_builder_warns(self):
        curve = PQCurve(PQParams(0.5, 0.9), [(0.0, 0.0), (1.0, 1.0)])
        doc = SceneDocument.from_curve(curve)
        assert doc.warnings
