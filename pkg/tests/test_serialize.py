"""JSON/DOT emission, parsing, and the on-disk cache."""
import json

import pytest

from crystals.cartan import root_datum
from crystals.errors import InputError
from crystals.graph import structural_equal
from crystals.paths import irreducible
from crystals.serialize import (
    CrystalStore,
    graph_from_dict,
    graph_json_bytes,
    graph_to_dict,
    graph_to_dot,
    to_canonical_json,
)


class TestJson:
    def test_round_trip_structural_identity(self):
        d = root_datum("B2")
        B = irreducible(d, (1, 1))
        obj = json.loads(graph_json_bytes(B).decode("utf-8"))
        parsed = graph_from_dict(obj, d)
        assert structural_equal(B, parsed)

    def test_emission_is_deterministic(self):
        d1, d2 = root_datum("A2"), root_datum("A2")
        assert graph_json_bytes(irreducible(d1, (2, 1))) == \
            graph_json_bytes(irreducible(d2, (2, 1)))

    def test_bytes_end_with_newline(self):
        d = root_datum("A1")
        raw = graph_json_bytes(irreducible(d, (1,)))
        assert raw.endswith(b"\n")
        assert b"\r" not in raw

    def test_parse_rebuilds_datum_when_missing(self):
        d = root_datum("A2")
        obj = graph_to_dict(irreducible(d, (1, 0)))
        parsed = graph_from_dict(obj)
        assert parsed.datum.type == d.type

    def test_rejects_wrong_format_version(self):
        d = root_datum("A1")
        obj = graph_to_dict(irreducible(d, (1,)))
        obj["format"] = 99
        with pytest.raises(InputError):
            graph_from_dict(obj, d)

    def test_canonical_json_sorts_keys(self):
        assert to_canonical_json({"b": 1, "a": 2}) == '{"a":2,"b":1}\n'


class TestDot:
    def test_chain_dot(self):
        d = root_datum("A1")
        text = graph_to_dot(irreducible(d, (2,)))
        assert text.count("->") == 2
        assert 'label="1"' in text

    def test_edge_labels_cover_all_nodes(self):
        d = root_datum("A2")
        text = graph_to_dot(irreducible(d, (1, 1)))
        assert 'label="1"' in text and 'label="2"' in text


class TestStore:
    def test_fetch_writes_then_reads(self, tmp_path):
        d = root_datum("A2")
        store = CrystalStore(tmp_path)
        B1 = store.fetch(d, (1, 1))
        path = store.path_for(d.type, (1, 1))
        assert path.exists()
        B2 = store.fetch(d, (1, 1))
        assert structural_equal(B1, B2)

    def test_regeneration_is_byte_identical(self, tmp_path):
        d = root_datum("C2")
        store = CrystalStore(tmp_path)
        store.fetch(d, (1, 0))
        path = store.path_for(d.type, (1, 0))
        first = path.read_bytes()
        path.unlink()
        store.fetch(d, (1, 0))
        assert path.read_bytes() == first

    def test_round_trip_helper(self, tmp_path):
        d = root_datum("A3")
        store = CrystalStore(tmp_path)
        assert store.verify_round_trip(d, (1, 0, 1))

    def test_zero_weight_path_name(self, tmp_path):
        d = root_datum("A1")
        store = CrystalStore(tmp_path)
        store.fetch(d, (0,))
        assert store.path_for(d.type, (0,)).exists()
