"""Functions to test the orbit fixtures and published tables."""
import pytest

import nilcent.examples
from nilcent.components import normalize_label
from nilcent.rootsys import RootSystem, parse_label


class TestFixtures:

    def test_fixtures_exist(self):
        for name in nilcent.examples.ALGEBRAS:
            data = nilcent.examples.load_fixture(name)
            assert data["algebra"] == name
            assert data["orbits"][0]["label"] == "0"
        assert len(nilcent.examples.fixture_hash("G2")) == 12
        pytest.raises(ValueError, nilcent.examples.load_fixture, "A2")

    def test_normalize_orbit_label(self):
        assert nilcent.examples.normalize_orbit_label("Ã1") == "~A1"
        assert nilcent.examples.normalize_orbit_label("A2 + Ã1") == "A2+~A1"
        assert nilcent.examples.normalize_orbit_label("F4(a3)") == "F4(a3)"

    def test_orbit_records(self):
        record = nilcent.examples.orbit_record("F4", "Ã1")
        assert record["wdd"] == [0, 0, 0, 1]
        assert record["dim"] == 22
        assert nilcent.examples.orbit_record("E7", "E7(a5)")["wdd"] is None
        pytest.raises(ValueError, nilcent.examples.orbit_record, "F4", "E6")
        pytest.raises(ValueError, nilcent.examples.orbit_record, "B3", "A1")

    def test_diagram_lengths(self):
        for name in nilcent.examples.ALGEBRAS:
            rank = RootSystem.from_type(name).rank
            for record in nilcent.examples.orbit_records(name):
                assert record["wdd"] is None or len(record["wdd"]) == rank, record["label"]
                assert record["wdd"] is None or set(record["wdd"]) <= {0, 1, 2}, record["label"]

    def test_table_rows(self):
        row = nilcent.examples.table_row("G2", "G2(a1)")
        assert row["group"] == "S3"
        assert row["c2"] == "G2"
        assert nilcent.examples.table_row("G2", "A1") is None
        for name in nilcent.examples.ALGEBRAS:
            for row in nilcent.examples.table_rows(name):
                assert normalize_label(row["group"]) != "1"
                assert row.get("erratum", False) or parse_label(row["c2"])
                assert "note" in row or not row.get("erratum", False)
        pytest.raises(ValueError, nilcent.examples.table_rows, "D4")

    def test_classical_example(self):
        triple, generators = nilcent.examples.classical_example()
        assert triple.algebra.dim == 10
        assert triple.label == "(3,1,1)"
        assert sorted(generators) == [1, 3]
        assert all(g.det() in (1, -1) for g in generators.values())
