"""Functions to test the nilcent command line interface."""
import json
import os

import pytest

import nilcent.cli
import nilcent.examples
from nilcent.cli import (EXIT_FAILURE, EXIT_OK, SCHEMA, choose_route, cmd_component_group, cmd_orbits, cmd_tables,
                         cmd_verify, compare_row, main, published_table, parse_partition, resolve_triple, same_type,
                         structure_row)
from nilcent.sl2 import representative

STRETCH = bool(os.environ.get("NILCENT_STRETCH"))


class TestInputs:

    def test_parse_partition(self):
        assert parse_partition("(3,1,1)") == (3, 1, 1)
        assert parse_partition("[1, 3, 1]") == (3, 1, 1)
        assert parse_partition("4") == (4,)
        pytest.raises(ValueError, parse_partition, "3,a")
        pytest.raises(ValueError, parse_partition, "(3,0)")
        pytest.raises(ValueError, parse_partition, "")

    def test_same_type(self):
        assert same_type("A2+A1", "A1+A2")
        assert same_type("A1+A1", "2A1")
        assert not same_type("B2", "A3")

    def test_resolve_triple(self):
        triple = resolve_triple("B2", "(2,2,1)")
        assert triple.algebra.dim == 10
        assert resolve_triple("B2", "example").label == "(3,1,1)"
        assert resolve_triple("G2", "Ã1").label == "~A1"
        pytest.raises(ValueError, resolve_triple, "B2", "(4,1)")
        pytest.raises(ValueError, resolve_triple, "B2", "(3,1)")
        pytest.raises(ValueError, resolve_triple, "C2", "example")
        pytest.raises(ValueError, resolve_triple, "G2")
        pytest.raises(NotImplementedError, resolve_triple, "A3", "(4)")

    def test_representative_file(self, tmp_path):
        path = os.path.join(tmp_path, "g2_a1.json")
        with open(path, "w") as outfile:
            json.dump({"algebra": "G2", "label": "A1", "e": [{"root": [3, 2], "coeff": "1"}]}, outfile)
        assert resolve_triple("G2", representative_file=path).label == "A1"
        pytest.raises(ValueError, resolve_triple, "F4", representative_file=path)

    def test_choose_route(self):
        assert choose_route(resolve_triple("B2", "(3,1,1)")) == "classical"
        assert choose_route(representative("G2", "G2(a1)")) == "conjugacy"
        assert choose_route(representative("G2", "A1")) == "doublecent"
        assert choose_route(representative("G2", "G2(a1)"), "doublecent") == "doublecent"
        pytest.raises(ValueError, choose_route, resolve_triple("B2", "(3,1,1)"), "conjugacy")
        pytest.raises(ValueError, choose_route, representative("G2", "A1"), "classical")
        pytest.raises(ValueError, choose_route, representative("G2", "A1"), "fastest")


class TestComponentGroupCommand:

    def test_classical_record(self, tmp_path, monkeypatch):
        record = cmd_component_group("B2", "(3,1,1)", out=str(tmp_path))
        assert record["schema"] == SCHEMA
        assert record["status"] == "ok"
        assert record["route"] == "classical"
        assert record["partition"] == [3, 1, 1]
        assert record["group"]["label"] == "C2"
        assert os.path.isfile(nilcent.cli.store_path(str(tmp_path), record))

        # A stored conclusive record is reused.
        def fail(*args, **kwargs):
            raise AssertionError("recomputed a stored record")

        monkeypatch.setattr(nilcent.cli, "compute_record", fail)
        stored = cmd_component_group("B2", "(3,1,1)", out=str(tmp_path))
        assert stored["key"] == record["key"]
        assert stored["group"] == record["group"]
        pytest.raises(AssertionError, cmd_component_group, "B2", "(3,1,1)", out=str(tmp_path), force=True)

    def test_conjugacy_record(self):
        record = cmd_component_group("G2", "G2(a1)")
        assert record["route"] == "conjugacy"
        assert record["wdd"] == [0, 2]
        assert record["group"]["label"] == "S3"
        assert record["group"]["order"] == 6

    def test_main(self, tmp_path, capsys):
        code = main(["component-group", "--algebra", "B2", "--orbit", "(1,1,1,1,1)", "--out", str(tmp_path)])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["group"]["label"] == "1"
        code = main(["component-group", "--algebra", "B2", "--orbit", "(3,1)", "--out", str(tmp_path)])
        assert code == EXIT_FAILURE
        assert "not the Jordan type" in capsys.readouterr().err

    def test_usage_errors(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["component-group", "--algebra", "G2"])
        assert excinfo.value.code == EXIT_FAILURE
        with pytest.raises(SystemExit) as excinfo:
            main(["tables", "--algebra", "B3"])
        assert excinfo.value.code == EXIT_FAILURE


class TestTables:

    def test_orbits(self, capsys):
        frame = cmd_orbits("G2")
        assert list(frame["label"]) == ["0", "A1", "~A1", "G2(a1)", "G2"]
        assert list(frame["A"]) == ["1", "1", "1", "S3", "1"]
        assert main(["orbits", "--algebra", "G2", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["schema"] == SCHEMA
        assert data["rows"][3]["wdd"] == "02"

    def test_published_table(self, capsys):
        frame = published_table("E8")
        assert frame["erratum"].any()
        assert main(["tables", "--algebra", "F4"]) == EXIT_OK
        assert "F4(a3)" in capsys.readouterr().out

    def test_computed_table(self):
        frame, code = cmd_tables("G2", compute=True)
        assert code == EXIT_OK
        assert list(frame["c2'"]) == ["G2"]
        frame, code = cmd_tables("G2", diff_published=True)
        assert code == EXIT_OK
        assert frame.empty

    def test_structure_row(self):
        row = structure_row("F4", "~A1")
        assert (row["c1"], row["d"], row["c2"]) == ("A3", 0, "A1")
        assert row["matched"] is True
        assert structure_row("E7", "A2")["status"] == "no representative"

    def test_levi_structure_rows(self):
        for label in ["A2", "B2"]:
            published = nilcent.examples.table_row("F4", label)
            row = structure_row("F4", label)
            assert row["status"] == "ok"
            assert row["matched"] is True, label
            assert compare_row(published, row) == []

    def test_compare_row(self):
        row = {"label": "X", "c1": "A1+A2", "d": 0, "c2": "A1", "weights": ["(1,00;1)"], "group": "S2"}
        computed = {"status": "ok", "c1": "A2+A1", "d": 0, "c2": "A1", "weights": ["(1,00;1)"], "matched": True,
                    "group": "C2"}
        assert compare_row(row, computed) == []
        computed.update(d=1, group="S3")
        assert [d["column"] for d in compare_row(row, computed)] == ["dim t", "A"]
        assert compare_row(row, {"status": "no representative"})[0]["column"] == "status"


class TestVerify:

    def test_classical_suite(self):
        report = cmd_verify("classical", algebra="B2")
        assert report["passed"]
        assert report["exit_code"] == EXIT_OK
        names = [c["name"] for c in report["checks"]]
        assert "classical/B2-example" in names
        assert "classical/B2/[5]" in names
        assert len(names) == 1 + 4

    def test_group_suite(self):
        report = cmd_verify("exceptional-groups", algebra="G2")
        assert [c["name"] for c in report["checks"]] == ["group/G2/G2(a1)"]
        assert report["passed"]

    def test_structural_suite(self):
        report = cmd_verify("exceptional-structural", algebra="G2")
        assert report["passed"]
        names = [c["name"] for c in report["checks"]]
        assert "structure/G2/G2(a1)" in names
        assert "dimension/G2/A1" in names

    @pytest.mark.skipif(not STRETCH, reason="Set NILCENT_STRETCH to run the E6 structural suite.")
    def test_e6_structural_suite(self):
        report = cmd_verify("exceptional-structural", algebra="E6", stretch=True)
        failed = [c["name"] for c in report["checks"] if c["status"] != "pass"]
        assert failed == []

    def test_invalid_suite(self):
        pytest.raises(ValueError, cmd_verify, "everything")
