"""Command line behavior: outputs, exit codes, JSON stability."""

import json

from bisoft.cli import main
from bisoft.fixtures import load_fixture, loads_fixture, serialize_fixture


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_all_shipped_fixtures_validate(self, capsys):
        code, out, _ = run(capsys, "validate", "bisoft1")
        assert code == 0
        assert "T1: valid" in out and "T2: valid" in out

    def test_broken_family_exits_2(self, capsys, tmp_path):
        doc = serialize_fixture(load_fixture("bisoft1"))
        doc["topologies"]["T2"] = ["Phi", "X", "G1", "G3", "G4"]
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "validate", str(path))
        assert code == 2
        assert "INVALID" in out
        assert "union" in out

    def test_parse_error_exits_1(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{")
        code, _, err = run(capsys, "validate", str(path))
        assert code == 1
        assert "error" in err

    def test_missing_file_exits_1(self, capsys):
        code, _, err = run(capsys, "validate", "nope.json")
        assert code == 1


class TestAxioms:
    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "axioms", "t0a", "--space", "S")
        assert code == 0
        assert "pairwise soft T0  True" in out
        assert "soft T0          False    False" in out

    def test_json_report_is_stable(self, capsys):
        code, out1, _ = run(capsys, "axioms", "t0a", "--space", "S", "--json")
        assert code == 0
        code, out2, _ = run(capsys, "axioms", "t0a", "--space", "S", "--json")
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["pairwise"] == {"t0": True, "t1": False, "t2": False}
        assert payload["soft"]["T1"]["t0"] is False
        assert payload["soft"]["T2"]["t0"] is False
        assert payload["slices"]["e1"]["t0"] is False

    def test_strict_orientation_flag(self, capsys):
        code, out, _ = run(
            capsys, "axioms", "t0a", "--space", "S", "--strict-orientation", "--json"
        )
        assert json.loads(out)["pairwise"]["t0_strict"] is False

    def test_unknown_space_exits_1(self, capsys):
        code, _, err = run(capsys, "axioms", "t0a", "--space", "Q")
        assert code == 1
        assert "unknown space" in err


class TestSup:
    def test_nine_members_generated_last(self, capsys):
        code, out, _ = run(capsys, "sup", "bisoft1", "--space", "S")
        assert code == 0
        lines = [l.strip() for l in out.strip().splitlines()]
        assert "9 members" in lines[0]
        assert lines[-1] == "e1={h1,h2}, e2={h1,h2}"

    def test_twelve_members_json(self, capsys):
        code, out, _ = run(capsys, "sup", "t2a", "--space", "S", "--json")
        payload = json.loads(out)
        assert payload["size"] == 12
        assert {"e1": ["h3"], "e2": ["h1", "h3"]} in payload["members"]


class TestSlice:
    def test_green_slice(self, capsys):
        code, out, _ = run(
            capsys, "slice", "rough", "--space", "S", "--param", "Green", "--json"
        )
        payload = json.loads(out)
        assert payload["pairwise"] == {"t0": True, "t1": False, "t2": False}
        assert ["x1", "x5"] in payload["T1"]

    def test_unknown_parameter_exits_1(self, capsys):
        code, _, err = run(capsys, "slice", "rough", "--space", "S", "--param", "Cyan")
        assert code == 1


class TestSubspace:
    def test_emits_a_reparseable_document(self, capsys):
        code, out, _ = run(
            capsys, "subspace", "t0a", "--space", "S", "--keep", "h1,h2"
        )
        assert code == 0
        doc = loads_fixture(out)
        assert doc.context.universe.elements == ("h1", "h2")
        t1 = doc.topology("T1")
        t2 = doc.topology("T2")
        assert len(t1) >= 2 and len(t2) >= 2
        s = doc.space("S")
        from bisoft.axioms import pairwise_soft_t0

        assert pairwise_soft_t0(s)


class TestRough:
    def test_reports_regions(self, capsys):
        code, out, _ = run(capsys, "rough", "rough", "--space", "S", "--target", "F", "--json")
        payload = json.loads(out)
        assert payload["lower"] == {
            "Red": ["x2", "x4"],
            "Green": [],
            "Blue": ["x1", "x3"],
        }
        assert payload["upper"]["Red"] == ["x1", "x2", "x3", "x4", "x5"]
        assert payload["neg"]["Blue"] == ["x2"]
        assert payload["bnd"]["Red"] == ["x1", "x3", "x5"]
        assert payload["definable"] is False

    def test_fixture_default_target(self, capsys):
        code, out, _ = run(capsys, "rough", "rough", "--space", "S")
        assert code == 0
        assert "definable: False" in out

    def test_no_target_anywhere_exits_1(self, capsys):
        code, _, err = run(capsys, "rough", "bisoft1", "--space", "S")
        assert code == 1


class TestSearch:
    def test_counterexample_exit_code(self, capsys):
        code, out, _ = run(
            capsys,
            "search",
            "--claim",
            "lower-idempotence-equality",
            "--max-x",
            "3",
            "--params",
            "1",
        )
        assert code == 3
        assert "counterexample found" in out

    def test_not_found_exit_code(self, capsys):
        code, out, _ = run(
            capsys,
            "search",
            "--claim",
            "prop5-t2-t1",
            "--max-x",
            "2",
            "--params",
            "1",
        )
        assert code == 0
        assert "no counterexample" in out

    def test_matrix_run_ok(self, capsys):
        code, out, _ = run(capsys, "search", "--max-x", "2", "--params", "2")
        assert code == 0
        assert "thm1-equivalence" in out

    def test_matrix_json_stable(self, capsys):
        code, out1, _ = run(
            capsys, "search", "--max-x", "2", "--params", "1", "--json"
        )
        code, out2, _ = run(
            capsys, "search", "--max-x", "2", "--params", "1", "--json"
        )
        assert out1 == out2
        assert json.loads(out1)["ok"] is True

    def test_unknown_claim_lists_known_ones(self, capsys):
        code, _, err = run(
            capsys, "search", "--claim", "bogus", "--max-x", "2", "--params", "1"
        )
        assert code == 1
        assert "prop4-forward" in err

    def test_exhaustive_bound_usage_error(self, capsys):
        code, _, err = run(capsys, "search", "--max-x", "9", "--params", "1")
        assert code == 1

    def test_alias_accepted(self, capsys):
        code, out, _ = run(
            capsys,
            "search",
            "--claim",
            "rough-item-11-equality",
            "--max-x",
            "3",
            "--params",
            "1",
            "--json",
        )
        assert code == 3
        assert json.loads(out)["found"] is True


def test_usage_error_exits_1(capsys):
    code, _, err = run(capsys, "axioms", "t0a")  # missing --space
    assert code == 1
