"""Tests for the command-line front end"""

import json

import pytest
from click.testing import CliRunner

from backend.app.cli import main
from backend.app.core.schemas import PlanDocument
from backend.app.services.gridmap import SAMPLE_MAP_PATH, load_map_file, parse_map
from backend.app.services.mission_planner import validate_plan_document


@pytest.fixture
def runner():
    return CliRunner()


def _error_line(result) -> str:
    lines = result.stderr.strip().splitlines()
    assert lines, "expected an error line on stderr"
    return lines[-1]


class TestSuccessfulRuns:
    """Plans that produce a document"""

    def test_line_map_json(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("B.A\n"))])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["schema_version"] == 1
        assert document["status"] == "ok"
        assert document["map"] == {"width": 3, "height": 1}
        assert document["start"] == [0, 2]
        assert document["goal"] == [0, 0]
        assert document["connectivity"] == 4
        assert document["mode"] == "single"
        assert document["path"] == [[0, 2], [0, 1], [0, 0]]
        assert document["length"] == 2
        assert document["terrain_sequence"] == ["Flat", "Flat", "Flat"]
        assert document["terrain_set"] == ["Flat"]
        assert document["robot"] == "HalfHumanoid"
        assert document["segments"] is None

    def test_ascii_overlay(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("B.A")), "--format", "ascii"])
        assert result.exit_code == 0
        assert result.stdout == "B+A\n"

    def test_segmented(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("A.WWB")), "--mode", "segmented"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["robot"] is None
        assert [(s["terrain"], s["robot"]) for s in document["segments"]] == [
            ("Flat", "HalfHumanoid"),
            ("Wall", "RoboticLizard"),
            ("Flat", "HalfHumanoid"),
        ]
        assert document["segments"][1]["cells"] == [[0, 1], [0, 2], [0, 3]]

    def test_coordinate_overrides(self, runner, map_file):
        path = map_file("B.A")
        result = runner.invoke(main, ["--map", str(path), "--start", "0,1", "--goal", "0,0"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["length"] == 1

    def test_overrides_without_markers(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("..~\n.#.")), "--start", "1,2", "--goal", "0,0"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["robot"] == "Quadruped"
        assert document["length"] == 3

    def test_ascii_overlay_with_overrides(self, runner, map_file):
        path = str(map_file("B.~A"))
        result = runner.invoke(main, ["--map", path, "--start", "0,2", "--format", "ascii"])
        assert result.exit_code == 0
        assert result.stdout == "B+A.\n"

    def test_eight_connectivity(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("B..\n...\n..A")), "--connectivity", "8"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["length"] == 2

    def test_emit_field(self, runner, map_file, tmp_path):
        image = tmp_path / "field.ppm"
        result = runner.invoke(main, ["--map", str(map_file("B.A")), "--emit-field", str(image)])
        assert result.exit_code == 0
        assert image.read_bytes().startswith(b"P6\n3 1\n255\n")

    def test_output_is_deterministic(self, runner, map_file):
        path = str(map_file("B..~\n.#H.\n*W.A"))
        first = runner.invoke(main, ["--map", path, "--mode", "segmented"])
        second = runner.invoke(main, ["--map", path, "--mode", "segmented"])
        assert first.exit_code == second.exit_code == 0
        assert first.stdout_bytes == second.stdout_bytes

    def test_document_revalidates(self, runner, map_file):
        text = "B..~\n.#H.\n*W.A"
        for mode in ("single", "segmented"):
            result = runner.invoke(main, ["--map", str(map_file(text)), "--mode", mode])
            document = PlanDocument.model_validate_json(result.stdout)
            validate_plan_document(document, parse_map(text))

    def test_sample_map_selects_lizard(self, runner):
        result = runner.invoke(main, ["--map", str(SAMPLE_MAP_PATH)])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert "Wall" in document["terrain_sequence"]
        assert document["terrain_set"] == ["Wall", "Stairs", "Clutter", "Slope", "Flat"]
        assert document["robot"] == "RoboticLizard"
        assert document["length"] == 27
        validate_plan_document(PlanDocument.model_validate(document), load_map_file(SAMPLE_MAP_PATH))


class TestFailures:
    """Exit codes and error lines"""

    def test_no_path(self, runner, map_file, tmp_path):
        image = tmp_path / "field.ppm"
        result = runner.invoke(main, ["--map", str(map_file("B#A")), "--emit-field", str(image)])
        assert result.exit_code == 4
        document = json.loads(result.stdout)
        assert document["status"] == "no_path"
        assert document["robot"] is None
        assert document["path"] == []
        assert _error_line(result).startswith("error: NO_PATH:")
        assert image.exists()

    def test_no_path_ascii_prints_map(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("B#A")), "--format", "ascii"])
        assert result.exit_code == 4
        assert result.stdout == "B#A\n"

    def test_parse_error(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("B.x"))])
        assert result.exit_code == 3
        assert result.stdout == ""
        assert _error_line(result).startswith("error: UNKNOWN_CHAR:")

    def test_ragged_rows(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("BA\n#"))])
        assert result.exit_code == 3
        assert _error_line(result).startswith("error: RAGGED_ROWS:")

    @pytest.mark.parametrize(
        "text,code",
        [("\n\n", "EMPTY_MAP"), ("\n\n\n", "EMPTY_MAP"), ("\n\nB.A", "RAGGED_ROWS"), ("B.A\n\n", "RAGGED_ROWS")],
    )
    def test_blank_rows(self, runner, map_file, text, code):
        result = runner.invoke(main, ["--map", str(map_file(text)), "--log-level", "WARNING"])
        assert result.exit_code == 3
        lines = result.stderr.splitlines()
        assert len(lines) == 1
        assert lines[0].startswith(f"error: {code}:")

    def test_invalid_utf8(self, runner, tmp_path):
        path = tmp_path / "latin1.map"
        path.write_bytes(b"B.\xffA")
        result = runner.invoke(main, ["--map", str(path)])
        assert result.exit_code == 3
        assert _error_line(result).startswith("error: INVALID_ENCODING:")

    def test_unexpected_failure_is_one_line(self, runner, map_file, monkeypatch):
        def explode(path):
            raise RuntimeError("disk on fire\nsecond line")

        monkeypatch.setattr("backend.app.cli.load_map_file", explode)
        result = runner.invoke(main, ["--map", str(map_file("B.A")), "--log-level", "WARNING"])
        assert result.exit_code == 1
        assert result.stderr == "error: INTERNAL_ERROR: disk on fire\n"

    @pytest.mark.parametrize(
        "extra,code",
        [
            (["--connectivity", "6"], "INVALID_CONNECTIVITY"),
            (["--connectivity", "four"], "INVALID_CONNECTIVITY"),
            (["--mode", "pairs"], "INVALID_MODE"),
            (["--format", "yaml"], "INVALID_FORMAT"),
            (["--start", "1"], "INVALID_COORD"),
            (["--goal", "a,b"], "INVALID_COORD"),
            (["--start", "0,1"], "START_ON_OBSTACLE"),
            (["--goal", "5,5"], "GOAL_OUT_OF_BOUNDS"),
        ],
    )
    def test_bad_arguments(self, runner, map_file, extra, code):
        result = runner.invoke(main, ["--map", str(map_file("B#A"))] + extra)
        assert result.exit_code == 2
        assert _error_line(result).startswith(f"error: {code}:")

    def test_missing_map_flag(self, runner):
        result = runner.invoke(main, [])
        assert result.exit_code == 2
        assert _error_line(result).startswith("error: BAD_ARGUMENTS:")

    def test_unreadable_map(self, runner, tmp_path):
        result = runner.invoke(main, ["--map", str(tmp_path / "missing.map")])
        assert result.exit_code == 2

    def test_missing_markers(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("...\n..."))])
        assert result.exit_code == 2
        assert "no start" in _error_line(result)

    def test_unknown_log_level(self, runner, map_file):
        result = runner.invoke(main, ["--map", str(map_file("B.A")), "--log-level", "CHATTY"])
        assert result.exit_code == 2
