"""End-to-end tests of the command line front end."""

import json

import pytest

pytestmark = pytest.mark.integration


class TestDistanceVerbs:
    """Tests for dist, codist, opposite and gallery."""

    def test_dist_between_equal_chambers(self, run_cli, identity_file):
        code, out = run_cli("dist", identity_file, identity_file)
        assert code == 0
        assert json.loads(out) == {"schema": 1, "distance": {"finite": [1, 2]}, "length": 0}

    def test_dist_across_components(self, run_cli, identity_file, minus_twist_file):
        code, out = run_cli("dist", identity_file, minus_twist_file, "--sign", "+")
        assert code == 0
        assert json.loads(out)["distance"] == "infinite"

    def test_dist_inside_negative_component(self, run_cli, identity_file, minus_twist_file):
        code, out = run_cli("dist", identity_file, minus_twist_file, "--sign", "-")
        assert code == 0
        assert "finite" in json.loads(out)["distance"]

    def test_codist_of_standard_pair(self, run_cli, identity_file):
        code, out = run_cli("codist", identity_file, identity_file)
        assert code == 0
        assert json.loads(out)["codistance"] == {"label": [1, 2], "length": 0}

    def test_standard_pair_is_opposite(self, run_cli, identity_file, translation_file):
        _, out = run_cli("opposite", identity_file, identity_file)
        assert json.loads(out)["opposite"] is True
        _, out = run_cli("opposite", translation_file, identity_file)
        assert json.loads(out)["opposite"] is False

    def test_gallery(self, run_cli, identity_file, translation_file):
        code, out = run_cli("gallery", identity_file, translation_file)
        payload = json.loads(out)
        assert code == 0
        assert payload["types"] == [0, 1]
        assert len(payload["gallery"]) == 3


class TestDecompose:
    """Tests for the decompose verb."""

    def test_translation_label(self, run_cli, translation_file):
        code, out = run_cli("decompose", "--matrix", translation_file, "--mode", "+")
        result = json.loads(out)["decomposition"]
        assert code == 0
        assert result["label"] == {"n": 2, "window": [3, 0]}
        assert result["length"] == 2
        assert "left_witness" in result

    def test_without_witnesses(self, run_cli, translation_file):
        _, out = run_cli("decompose", "--matrix", translation_file, "--no-witnesses")
        assert "left_witness" not in json.loads(out)["decomposition"]

    def test_output_is_deterministic(self, run_cli, far_twist_file):
        _, first = run_cli("decompose", "--matrix", far_twist_file, "--mode", "birkhoff")
        _, second = run_cli("decompose", "--matrix", far_twist_file, "--mode", "birkhoff")
        assert first == second

    def test_determinant_error(self, run_cli, write_json):
        path = write_json("bad.json", {"n": 2, "field": "Q", "entries": [[2, 0], [0, 1]]})
        code, out = run_cli("decompose", "--matrix", path)
        assert code == 1
        assert json.loads(out)["error"] == "DeterminantNotOne"

    def test_missing_file(self, run_cli, tmp_path):
        code, out = run_cli("decompose", "--matrix", tmp_path / "absent.json")
        assert code == 1
        assert json.loads(out)["error"] == "ParseError"

    def test_unknown_verb(self, run_cli):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("bogus")
        assert excinfo.value.code == 2


class TestBallAndCity:
    """Tests for ball, component, citydist and flip."""

    def test_ball_counts(self, run_cli):
        code, out = run_cli("ball", "--radius", 2, "--field", "F2")
        ball = json.loads(out)["ball"]
        assert code == 0
        assert ball["total"] == 13
        assert [c["chambers"] for c in ball["counts"]] == [1, 2, 2, 4, 4]

    def test_ball_dot(self, run_cli):
        code, out = run_cli("ball", "--radius", 1, "--field", "F2", "--dot")
        assert code == 0
        assert out.startswith("graph ball {")
        assert out.count(" -- ") == 4

    def test_component_registry(self, run_cli, tmp_path, minus_twist_file):
        registry = tmp_path / "registry.json"
        _, out = run_cli(
            "component", "--registry", registry, "--matrix", minus_twist_file, "--update"
        )
        first = json.loads(out)
        assert first["new"] is True
        assert first["component"]["index"] == 1
        assert registry.exists()
        _, out = run_cli("component", "--registry", registry, "--matrix", minus_twist_file)
        assert json.loads(out)["new"] is False

    def test_citydist(self, run_cli, identity_file, far_twist_file):
        code, out = run_cli("citydist", "--a", identity_file, "--b", far_twist_file, "--sign", "-")
        value = json.loads(out)["citydist"]
        assert code == 0
        assert value["nu"] == 3
        assert value["d"] == "e^-3"

    def test_citydist_absorbed_pole(self, run_cli, identity_file, far_twist_file):
        _, out = run_cli("citydist", "--a", identity_file, "--b", far_twist_file, "--sign", "+")
        assert json.loads(out)["citydist"]["nu"] == "inf"

    def test_flip_changes_sign(self, run_cli, identity_file):
        _, out = run_cli("flip", "--matrix", identity_file)
        assert json.loads(out)["chamber"]["sign"] == "-"


class TestInfinityAndCheck:
    """Tests for the infinity and check verbs."""

    def test_relpos(self, run_cli, write_json):
        first = write_json("flag1.json", {"n": 2, "field": "Q", "rows": [[1, 0], [0, 1]]})
        second = write_json("flag2.json", {"n": 2, "field": "Q", "rows": [[0, 1], [1, 0]]})
        _, out = run_cli("infinity", "relpos", first, second)
        payload = json.loads(out)
        assert payload["relpos"] == {"perm": [2, 1], "length": 1}
        assert payload["opposite"] is True

    def test_sector(self, run_cli, translation_file):
        code, out = run_cli("infinity", "sector", "--matrix", translation_file, "--direction", "2,1")
        assert code == 0
        assert json.loads(out)["flag"]["n"] == 2

    def test_sector_direction_must_be_permutation(self, run_cli, identity_file):
        with pytest.raises(SystemExit):
            run_cli("infinity", "sector", "--matrix", identity_file, "--direction", "1,1")

    def test_check_counting(self, run_cli):
        code, out = run_cli("check", "--suite", "counting", "--field", "F2", "--samples", 1)
        assert code == 0
        assert json.loads(out)["report"]["passed"] is True

    def test_check_reports_violations(self, run_cli):
        code, out = run_cli("check", "--suite", "counting", "--field", "Q")
        assert code == 1
        assert json.loads(out)["report"]["violations"][0]["property"] == "finite_field"

    def test_invalid_config_is_usage_error(self, run_cli):
        code, out = run_cli("check", "--suite", "wd_axioms", "--field", "R")
        assert code == 2
        assert json.loads(out)["error"] == "InputError"


@pytest.mark.slow
class TestAcceptance:
    """Quick pass over every acceptance run."""

    def test_quick_acceptance(self):
        import importlib.util
        from pathlib import Path

        script = Path(__file__).parents[2] / "scripts" / "run_acceptance.py"
        spec = importlib.util.spec_from_file_location("run_acceptance", script)
        module = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(module)
        reports = module.run_all(quick=True, seed=0)
        assert all(report.passed for report in reports), [
            r.to_dict() for r in reports if not r.passed
        ]
