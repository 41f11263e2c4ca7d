"""Integration test fixtures."""

import json

import pytest

SIMPLE_POLE_AT_THIRD = {"num": [[0, "1"]], "den": [["1/3", 1]]}
SIMPLE_POLE_AT_25 = {"num": [[0, "1"]], "den": [["25", 1]]}


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document under tmp_path and return its path."""

    def _write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path

    return _write


@pytest.fixture
def identity_file(write_json):
    return write_json("identity.json", {"n": 2, "field": "Q", "entries": [[1, 0], [0, 1]]})


@pytest.fixture
def translation_file(write_json):
    """diag(t, 1/t)."""
    return write_json(
        "translation.json", {"n": 2, "field": "Q", "entries": [[[[1, "1"]], 0], [0, [[-1, "1"]]]]}
    )


@pytest.fixture
def minus_twist_file(write_json):
    """Lower unipotent with entry 1/(t - 1/3); only regular near infinity."""
    return write_json(
        "minus_twist.json", {"n": 2, "field": "Q", "entries": [[1, 0], [SIMPLE_POLE_AT_THIRD, 1]]}
    )


@pytest.fixture
def far_twist_file(write_json):
    """Upper unipotent with entry 1/(t - 25)."""
    return write_json(
        "far_twist.json", {"n": 2, "field": "Q", "entries": [[1, SIMPLE_POLE_AT_25], [0, 1]]}
    )


@pytest.fixture
def run_cli(capsys):
    """Run the command line front end, returning (exit code, stdout)."""
    from twincity.cli.main import main

    def _run(*argv):
        code = main([str(a) for a in argv])
        return code, capsys.readouterr().out

    return _run
