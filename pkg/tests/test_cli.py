import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings

from seifert_ph import normalize, render_sfs, report_schema
from seifert_ph.cli import SFS_COMMANDS, run
from strategies import invariants

FIVE = "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"
SCHEMA = report_schema()


def test_covers_t1_text():
    status, out, _ = run(["covers-t1", FIVE])
    assert status == 0
    assert out.startswith("DoesNotCover: ")
    assert "congruence d·βᵢ ≡ 1 mod αᵢ fails" in out


def test_euler_text():
    assert run(["euler", "SFS(g=2; b=0;)"]) == (0, "0\n", "")
    assert run(["euler", FIVE])[1] == "1/5\n"
    assert run(["euler", "SFS(g=0; b=0; (5,1),(5,2),(5,1))"])[1] == "-4/5\n"


def test_enumerate_contains_family():
    status, out, _ = run(["enumerate", "--max-alpha", "9"])
    assert status == 0
    lines = out.splitlines()
    for a in (5, 7, 9):
        assert f"SFS(g=0; b=-1; ({a},1),({a},1),({a},2))" in lines


def test_json_report():
    status, out, _ = run(["--format", "json", "anosov", "SFS(g=2; b=-2;)"])
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report["verdict"] == {"kind": "yes", "degree": 1, "orientation": "preserving"}
    assert report["euler"] == "2" and report["geometry"] == "hyperbolic"


def test_subcommand_level_format_flag():
    status, out, _ = run(["ph", "SFS(g=1; b=0;)", "--format", "json"])
    assert status == 0
    assert json.loads(out)["verdict"]["kind"] == "out_of_scope"


@pytest.mark.parametrize(
    "argv, status",
    [
        (["euler", "SFS(g=0; b=-1; (4,2))"], 2),
        (["euler", "SFS(g=0 b=-1;)"], 2),
        (["turnover-ph", "SFS(g=2; b=0;)"], 3),
        (["covers-t1", "SFS(g=1; b=0;)"], 3),
        (["double-cover", "SFS(g=2; b=0;)"], 3),
        (["pi1", FIVE], 3),
        (["horizontal", "SFS(g=2; b=0;)"], 3),
        (["enumerate", "--max-alpha", "1"], 3),
        (["bogus"], 2),
    ],
)
def test_exit_codes(argv, status):
    assert run(argv)[0] == status


def test_pi1_and_double_cover():
    assert run(["pi1", "SFS(g=2; b=2;)"])[1] == (
        "a1 b1 a2 b2 c | a1 b1 A1 B1 a2 b2 A2 B2 c c, a1 c A1 C, b1 c B1 C, a2 c A2 C, b2 c B2 C\n"
    )
    assert run(["double-cover", "SFS(g=n2; b=1;)"])[1] == "SFS(g=1; b=2;)\n"


def test_same_command():
    assert run(["same", "SFS(g=2; b=-2;)", "SFS(g=2; b=2;)"])[1] == "Yes\n"
    assert run(["same", "--oriented", "SFS(g=2; b=-2;)", "SFS(g=2; b=2;)"])[1] == "No\n"


def test_horizontal_and_milnor_wood():
    assert run(["horizontal", FIVE])[1].startswith("Yes")
    assert run(["horizontal", "SFS(g=0; b=-1; (2,1),(3,2),(7,6))"])[1].startswith("Inconclusive")
    assert run(["milnor-wood", "SFS(g=2; b=-5;)"])[1].startswith("Fails")


@settings(max_examples=40, deadline=None)
@given(invariants())
def test_json_schema_and_determinism_on_fuzzed_inputs(m):
    text = render_sfs(normalize(m))
    for command in SFS_COMMANDS:
        status, out, _ = run(["--format", "json", command, text])
        if status != 0:
            assert status == 3 and out == ""
            continue
        jsonschema.validate(json.loads(out), SCHEMA)
        assert run(["--format", "json", command, text])[1] == out


def test_enumerate_json_byte_identical():
    a = run(["--format", "json", "enumerate", "--max-alpha", "7"])[1]
    assert a == run(["--format", "json", "enumerate", "--max-alpha", "7"])[1]
    jsonschema.validate(json.loads(a), SCHEMA)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "seifert_ph", "euler", "SFS(g=2; b=-2;)"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"
