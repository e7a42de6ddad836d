import json
import subprocess
import sys
from pathlib import Path

import pytest

from seminormal.cli import RingFileError, main, parse_ring_text, ring_from_json, ring_to_json
from seminormal.ideals import IdealHandle
from seminormal.polyring import GF, QQ

RINGS = Path(__file__).resolve().parent.parent / "rings"


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_cusp_file():
    rf = parse_ring_text("# cusp\nfield QQ\nvars x, y\nideal y^2 - x^3\n")
    R = rf.ring()
    assert R.field == QQ and R.vars == ("x", "y")
    assert R.format_relations() == ["x^3 - y^2"]


def test_zz_mod_p_alias_and_multiple_ideal_lines():
    rf = parse_ring_text("field ZZ/11\nvars a, b\nideal a^2; b^3\nideal a*b\n")
    assert rf.field == GF(11)
    assert len(rf.polys) == 3
    assert parse_ring_text("field GF(7)\nvars a\n").field == GF(7)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("field QQ\nvars x, y\nideal y^2 - z\n", 3, 13),
        ("field QQ\nvars x, y\nideal y^^2\n", 3, 9),
        ("field QQ\nvars x, 2y\n", 2, 9),
        ("field QQ\nvar x\n", 2, 1),
        ("field ZZ/12\nvars x\n", 1, 7),
        ("field RR\nvars x\n", 1, 7),
        ("vars x\n", 1, 1),
        ("field QQ\n  ideal x\n", 1, 1),
    ],
)
def test_parse_errors_carry_positions(text, line, column):
    with pytest.raises(RingFileError) as info:
        parse_ring_text(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_json_round_trip():
    rf = parse_ring_text("field ZZ/5\nvars x, y\nideal x^2 - 2*y; x*y\n")
    R = rf.ring()
    again = ring_from_json(json.loads(json.dumps(ring_to_json(R))))
    assert again.field == R.field and again.vars == R.vars
    assert IdealHandle(again, list(again.gb.elements)) == IdealHandle(again, list(R.gb.elements))


def test_seminormalize_text_output(capsys):
    code, out, _ = _run(capsys, "seminormalize", RINGS / "cusp.ring")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("R^SN = QQ[Yy_0, Yy_1, Yy_2]/(")
    assert lines[1] == "R -> R^SN: x -> Yy_1, y -> Yy_2"


def test_seminormalize_json_with_custom_symbol(capsys):
    code, out, _ = _run(capsys, "seminormalize", RINGS / "cusp.ring", "--variable", "Zz", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ring"]["vars"] == ["Zz_0", "Zz_1", "Zz_2"]
    assert data["booleans"]["seminormal"] is False
    S = ring_from_json(data["ring"])
    assert len(S.gb.elements) == 3
    assert [m["from"] for m in data["maps"]] == ["R", "R^SN"]


@pytest.mark.parametrize(
    "name, expected",
    [("cusp", "false"), ("node", "true"), ("xy", "true"), ("four_lines", "false"), ("char2", "true"), ("gt_d", "true"), ("gt_d2", "false")],
)
def test_is_seminormal_corpus(capsys, name, expected):
    code, out, _ = _run(capsys, "is-seminormal", RINGS / f"{name}.ring")
    assert code == 0 and out.strip() == expected


def test_other_commands(capsys):
    assert _run(capsys, "dim", RINGS / "four_lines.ring")[1].strip() == "1"
    assert _run(capsys, "conductor", RINGS / "cusp.ring")[1].strip() == "conductor: (x, y)"
    code, out, _ = _run(capsys, "min-primes", RINGS / "four_lines.ring", "--json")
    assert len(json.loads(out)["ideals"]["minimal_primes"]) == 4
    assert _run(capsys, "radical", RINGS / "cusp_nonreduced.ring")[1].strip() == "radical: (x)"
    assert _run(capsys, "check-reduced", RINGS / "cusp_nonreduced.ring")[1].strip() == "false"
    code, out, _ = _run(capsys, "normalize", RINGS / "node.ring")
    assert code == 0 and out.startswith("R^N = QQ[t0]")


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("field QQ\nvars x, y\nideal y^2 - z\n")
    code, _, err = _run(capsys, "dim", bad)
    assert code == 2 and ":3:13:" in err
    assert _run(capsys, "dim", tmp_path / "missing.ring")[0] == 2
    assert _run(capsys, "seminormalize", RINGS / "cusp_nonreduced.ring")[0] == 3
    assert _run(capsys, "seminormalize", RINGS / "cusp.ring", "--variable", "x")[0] == 2
    assert _run(capsys, "seminormalize", RINGS / "four_lines.ring", "--max-degree", "2")[0] == 4
    assert _run(capsys, "seminormalize", RINGS / "four_lines.ring", "--factor-degree", "1")[0] == 4


def test_assume_reduced_skips_check(capsys):
    # the non-reduced ring gets through the guard; the algorithm then fails loudly
    code, _, _ = _run(capsys, "seminormalize", RINGS / "cusp_nonreduced.ring", "--assume-reduced")
    assert code != 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "seminormal", "is-seminormal", str(RINGS / "cusp.ring")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "false"
