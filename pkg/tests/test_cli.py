import io
import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from cl2 import Scalar
from cl2.cli import run
from cl2.literal import parse

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("CL2_REGEN_GOLDEN") == "1"

# name -> (argv, expected exit code)
CASES = {
    "mpinv_zero_divisor": (["mpinv", "1+e2"], 0),
    "mpinv_invertible": (["mpinv", "1-e1+2e3"], 0),
    "mpinv_zero": (["mpinv", "0"], 0),
    "inv_one": (["inv", "1"], 0),
    "inv_example": (["inv", "1-e1+2e3"], 0),
    "solve_axb_example": (["solve-axb", "1+e2", "e1+e3", "1+e2"], 0),
    "solve_axb_unsolvable": (["solve-axb", "1+e2", "e1+e3", "e1"], 0),
    "solve_ax_example": (["solve-ax", "1-e2", "1+e1-e2+e3"], 0),
    "solve_xb_example": (["solve-xb", "e2+e3", "1-e1"], 0),
    "solve_ax_null": (["solve-ax", "1+e1+e2+e3", "0"], 0),
    "solve_xb_null": (["solve-xb", "2+e1+2e2+e3", "0"], 0),
    "sylvester_rank2": (["sylvester", "2+4e1+5e2", "2+3e1+6e2+2e3"], 0),
    "sylvester_rank3": (["sylvester", "1+3e1+4e2-5e3", "2+e1+e2+e3"], 0),
    "consylvester_rank1": (["consylvester", "1+e1+e2+e3", "-1+e1+e2+e3"], 0),
    "consylvester_complex": (["consylvester", "2+3e1+4e2+5e3", "5+3e1+4e2+2e3"], 0),
    "consylvester_zero_divisor": (["consylvester", "1+e1+e3", "e3"], 0),
    "consylvester_mixed": (["--float", "consylvester", "1-e1+2e2-2e3", "6+7e1+3e2+2e3"], 0),
    "similar_true": (["similar", "2+4e1+5e2", "2+3e1+6e2+2e3"], 0),
    "similar_false": (["similar", "1+3e1+4e2-5e3", "2+e1+e2+e3"], 1),
    "similar_sign_flip": (["similar", "1-e3", "1+e3"], 0),
    "pseudosimilar_conj": (["pseudosimilar", "1+e1+e2+e3", "-1+e1+e2+e3"], 0),
    "pseudosimilar_true": (["pseudosimilar", "2+3e1+4e2+5e3", "5+3e1+4e2+2e3"], 0),
    "pseudosimilar_false": (["pseudosimilar", "1+e1+e3", "e3"], 1),
    "canonical_neg": (["canonical", "1+2e1+e2+3e3"], 0),
    "canonical_pos": (["canonical", "1+5e1+3e3"], 0),
    "canonical_pos2": (["canonical", "1+2e1+e2-e3"], 0),
    "canonical_zero": (["canonical", "1+3e1+4e2+5e3"], 0),
    "canonical_irrational": (["canonical", "1+e1+e2"], 0),
    "matrep_zero_divisor": (["matrep", "1+e2"], 0),
    "json_mpinv": (["--json", "mpinv", "1+e2"], 0),
    "json_canonical": (["--json", "canonical", "1+e1+e2"], 0),
    "json_similar": (["similar", "--json", "2+4e1+5e2", "2+3e1+6e2+2e3"], 0),
    "float_mpinv": (["--float", "mpinv", "2+e1+2e2+e3"], 0),
}


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    argv, expected_code = CASES[name]
    code, out, _ = _run(argv)
    assert code == expected_code
    path = GOLDEN / f"{name}.txt"
    if REGEN:
        path.write_text(out)
    assert out == path.read_text()
    # byte-stable across repeated invocations
    assert _run(argv)[1] == out


@pytest.mark.parametrize("argv,code,name", [
    (["inv", "1+e2"], 1, "ZeroDivisor"),
    (["similar", "1", "2"], 1, "NotSimilar"),
    (["pseudosimilar", "0", "1"], 1, "NotPseudosimilar"),
])
def test_domain_errors(argv, code, name):
    rc, _, err = _run(argv)
    assert rc == code
    assert f"cl2: {name}:" in err


@pytest.mark.parametrize("literal,pos", [
    ("1+x", 2), ("e4", 0), ("1/0e1", 2), ("", 0), ("2e1e2", 3), ("1+", 2),
])
def test_parse_error_exit_code(literal, pos):
    rc, out, err = _run(["mpinv", literal])
    assert rc == 2 and out == ""
    assert f"at position {pos}" in err


def test_usage_errors():
    assert _run([])[0] == 2
    assert _run(["nosuch", "1"])[0] == 2
    assert _run(["mpinv"])[0] == 2


def test_negative_literals_are_not_options():
    rc, out, _ = _run(["inv", "-1/2e1+2"])
    assert rc == 0
    assert "inverse: 8/15+2/15e1" in out


def test_json_round_trip_exact():
    rc, out, _ = _run(["--json", "solve-axb", "1+e2", "e1+e3", "1+e2"])
    data = json.loads(out)
    assert list(data) == ["a", "b", "d", "solvable", "particular", "dimension",
                          "homogeneous_basis"]
    assert [Fraction(c) for c in data["particular"]] == [0, Fraction(1, 4), 0, Fraction(-1, 4)]


def test_json_witness_triples():
    rc, out, _ = _run(["--json", "similar", "2+4e1+5e2", "2+3e1+6e2+2e3"])
    data = json.loads(out)
    u = [Scalar(Fraction(t["p"]), Fraction(t["q"]), Fraction(t["radicand"]))
         for t in data["witness"]]
    from cl2 import Cl2Element, element, mul
    u = Cl2Element(*u)
    assert mul(element(2, 4, 5), u) == mul(u, element(2, 3, 6, 2))


def test_text_output_parses_back():
    rc, out, _ = _run(["mpinv", "2+e1+2e2+e3"])
    line = next(l for l in out.splitlines() if l.startswith("mp:"))
    x = parse(line.split(":", 1)[1])
    assert x == parse("1/10+1/20e1+1/10e2-1/20e3")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cl2.cli", "inv", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "a: 1\nH: 1\ninverse: 1\n"
