import json

import pytest

from corecalc import cli
from corecalc import core as K
from corecalc.checks import Verdict
from corecalc.groebner import Ideal, ideal_strings, power_of_maximal
from corecalc.poly import QQ, PrimeField
from corecalc.suites import SUITES

FOUR_PTS = """\
field fp default
ambient 2
points   # the running four-point example
0 -1 1
0 0 1
0 1 1
1 0 1
end
"""

FOUR_RING = """\
field q
vars x0 x1 x2
order grevlex
gens
x0*x1
x0*(x0-x2)
x1*(x1-x2)*(x1+x2)
end
"""

SKEW_LINES = """\
field fp 101
vars x0 x1 x2 x3
gens
x0*x2
x0*x3
x1*x2
x1*x3
end
"""


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run_json(capsys, argv):
    code = cli.main(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_parse_ring_file():
    parsed = cli.parse_ring_file(FOUR_RING)
    assert parsed.ideal.ring.field is QQ
    assert parsed.ideal.ring.nvars == 3
    assert len(parsed.ideal.gens) == 3
    assert parsed.points is None


def test_parse_ring_file_field_override():
    parsed = cli.parse_ring_file(FOUR_RING, PrimeField(101))
    assert parsed.ideal.ring.field == PrimeField(101)


@pytest.mark.parametrize(
    "text",
    [
        "vars x y\ngens\nx\nend\n",
        "field q\nvars x y\ngens\nx\n",
        "field q\nvars x y\norder weird\ngens\nx\nend\n",
        "field q\nvars x y\ngens\nx+y^2\nend\n",
        "field q\nvars x y\ngens\nx+z\nend\n",
        "field q\nbogus\n",
    ],
)
def test_parse_ring_file_rejects(text):
    with pytest.raises(ValueError):
        try:
            cli.parse_ring_file(text)
        except cli.InputError as exc:
            raise ValueError(str(exc)) from exc


def test_parse_points_file():
    parsed = cli.parse_points_file(FOUR_PTS)
    assert len(parsed.points) == 4
    assert parsed.ideal == parsed.points.ideal


def test_parse_points_file_wrong_width():
    with pytest.raises(cli.InputError):
        cli.parse_points_file("field q\nambient 2\npoints\n1 2\nend\n")


def test_invariants_points(capsys, write):
    code, out = run_json(capsys, ["invariants", write("four.pts", FOUR_PTS)])
    assert code == 0
    assert (out["a"], out["d"], out["e"]) == (1, 1, 4)
    assert out["partial"] is False


@pytest.mark.parametrize("names,a", [("x y", 1), ("x y z", 0)])
def test_invariants_cubic(capsys, write, names, a):
    gens = "+".join(f"{v}^3" for v in names.split())
    path = write("cubic.ring", f"field q\nvars {names}\ngens\n{gens}\nend\n")
    code, out = run_json(capsys, ["invariants", path])
    assert code == 0
    assert (out["a"], out["type"], out["is_level"]) == (a, 1, True)


def test_invariants_non_cm_is_partial(capsys, write):
    code, out = run_json(capsys, ["invariants", write("skew.ring", SKEW_LINES)])
    assert code == 0
    assert out["partial"] is True


def test_core_both_four_points(capsys, write):
    code, out = run_json(capsys, ["core", write("four.ring", FOUR_RING), "--method", "both"])
    assert code == 0
    assert out["agreement"] is True
    parsed = cli.parse_ring_file(FOUR_RING)
    ring = parsed.ideal.ring
    expected = parsed.ideal + Ideal(ring, ["x0^2"]) + power_of_maximal(ring, 3)
    assert out["core"] == ideal_strings(expected)
    assert out["sandwich"]["lower"] == "m^3"


def test_core_polynomial_ring(capsys, write):
    code, out = run_json(capsys, ["core", write("plane.ring", "field q\nvars x y\ngens\nend\n")])
    assert code == 0
    assert out["core"] == ["x", "y"]


def test_core_inconclusive_exit_3(capsys, write, monkeypatch):
    real = K.OraclePolicy
    monkeypatch.setattr(K, "OraclePolicy", lambda: real(stable=3, max_rounds=1))
    code = cli.main(["core", write("four.pts", FOUR_PTS), "--method", "oracle"])
    capsys.readouterr()
    assert code == 3


def test_core_needs_cm(capsys, write):
    assert cli.main(["core", write("skew.ring", SKEW_LINES)]) == 2


def test_duplicate_point_exit_2(capsys, write):
    text = "field q\nambient 1\npoints\n1 1\n2 2\nend\n"
    assert cli.main(["points", write("dup.pts", text), "cb"]) == 2
    assert "input error" in capsys.readouterr().err


def test_missing_file_exit_2(capsys, tmp_path):
    assert cli.main(["invariants", str(tmp_path / "nope.ring")]) == 2


def test_points_needs_points_file(capsys, write):
    assert cli.main(["points", write("four.ring", FOUR_RING), "hf"]) == 2


def test_points_cb_four(capsys, write):
    code, out = run_json(capsys, ["points", write("four.pts", FOUR_PTS), "cb"])
    assert code == 0
    assert out["is_CB"] is False
    assert out["core_strictly_above_m^(a+2)"] is True


def test_points_cb_generic(capsys, write):
    text = "field q\nambient 2\npoints\n1 0 0\n0 1 0\n0 0 1\n1 1 1\nend\n"
    code, out = run_json(capsys, ["points", write("gen.pts", text), "cb"])
    assert code == 0
    assert out["is_CB"] is True


def test_points_separators_p1(capsys, write):
    text = "field q\nambient 1\npoints\n1 0\n0 1\nend\n"
    code, out = run_json(capsys, ["points", write("p1.pts", text), "separators"])
    assert code == 0
    assert out["degrees"] == [1, 1]


def test_points_hf_and_conductor(capsys, write):
    path = write("four.pts", FOUR_PTS)
    code, out = run_json(capsys, ["points", path, "hf"])
    assert code == 0 and out["hilbert_function"][:3] == [1, 3, 4]
    code, out = run_json(capsys, ["points", path, "conductor"])
    assert code == 0 and "x0" in out["conductor"]


def test_points_yz(capsys, write):
    code, out = run_json(capsys, ["points", write("four.pts", FOUR_PTS), "yz", "--z", "3", "--f", "x0"])
    assert code == 0 and out["passed"] is True


def test_points_yz_needs_args(capsys, write):
    assert cli.main(["points", write("four.pts", FOUR_PTS), "yz"]) == 2


def test_verify_colon_structure_four_points(capsys, write):
    path = write("four.pts", FOUR_PTS)
    assert cli.main(["verify", path, "--suite", "colon-structure"]) == 0
    text = capsys.readouterr().out
    assert "FAIL" not in text
    assert "colon-structure: all pass" in text


def test_verify_reports_skips(capsys, write):
    code, out = run_json(capsys, ["verify", write("four.ring", FOUR_RING), "--suite", "coreandS"])
    assert code == 0
    assert [c["status"] for c in out["coreandS"]["checks"]] == ["skip"]


def test_verify_failure_exit_1(capsys, write, monkeypatch):
    def failing(ctx):
        v = Verdict()
        v.check("always false", False)
        return v

    monkeypatch.setitem(SUITES, "puv22", failing)
    assert cli.main(["verify", write("four.pts", FOUR_PTS), "--suite", "puv22"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_unknown_suite(capsys, write):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", write("four.pts", FOUR_PTS), "--suite", "nonsense"])
    assert exc.value.code == 2


def test_json_deterministic(capsys, write):
    path = write("four.pts", FOUR_PTS)
    outs = []
    for _ in range(2):
        cli.main(["verify", path, "--suite", "core-vs-oracle", "--seed", "7", "--format", "json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("CORECALC_SEED", "42")
    args = cli.build_parser().parse_args(["invariants", "f"])
    assert args.seed == 42
    monkeypatch.setenv("CORECALC_SEED", "junk")
    assert cli.build_parser().parse_args(["invariants", "f"]).seed == 0


def test_field_flag_overrides(capsys, write):
    code, out = run_json(capsys, ["invariants", write("four.ring", FOUR_RING), "--field", "fp 101"])
    assert code == 0 and out["a"] == 1
    assert cli.main(["invariants", write("four2.ring", FOUR_RING), "--field", "gf 4"]) == 2
