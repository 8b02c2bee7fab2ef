import json
from fractions import Fraction as F

import pytest

from relbrauer import CurvePoint, INFINITY, PointNotOnCurve, WeierstrassCurve
from relbrauer.cli import (
    JobSpec,
    ParseError,
    main,
    parse_curve,
    parse_extension,
    parse_point,
    render_text,
    run,
)


def test_parse_curve_long_form():
    c = parse_curve("0,-1,1,-10,-20")
    assert (c.a1, c.a2, c.a3, c.a4, c.a6) == (0, -1, 1, -10, -20)
    assert parse_curve("0 -1 1 -10 -20") == c


def test_parse_curve_short_form():
    c = parse_curve("[-48,0]")
    assert (c.a1, c.a2, c.a3, c.a4, c.a6) == (0, 0, 0, -48, 0)


def test_parse_curve_accepts_fractions_and_unicode_minus():
    c = parse_curve("[1/4,0]")
    assert c.a4 == F(1, 4)
    assert parse_curve("0,−1,1,−10,−20") == parse_curve("0,-1,1,-10,-20")


def test_parse_curve_errors():
    with pytest.raises(ParseError):
        parse_curve("1,2,3")
    with pytest.raises(ParseError):
        parse_curve("0,-1,zap,-10,-20")
    with pytest.raises(ParseError):
        parse_curve("")


def test_parse_point_forms(order5_curve):
    assert parse_point("O", order5_curve) == INFINITY
    g = CurvePoint(F(5), F(5))
    assert parse_point("5,5", order5_curve) == g
    assert parse_point("(5, 5)", order5_curve) == g
    assert parse_point("(16,-61)", order5_curve) == CurvePoint(F(16), F(-61))


def test_parse_point_negation_fallback(mixed_torsion_curve):
    # -8,18 does not parse as the (off-curve) literal (-8, 18); it negates (8, 18)
    p = parse_point("-8,18", mixed_torsion_curve)
    assert p == CurvePoint(F(8), F(-27))
    # a literal that is on the curve wins over negation
    q = parse_point("-1,0", mixed_torsion_curve)
    assert q == CurvePoint(F(-1), F(0))


def test_parse_point_errors(order5_curve):
    with pytest.raises(PointNotOnCurve):
        parse_point("5,6", order5_curve)
    with pytest.raises(ParseError):
        parse_point("5", order5_curve)
    with pytest.raises(ParseError):
        parse_point("5,qq", order5_curve)


def test_parse_extension_forms():
    assert parse_extension("quad:-1").d == -1
    ext = parse_extension("cyclo:11:10")
    assert ext.conductor == 11 and ext.subgroup == (1, 10)
    assert parse_extension("cyclotomic:16:{15}").subgroup == (1, 15)
    assert parse_extension("cyclo:5:1").degree == 4


def test_parse_extension_errors():
    with pytest.raises(ParseError):
        parse_extension("galois:11")
    with pytest.raises(ParseError):
        parse_extension("quad:abc")
    with pytest.raises(ValueError):
        parse_extension("quad:12")
    with pytest.raises(ValueError):
        parse_extension("cyclo:16:1")


def test_run_torsion_report(order5_curve):
    job = JobSpec(command="torsion", curve=order5_curve)
    report = run(job)
    assert report["schema"] == "1"
    assert report["command"] == "torsion"
    assert report["structure"] == "Z/5"
    assert report["order"] == 5
    assert report["generators"] == [{"point": ["5", "5"], "order": 5}]
    assert report["elements"][0] == "O"


def test_main_torsion_text_output(capsys):
    assert main(["torsion", "--curve", "0,-1,1,-10,-20"]) == 0
    out = capsys.readouterr().out
    assert out == (
        "curve: y^2 + y = x^3 - x^2 - 10*x - 20\n"
        "torsion: Z/5 (order 5)\n"
        "generators:\n"
        "  (5, 5)  order 5\n"
        "elements: O, (5, -6), (5, 5), (16, -61), (16, 60)\n"
    )


def test_main_pairing_json(capsys):
    args = [
        "pairing",
        "--curve", "0,-1,1,-10,-20",
        "--t", "5,5",
        "--m", "5",
        "--p", "5,5",
        "--ext", "cyclo:11:10",
        "--output", "json",
    ]
    assert main(args) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["extension"] == "cyclo:11:1,10"
    (result,) = report["results"]
    assert result["point"] == ["5", "5"]
    assert result["order"] == 5
    assert result["b_raw"] == "-1/11"
    assert result["b_normalized"] == "14641"
    assert result["status"] == "undetermined"


def test_main_json_is_deterministic(capsys):
    args = [
        "relbr",
        "--curve", "1,1,1,-10,-10",
        "--t=-8,18",
        "--m", "4",
        "--ext", "cyclo:5:1",
        "--output", "json",
    ]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    report = json.loads(first)
    points = [entry["point"] for entry in report["results"]]
    assert points == [["-2", "3"], ["-13/4", "9/8"]]


def test_relbr_auto_generators_warn_about_rank(capsys):
    args = ["relbr", "--curve", "1,1,1,-10,-10", "--t=-8,18", "--m", "4", "--ext", "cyclo:5:1"]
    assert main(args) == 0
    captured = capsys.readouterr()
    assert "rank" in captured.err
    assert "order bound: every class order divides 4" in captured.out


def test_relbr_explicit_generators(capsys):
    args = [
        "relbr",
        "--curve", "1,1,1,-10,-10",
        "--t=-8,18",
        "--m", "4",
        "--ext", "cyclo:5:1",
        "--gens", "(8,18);(-1,0)",
        "--output", "json",
    ]
    assert main(args) == 0
    captured = capsys.readouterr()
    assert captured.err == ""
    report = json.loads(captured.out)
    entries = report["results"]
    assert [e["point"] for e in entries] == [["8", "18"], ["-1", "0"]]
    assert [e["b_normalized"] for e in entries] == ["5", "-1"]


def test_relbr_quaternion_structure(capsys):
    args = [
        "relbr",
        "--curve", "[-1,0]",
        "--t", "0,0",
        "--m", "2",
        "--ext", "quad:-1",
        "--gens", "(1,0);(-1,0)",
        "--output", "json",
    ]
    assert main(args) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["group_structure"] == [2]


def test_exit_code_parse_failures(capsys):
    assert main(["torsion", "--curve", "1,2,3"]) == 1
    assert main(["torsion", "--curve", "[0,0]"]) == 1  # singular
    assert main(["frobnicate"]) == 1
    assert main(["pairing", "--curve", "0,-1,1,-10,-20"]) == 1  # missing args
    assert main(
        ["pairing", "--curve", "0,-1,1,-10,-20", "--t", "5,6", "--m", "5",
         "--p", "5,5", "--ext", "cyclo:11:10"]
    ) == 1  # off-curve point
    capsys.readouterr()


def test_exit_code_torsion_mismatch(capsys):
    code = main(
        ["pairing", "--curve", "0,-1,1,-10,-20", "--t", "5,5", "--m", "3",
         "--p", "5,5", "--ext", "cyclo:7:6"]
    )
    assert code == 1
    assert "m-torsion" in capsys.readouterr().err


def test_exit_code_factoring_limit(monkeypatch, capsys):
    import relbrauer.exact as exact

    monkeypatch.setattr(exact, "TRIAL_DIVISION_BOUND", 10)
    monkeypatch.setattr(exact, "RHO_ITERATION_CAP", 50)
    m61 = 2**61 - 1
    assert main(["torsion", "--curve", f"[0,{m61}]"]) == 2
    assert "factoring limit" in capsys.readouterr().err


def test_exit_code_nonconstant_cocycle(monkeypatch, capsys):
    import relbrauer.cocycle as cocycle_mod

    def explode(*args, **kwargs):
        raise cocycle_mod.NonConstantCocycleValue("entry (1, 1) is not constant")

    monkeypatch.setattr(cocycle_mod, "two_cocycle", explode)
    code = main(
        ["pairing", "--curve", "0,-1,1,-10,-20", "--t", "5,5", "--m", "5",
         "--p", "5,5", "--ext", "cyclo:11:10"]
    )
    assert code == 3
    capsys.readouterr()


def test_render_text_round_trip(order5_curve):
    job = JobSpec(command="torsion", curve=order5_curve)
    text = render_text(run(job))
    assert "torsion: Z/5 (order 5)" in text
