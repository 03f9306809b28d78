import json
from pathlib import Path

import pytest

from hilbpow.cli import main
from hilbpow.series import MultiSeries

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_global_degree_one(capsys):
    code, out, _ = run(capsys, "global", "--ring", "motivic", "--dim", "2",
                       "--class", "1+L+L^2", "--trunc", "1")
    assert code == 0
    assert out.strip() == "1 + (1 + L + L^2)*T^1"


def test_global_json(capsys):
    code, out, _ = run(capsys, "global", "--ring", "motivic", "--dim", "2",
                       "--class", "1+L+L^2", "--trunc", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["terms"][1] == {"exponent": [1], "coefficient": "1 + L + L^2"}


def test_oracle_partitions(capsys):
    code, out, _ = run(capsys, "oracle", "partitions", "--dim", "2", "--upto", "4")
    assert code == 0 and out.strip() == "1 1 2 3 5"


def test_oracle_quotient(capsys):
    code, out, _ = run(capsys, "oracle", "quotient", "--order", "2", "--weights", "1,1",
                       "--upto", "3", "--format", "json")
    assert json.loads(out)["counts"] == [1, 1, 3, 5]


def test_missing_spec(capsys):
    code, _, err = run(capsys, "orbifold", "integrate", "missing.json")
    assert code == 1
    assert "cannot read spec" in json.loads(err)["message"]


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["global", "--dim", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["punctual", "--dim", "2", "--trunc", "3", "--bogus"])
    assert exc.value.code == 2


def test_domain_errors(capsys):
    code, _, err = run(capsys, "punctual", "--ring", "motivic", "--dim", "3", "--trunc", "2")
    assert code == 1 and "needs explicit series" in err
    code, _, err = run(capsys, "zeta", "--class", "1 + Q", "--trunc", "2")
    assert code == 1 and "position 4" in json.loads(err)["message"]


def test_punctual_quotient(capsys):
    code, out, _ = run(capsys, "punctual", "--ring", "integer", "--dim", "2", "--trunc", "2",
                       "--order", "2", "--weights", "1,1")
    assert out.strip() == "1 + T^1 + 3*T^2"


def test_zeta(capsys):
    _, out, _ = run(capsys, "zeta", "--class", "L", "--trunc", "3")
    assert out.strip() == "1 + L*T^1 + L^2*T^2 + L^3*T^3"


def test_pow_and_decompose(tmp_path, capsys):
    path = tmp_path / "a.json"
    path.write_text(json.dumps([{"exponent": [0], "coefficient": "1"},
                                {"exponent": [1], "coefficient": "1"}]))
    code, out, _ = run(capsys, "pow", str(path), "--ring", "integer", "--trunc", "3",
                       "--exponent", "-1", "--format", "json")
    assert code == 0
    assert MultiSeries.from_json(out) == MultiSeries.from_list("integer", [1, -1, 1, -1])
    code, out, _ = run(capsys, "decompose", str(path), "--ring", "integer", "--trunc", "5",
                       "--format", "json")
    factors = json.loads(out)["factors"]
    assert factors == [{"exponent": [1], "s": "1"}, {"exponent": [2], "s": "-1"}]


def test_json_round_trip_through_parser(tmp_path, capsys):
    _, out, _ = run(capsys, "global", "--dim", "2", "--class", "1+L+L^2", "--trunc", "4",
                    "--format", "json")
    series = MultiSeries.from_json(out)
    path = tmp_path / "s.json"
    path.write_text(out)
    _, again, _ = run(capsys, "pow", str(path), "--exponent", "1", "--format", "json")
    assert MultiSeries.from_json(again) == series
    assert again == out


def test_orbifold_with_toric_oracle(capsys):
    code, out, _ = run(capsys, "orbifold", "integrate", str(SPECS / "p112_euler.json"),
                       "--oracle", "toric", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["oracle"]["equal"] is True
    assert [t["coefficient"] for t in doc["terms"]][:3] == ["1", "3", "10"]


def test_orbifold_motivic_spec(capsys):
    code, out, _ = run(capsys, "orbifold", "integrate", str(SPECS / "p112_motivic_explicit.json"),
                       "--oracle", "toric")
    assert code == 0 and "equal: true" in out
    assert out.splitlines()[0] == "1 + (1 + L + L^2)*T^1 + (1 + 2*L + 4*L^2 + 2*L^3 + L^4)*T^2"


def test_orbifold_validate_failure(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 2, "ring": "integer", "trunc": 3, "total_class": "5",
                                "strata": [{"label": "open", "class": "2",
                                            "model": {"type": "smooth"}}]}))
    code, _, err = run(capsys, "orbifold", "validate", str(path))
    assert code == 1
    assert "total_class" in json.loads(err)["problems"][0]


def test_nested_curve(capsys):
    code, out, _ = run(capsys, "nested", "--depth", "2", "--trunc", "1", "--curve-class", "1+L")
    assert code == 0 and out.strip() == "1 + (1 + L)*T2^1"


def test_nested_spec(tmp_path, capsys):
    path = tmp_path / "nested.json"
    path.write_text(json.dumps({"dim": 1, "ring": "integer", "trunc": 4, "strata": [
        {"label": "P1", "class": "2", "model": {"type": "smooth"}}]}))
    code, out, _ = run(capsys, "nested", "--depth", "2", "--trunc", "4", "--ring", "integer",
                       "--spec", str(path))
    _, ref, _ = run(capsys, "nested", "--depth", "2", "--trunc", "4", "--ring", "integer",
                    "--curve-class", "2")
    assert code == 0 and out == ref


def test_output_is_deterministic(capsys):
    argv = ["global", "--dim", "2", "--class", "1+L+L^2", "--trunc", "6", "--format", "json"]
    outputs = {run(capsys, *argv)[1] for _ in range(3)}
    assert len(outputs) == 1


def test_selftest_reports_each_criterion(monkeypatch, capsys):
    from hilbpow import acceptance
    monkeypatch.setattr(acceptance, "CRITERIA", [
        (5, "Kapranov zeta", acceptance.criterion_5),
        (9, "d=3 and d=1 Euler punctual series", acceptance.criterion_9),
    ])
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "[PASS]  5 Kapranov zeta" in out and out.strip().endswith("2/2 criteria passed")
    monkeypatch.setattr(acceptance, "CRITERIA", [(0, "broken", lambda: (False, "nope"))])
    code, out, _ = run(capsys, "selftest", "--format", "json")
    assert code == 1 and '"passed": false' in out
