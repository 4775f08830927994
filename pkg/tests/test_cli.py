import json

import pytest

from donaldson_cp2.cli import ParseError, parse_integrand, run


def test_parse_segre_only():
    expr = parse_integrand("s12(E*L)")
    assert (expr.i, expr.k) == (0, 12)


def test_parse_product():
    expr = parse_integrand("c1(L)^2 * s2(E*L)")
    assert (expr.i, expr.k) == (2, 2)


def test_parse_c1_without_exponent():
    assert parse_integrand("c1(L)").i == 1
    assert parse_integrand("c1(L) * c1(L)^3").i == 4


def test_parse_rejects_two_segre_factors():
    with pytest.raises(ParseError):
        parse_integrand("s3(E*L) * s2(E*L)")


def test_parse_rejects_garbage_with_offset():
    with pytest.raises(ParseError) as err:
        parse_integrand("c1(L) + s2(E*L)")
    assert err.value.offset == 6
    with pytest.raises(ParseError) as err:
        parse_integrand("s2(F*L)")
    assert err.value.expected == {"(E*L)"}


def test_parse_rejects_empty():
    with pytest.raises(ParseError):
        parse_integrand("")


def test_donaldson_command(capsys):
    assert run(["donaldson", "--n", "5"]) == 0
    out = capsys.readouterr().out
    assert "q_17 = 2540" in out


def test_donaldson_out_of_range(capsys):
    assert run(["donaldson", "--n", "9"]) == 2
    assert "OutOfRange" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    assert run(["donaldson"]) == 2
    assert run(["no-such-command"]) == 2


def test_integrate_command(capsys):
    assert run(["integrate", "--m", "3", "--expr", "c1(L)^3 * s3(E*L)"]) == 0
    assert "= 8" in capsys.readouterr().out


def test_integrate_bad_expression(capsys):
    assert run(["integrate", "--m", "3", "--expr", "junk"]) == 2


def test_integrate_degree_mismatch(capsys):
    assert run(["integrate", "--m", "1", "--expr", "s5(E*L)"]) == 2
    assert "DegreeMismatch" in capsys.readouterr().err


def test_json_output_schema(capsys):
    assert run(["--format", "json", "integrate", "--m", "3",
                "--expr", "c1(L)^3 * s3(E*L)"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["command"] == "integrate"
    assert record["n"] == 3 and record["i"] == 3 and record["k"] == 3
    assert record["value"] == {"num": "8", "den": "1"}
    assert record["fixed_points"] == 22
    assert set(record["spec"]) == {"w1", "w2", "seed"}
    assert isinstance(record["elapsed_ms"], int)


def test_json_darboux(capsys):
    assert run(["--format", "json", "darboux", "--n", "2", "--i", "3"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["value"]["num"] == "8"


def test_table_text_and_csv(capsys):
    assert run(["table", "--n-max", "4"]) == 0
    out = capsys.readouterr().out
    assert "q_5 = 1" in out and "q_9 = 3" in out and "q_13 = 54" in out
    assert run(["--format", "csv", "table", "--n-max", "3"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["2,5,1", "3,9,3"]


def test_witness_command(capsys):
    assert run(["witness", "--n", "2", "--seed", "3", "--samples", "2"]) == 0
    out = capsys.readouterr().out
    assert "all verified" in out


def test_witness_json(capsys):
    assert run(["--format", "json", "witness", "--n", "3", "--samples", "1"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["all_verified"] is True
    assert record["results"][0]["system_dimension"] == 3


def test_seed_flag_changes_specialization(capsys):
    assert run(["--format", "json", "--seed", "1", "integrate", "--m", "2",
                "--expr", "s4(E*L)"]) == 0
    rec1 = json.loads(capsys.readouterr().out)
    assert run(["--format", "json", "--seed", "2", "integrate", "--m", "2",
                "--expr", "s4(E*L)"]) == 0
    rec2 = json.loads(capsys.readouterr().out)
    assert rec1["spec"] != rec2["spec"]
    assert rec1["value"] == rec2["value"]


def test_threads_flag(capsys):
    assert run(["--threads", "4", "donaldson", "--n", "3"]) == 0
    assert "q_9 = 3" in capsys.readouterr().out
