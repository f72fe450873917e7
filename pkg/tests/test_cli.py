import json

import pytest

from ocmirror.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--ordered")
    assert code == 0
    assert out == "(3,3,3)\n(2,4,4)\n(2,3,6)\ncount 3\n"


def test_enumerate_json(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "--n", "2", "--format", "json")
    assert code == 0
    assert doc == {"n": 2, "ordered": True, "count": 1, "solutions": [[2, 2]]}
    code, doc, _ = run_json(capsys, "enumerate", "--n", "5", "--format", "json")
    assert doc["count"] == 147


def test_enumerate_unordered(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "--n", "3", "--unordered",
                            "--format", "json")
    assert doc["count"] == 10 and doc["ordered"] is False


def test_enumerate_rejects_bad_n(capsys):
    with pytest.raises(SystemExit) as e:
        main(["enumerate", "--n", "9"])
    assert e.value.code == 2


def test_map_json_schema(capsys):
    code, doc, _ = run_json(capsys, "map", "--k", "2,2", "--order", "6",
                            "--format", "json")
    assert code == 0
    assert set(doc) == {"weights", "phase", "order", "series", "integral",
                        "violations"}
    assert doc["weights"] == {"k": 2, "w": [1, 1]}
    assert doc["phase"] == "compact" and doc["order"] == 6
    assert doc["integral"] is True and doc["violations"] == []
    q0 = doc["series"]["q0"]
    assert q0[0] == {"e": [1, 0], "v": "1"}
    assert {"e": [1, 1], "v": "-1"} in q0
    degrees = [r["e"][0] + r["e"][1] for r in q0]
    assert degrees == sorted(degrees) and max(degrees) <= 6


def test_map_local_phase_emits_exponent_data(capsys):
    code, doc, _ = run_json(capsys, "map", "--k", "2,2", "--phase",
                            "local-inner-b", "--order", "6", "--format", "json")
    assert code == 0
    assert set(doc["series"]) == {"q0", "q1", "log_u0", "log_u1"}
    assert {"e": [2, 2], "v": "3/2"} in doc["series"]["log_u0"]
    assert doc["integral"] is True  # exponent data is not part of the claim


def test_map_rejects_non_unit_fraction(capsys):
    with pytest.raises(SystemExit) as e:
        main(["map", "--k", "3,3,4", "--order", "4"])
    assert e.value.code == 2
    assert "1/3+1/3+1/4 ≠ 1" in capsys.readouterr().err


def test_map_rejects_bad_brane(capsys):
    with pytest.raises(SystemExit) as e:
        main(["map", "--k", "2,2", "--brane", "5"])
    assert e.value.code == 2


def test_map_rejects_tilde_phase(capsys):
    with pytest.raises(SystemExit) as e:
        main(["map", "--k", "2,2", "--phase", "compact-tilde"])
    assert e.value.code == 2


def test_invert_compact(capsys):
    code, doc, _ = run_json(capsys, "invert", "--k", "2,4,4", "--order", "4",
                            "--format", "json")
    assert code == 0
    x0 = doc["series"]["x0"]
    assert {"e": [2, 0], "v": "-1"} in x0
    assert {"e": [1, 1], "v": "1"} in x0


def test_invert_local_inner_b(capsys):
    code, doc, _ = run_json(capsys, "invert", "--k", "2,2", "--phase",
                            "local-inner-b", "--order", "5", "--format", "json")
    assert code == 0
    assert {"e": [2, 1], "v": "-1"} in doc["series"]["x0"]
    assert {"e": [1, 2], "v": "-1"} in doc["series"]["x1"]


def test_check_vacuous_and_failing(capsys):
    code, out, _ = run(capsys, "check", "--suite", "paper", "--order", "0")
    assert code == 0 and "0 checks" in out
    code, out, _ = run(capsys, "check", "--suite", "paper")
    assert code == 1
    assert "588 checks, 559 passed, 29 failed" in out


def test_check_passing_suite(capsys):
    code, doc, _ = run_json(capsys, "check", "--suite", "oracles", "--order",
                            "4", "--format", "json")
    assert code == 0
    assert doc["ok"] is True and doc["fail"] == 0
    assert doc["suite"] == "oracles"
    assert all(set(c) == {"name", "ok", "detail"} for c in doc["checks"])


def test_check_output_is_run_invariant(capsys):
    args = ("check", "--suite", "paper", "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert (code1, out1) == (code2, out2)
    code3, out3, _ = run(capsys, *args[:-2], "--jobs", "7", "--format", "json")
    assert out3 == out1


def test_product_form(capsys):
    code, doc, _ = run_json(capsys, "product-form", "--k", "2,2", "--order",
                            "8", "--format", "json")
    assert code == 0
    assert doc["integral"] is True and doc["direction"] == "alpha"
    assert {"e": [0, 1], "v": "-1"} in doc["series"]["alpha0"]
    assert {"e": [2, 0], "v": "1"} in doc["series"]["alpha1"]
    code, out, _ = run(capsys, "product-form", "--k", "2,2", "--direction",
                       "beta", "--order", "6")
    assert code == 0
    assert "beta0[0,1] = 1" in out and "integral: yes" in out
