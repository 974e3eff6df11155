import io
import json
import subprocess
import sys
from itertools import product

import pytest

from oriented_chain.cli import main
from oriented_chain.ptrans import PTrans, parse_ptrans


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def rows(text):
    return dict(line.split(": ", 1) for line in text.splitlines()[1:])


def test_classify_corrigendum():
    code, text = run("classify", "n=4; [1,2,1,2]")
    assert code == 0
    r = rows(text)
    assert (r["OP"], r["OR"], r["POP"], r["T"]) == ("false", "false", "false", "true")
    assert r["width"] == "4" and r["rank"] == "2"
    assert r["image_sequence"] == "(1,2,1,2)"
    assert r["descents"] == "2" and r["ascents"] == "2"


def test_classify_rotation_and_empty():
    assert rows(run("classify", "n=4; [2,3,4,1]")[1])["OP"] == "true"
    r = rows(run("classify", "n=4; {}")[1])
    for label in ("POP", "POR", "POPI", "PORI", "DPC", "PT", "I"):
        assert r[label] == "true"


def test_classify_json():
    code, text = run("classify", "n=3; {1:2, 3:1}", "--format", "json")
    d = json.loads(text)
    assert d["schema"] == 1 and d["input"] == "n=3; {1:2, 3:1}"
    assert d["membership"]["POPI"] is True and d["membership"]["T"] is False


def test_classify_small_chain_omits_dpc():
    assert "DPC" not in rows(run("classify", "n=2; [2,1]")[1])


def test_classify_parse_error(capsys):
    code, _ = run("classify", "n=4; [1,2,q,2]")
    assert code == 2
    assert "'q'" in capsys.readouterr().err


def test_verify_exit_codes():
    assert run("verify", "T-BAR", "3..5")[0] == 0
    code, text = run("verify", "T-W3-OP-UNCORRECTED", "4")
    assert code == 1 and "n=4; [1,2,1,2]" in text
    assert run("verify", "T-DPC", "3..8")[0] == 0


def test_verify_json_lines():
    code, text = run("verify", "T-W4-OR", "3..4", "--format", "json")
    reports = [json.loads(line) for line in text.splitlines()]
    assert [r["instances_checked"] for r in reports] == [27, 256]
    assert all(r["mismatches"] == 0 for r in reports)


def test_verify_unknown_id(capsys):
    code, _ = run("verify", "T-NOPE", "3")
    assert code == 2
    assert "T-DPC" in capsys.readouterr().err


def test_bound_exceeded_is_usage_error():
    assert run("census", "7", "POP")[0] == 2
    assert run("census", "3", "OP", "--max-n", "2")[0] == 2


def test_census_rows():
    assert run("census", "2", "OP")[1] == "n,label,count\n2,OP,4\n"
    assert run("census", "3", "OR")[1].splitlines()[1] == "3,OR,27"
    assert run("census", "3", "OP")[1].splitlines()[1] == "3,OP,24"


def test_census_parallel_identical():
    assert run("census", "1..4")[1] == run("census", "1..4", "--jobs", "3")[1]


def test_census_json():
    d = json.loads(run("census", "3", "OP", "OR", "--format", "json")[1])
    assert d == {"schema": 1, "records": [{"n": 3, "label": "OP", "count": 24},
                                          {"n": 3, "label": "OR", "count": 27}]}


def test_counterexample(capsys):
    code, text = run("counterexample", "T-W3-OP-UNCORRECTED", "4")
    assert code == 0
    lines = text.splitlines()
    assert "n=4; [1,2,1,2]" in lines
    assert all(parse_ptrans(line).rank == 2 for line in lines)
    assert len(run("counterexample", "T-W3-OP-UNCORRECTED", "5", "3")[1].splitlines()) == 3
    code, text = run("counterexample", "T-W4-OR", "4")
    assert code == 0 and text == ""
    assert "no counterexamples" in capsys.readouterr().err


def test_bench():
    code, text = run("bench", "3")
    assert code == 0 and text.splitlines()[1].startswith("3,PT,64,")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2


def test_round_trip_all_of_pt4():
    for v in product(range(5), repeat=4):
        a = PTrans(4, v)
        code, text = run("classify", str(a))
        assert code == 0
        assert parse_ptrans(text.splitlines()[0]) == a


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "oriented_chain", "census", "2", "OP"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.endswith("2,OP,4\n")
