import io
import json
import subprocess
import sys

import pytest

from unigraphs import catalog as cat
from unigraphs.cli import main


def run(capsys, *argv: str) -> tuple[int, dict | str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    try:
        return code, json.loads(out), err
    except json.JSONDecodeError:
        return code, out, err


def test_analyze_unique_sequence(capsys):
    code, rep, _ = run(capsys, "analyze", "4,2,2,2,2,2", "--json")
    assert code == 0
    assert rep["graphic"] and rep["eg_profile"]["eg"] == [0]
    assert rep["classes"]["split"] is False
    assert rep["classes"]["hereditaryUnigraph"] is False
    assert rep["classes"]["unigraphDeskScale"] is True
    assert len(rep["realizations"]) == 1
    assert rep["meta"]["backend"] in ("cython", "python")


def test_analyze_c5(capsys):
    code, rep, _ = run(capsys, "analyze", "2^5", "--json", "--no-meta")
    assert code == 0 and "meta" not in rep
    assert rep["classes"]["pseudoSplit"] and rep["classes"]["hereditaryUnigraph"]
    assert rep["decomposition"]["tail"]["sequence"] == [2, 2, 2, 2, 2]


def test_analyze_non_graphic(capsys):
    code, rep, _ = run(capsys, "analyze", "3,3,1,1", "--json")
    assert code == 0 and rep["graphic"] is False
    code, _, _ = run(capsys, "analyze", "3,3,1,1", "--json", "--strict")
    assert code == 2


def test_analyze_large_sequence_skips_realizations(capsys):
    code, rep, _ = run(capsys, "analyze", "1^20", "--json")
    assert code == 0 and rep["classes"]["hereditaryUnigraph"]
    assert rep["warnings"] and "realizations" not in rep


def test_parse_error_reports_column(capsys):
    code, _, err = run(capsys, "analyze", "3,x")
    assert code == 1 and "column 3" in err


def test_analyze_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1,1\n"))
    code, rep, _ = run(capsys, "analyze", "-", "--json")
    assert code == 0 and rep["input"] == "1,1"


def test_classify_p5(capsys):
    code, rep, _ = run(capsys, "classify", cat.P5().to_graph6(), "--json")
    assert code == 0
    h = rep["classes"]["hereditaryUnigraph"]
    assert h["member"] is False and h["witness"]["name"] == "P5"
    code, _, _ = run(capsys, "classify", cat.P5().to_graph6(), "--strict")
    assert code == 2


def test_classify_bad_graph6(capsys):
    code, _, err = run(capsys, "classify", "D ?")
    assert code == 1 and "byte 1" in err


def test_decompose_sequence(capsys):
    code, rep, _ = run(capsys, "decompose", "--sequence", "5,5,4,4,4,1,1", "--json")
    comps = rep["sequence_decomposition"]["components"]
    assert code == 0
    assert comps[0]["sequence"] == [2, 2, 1, 1]
    assert [c["trivial"] for c in comps[1:]] == [True, True, True]
    assert rep["sequence_decomposition"]["tail"] is None


def test_decompose_graph(capsys):
    code, rep, _ = run(capsys, "decompose", cat.Cn(5).to_graph6(), "--json")
    assert code == 0 and rep["decomposition"]["components"] == []
    code, _, _ = run(capsys, "decompose")
    assert code == 1
    code, _, _ = run(capsys, "decompose", "--sequence", "3,3,1,1")
    assert code == 1


def test_realizations(capsys):
    code, rep, _ = run(capsys, "realizations", "3,2,2,2,1", "--json")
    assert code == 0 and rep["count"] == 2 and len(rep["realizations"]) == 2
    code, rep, _ = run(capsys, "realizations", "3,2,2,2,1", "--limit", "1", "--json")
    assert rep["count"] == 2 and len(rep["realizations"]) == 1
    code, _, err = run(capsys, "realizations", "1^12")
    assert code == 1 and "cap" in err


def test_verify(capsys):
    code, rep, _ = run(capsys, "verify", "hered-uni-3routes", "--max-n", "5", "--json", "--no-meta")
    assert code == 0 and rep["passed"] and rep["counterexamples"] == []
    code, rep, _ = run(capsys, "verify", "--list", "--json")
    assert "eg-lemma-split" in rep["properties"]
    code, _, _ = run(capsys, "verify", "nonsense")
    assert code == 1


def test_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "2^5", "--no-meta")
    assert code == 0
    assert "hereditaryUnigraph: yes" in out
    assert "eg: (0)" in out


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(["analyze"]) == 1
    capsys.readouterr()


@pytest.mark.parametrize("args", [["--version"], ["analyze", "1,1", "--json"]])
def test_entry_point_runs_as_module(args):
    proc = subprocess.run([sys.executable, "-m", "unigraphs.cli", *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()
