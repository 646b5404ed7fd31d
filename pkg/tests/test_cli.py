import io
import json
import subprocess
import sys

import pytest

from olaplus.cli import main, parse_params
from olaplus.generators import clique, cycle, path, star
from olaplus.graphio import format_graph, parse_graph_text

DECIDE_KEYS = {"decision", "k", "ola_plus", "arrangement", "kernel_stats", "timings_ms"}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def k3(tmp_path):
    f = tmp_path / "k3.txt"
    f.write_text(format_graph(clique(3)))
    return str(f)


def test_decide_yes(k3):
    code, out, _ = run(["--mode", "decide", "--k", "1", "--input", k3])
    report = json.loads(out)
    assert code == 0
    assert set(report) == DECIDE_KEYS
    assert report["decision"] == "yes" and report["ola_plus"] == 1
    assert sorted(report["arrangement"]) == [1, 2, 3]
    assert set(report["timings_ms"]) == {"parse", "components", "kernelize", "search", "lift"}


def test_decide_no(k3):
    code, out, _ = run(["--mode", "decide", "--k", "0", "--input", k3])
    assert code == 1
    report = json.loads(out)
    assert set(report) == DECIDE_KEYS and report["decision"] == "no"


def test_oracle_path():
    code, out, _ = run(["--mode", "oracle", "--family", "path", "--params", "n=5"])
    assert code == 0
    r = json.loads(out)
    assert set(r) == {"ola", "ola_plus", "witness"}
    assert (r["ola"], r["ola_plus"]) == (4, 0)


def test_kernel_mode():
    code, out, _ = run(["--mode", "kernel", "--k", "2", "--family", "path", "--params", "n=10"])
    r = json.loads(out)
    assert code == 0
    assert set(r) == {"k", "gate", "kernel", "record"}
    assert r["kernel"]["n"] == 6
    assert sorted(s[0] for s in r["record"]["steps"]) == [4, 5, 6, 7]
    code, out, _ = run(["--mode", "kernel", "--k", "0", "--family", "cycle", "--params", "n=5"])
    assert code == 1 and json.loads(out)["gate"] == "reject_too_big"


def test_generate_round_trip():
    for fmt in ("edgelist", "dimacs"):
        code, out, _ = run(["--mode", "generate", "--family", "random_tree", "--params", "n=20",
                            "--seed", "7", "--graph-format", fmt])
        assert code == 0
        again = run(["--mode", "generate", "--family", "random_tree", "--params", "n=20",
                     "--seed", "7", "--graph-format", fmt])[1]
        assert out == again
        assert parse_graph_text(out).m == 19


def test_count_mode_small():
    code, out, _ = run(["--mode", "count", "--params", "path_n_max=5,path_k_max=2,tree_n_max=4,tree_k_max=1"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,n,k,j_or_i,exact_count,bound,holds"
    assert all(line.endswith("true") for line in lines[1:])


def test_bench_mode():
    code, out, _ = run(["--mode", "bench", "--k", "1:2", "--family", "caterpillar",
                        "--params", "spine=50:100,stride=25,triangle=1", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:4] == ["n", "m", "k", "decision"]
    assert len(lines) == 1 + 4


@pytest.mark.parametrize("argv", [
    ["--mode", "decide", "--family", "path", "--params", "n=4"],
    ["--mode", "decide", "--k", "1"],
    ["--mode", "decide", "--k", "1", "--family", "path", "--params", "n=4", "--input", "x"],
    ["--mode", "decide", "--k", "-1", "--family", "path", "--params", "n=4"],
    ["--mode", "decide", "--k", "1", "--input", "/nonexistent/graph.txt"],
    ["--mode", "decide", "--k", "1", "--family", "path", "--params", "n=zero"],
    ["--mode", "decide", "--k", "1", "--family", "path", "--params", "m=4"],
    ["--mode", "oracle", "--family", "path", "--params", "n=30", "--oracle-method", "enum"],
    ["--mode", "unknown"],
    ["--mode", "decide", "--k", "1:2", "--family", "path", "--params", "n=4"],
])
def test_errors_exit_2(argv):
    code, out, err = run(argv)
    assert code == 2
    assert out == ""


def test_bad_input_reports_line(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3 1\n1 4\n")
    code, _, err = run(["--mode", "decide", "--k", "1", "--input", str(f)])
    assert code == 2 and "line 2" in err


def test_exit_codes_on_corpus(tmp_path):
    for g, opt in ((path(6), 0), (clique(3), 1), (cycle(5), 3), (star(4), 1), (clique(4), 4)):
        f = tmp_path / "g.txt"
        f.write_text(format_graph(g))
        for k in range(5):
            code, out, _ = run(["--mode", "decide", "--k", str(k), "--input", str(f)])
            assert code == (0 if opt <= k else 1)
            assert set(json.loads(out)) == DECIDE_KEYS


def test_text_format_and_labels(tmp_path):
    f = tmp_path / "named.txt"
    f.write_text("3 3\nx y\ny z\nx z\n")
    code, out, _ = run(["--mode", "decide", "--k", "1", "--input", str(f), "--labels", "map",
                        "--format", "text"])
    assert code == 0
    assert "decision: yes" in out
    order = next(line for line in out.splitlines() if line.startswith("order:")).split()[1:]
    assert sorted(order) == ["x", "y", "z"]


def test_parse_params():
    assert parse_params("n=10, c=2") == {"n": 10, "c": 2}
    assert parse_params("spine=1:2:3") == {"spine": [1, 2, 3]}
    assert parse_params("") == {}


def test_module_entry_point(k3):
    proc = subprocess.run([sys.executable, "-m", "olaplus", "--mode", "decide", "--k", "1",
                           "--input", k3], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["decision"] == "yes"
