import json

import pytest

from tork.cli import main
from tork.grmod import stanley_reisner
from tork.koszul import BettiTable,betti_table
from tork.simplicial import SimplicialComplex



def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def read_lines(path):
    with open(path, encoding="utf-8") as file:
        return [json.loads(line) for line in file]


def test_betti_tsv(capsys, square_file):
    code, out, _ = run(capsys, "betti", "--input", square_file, "--format", "tsv", "--jobs", "1")
    assert code == 0
    assert out == "i\t2j\tbeta\n0\t0\t1\n1\t4\t2\n2\t8\t1\n"


def test_betti_json_round_trip(capsys, square_file, square):
    code, out, _ = run(capsys, "betti", "--input", square_file, "--jobs", "1")
    assert code == 0
    expected = betti_table(stanley_reisner(square, 4), j_max=4)
    assert BettiTable.from_json(json.loads(out)) == expected


def test_betti_text_with_poincare(capsys, square_file):
    code, out, _ = run(capsys, "betti", "--input", square_file, "--format", "text", "--poincare", "--jobs", "1")
    assert code == 0
    assert out.startswith("       0 1 2\n")
    assert out.endswith("poincare: [1, 0, 0, 2, 0, 0, 1]\n")


def test_betti_oracle(capsys, square_file):
    code, _, _ = run(capsys, "betti", "--input", square_file, "--oracle", "--jobs", "1")
    assert code == 0


def test_betti_module_input(capsys, write_json):
    path = write_json("quotient.json", {
        "m": 2,
        "levels": [1, 2],
        "mult": [
            {"var": 1, "level": 0, "entries": [[0, 0, "1"]]},
            {"var": 2, "level": 0, "entries": [[1, 0, "1"]]},
        ],
    })
    code, out, _ = run(capsys, "betti", "--input", path, "--format", "tsv", "--jobs", "1")
    assert code == 0
    assert out == "i\t2j\tbeta\n0\t0\t1\n1\t4\t3\n2\t6\t2\n"
    code, _, err = run(capsys, "betti", "--input", path, "--oracle", "--jobs", "1")
    assert code == 2
    assert "complex" in err


@pytest.mark.parametrize("content", [
    "{not json",
    json.dumps({"m": 2, "facets": [[5]]}),
    json.dumps({"m": 2}),
    json.dumps([1, 2]),
])
def test_betti_rejects_broken_input(capsys, tmp_path, content):
    path = tmp_path / "broken.json"
    path.write_text(content)
    code, out, err = run(capsys, "betti", "--input", str(path))
    assert code == 3
    assert out == ""
    assert "error" in err


def test_betti_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "betti", "--input", str(tmp_path / "missing.json"))
    assert code == 3


def test_check_passes(capsys, square_file):
    code, out, _ = run(capsys, "check", "--input", square_file, "--suite", "eg,trk,euler", "--jobs", "1")
    assert code == 0
    data = json.loads(out)
    assert [r["suite"] for r in data["reports"]] == ["eg", "trk", "euler"]
    assert {r["overall"] for r in data["reports"]} == {"pass"}
    assert data["proved_failures"] == []
    assert len(data["input_hash"]) == 64


def test_check_point_module_corners(capsys, point_module_file):
    code, out, _ = run(capsys, "check", "--input", point_module_file, "--suite", "corners", "--jobs", "1")
    assert code == 0
    assert json.loads(out)["reports"][0]["overall"] == "pass"


def test_check_not_applicable(capsys, square_file):
    code, out, err = run(capsys, "check", "--input", square_file, "--suite", "ab", "--format", "tsv", "--jobs", "1")
    assert code == 0
    assert out.splitlines()[-1] == "ab\toverall\t\t\tna"
    assert "na" in err


def test_check_unknown_suite(capsys, square_file):
    code, _, err = run(capsys, "check", "--input", square_file, "--suite", "eg,bogus")
    assert code == 2
    assert "bogus" in err


def test_enum_exhaustive(capsys, tmp_path):
    out_path = tmp_path / "m3.jsonl"
    code, _, _ = run(capsys, "enum", "--m", "3", "--exhaustive", "--out", str(out_path), "--no-timestamp", "--jobs", "1")
    assert code == 0
    lines = read_lines(out_path)
    records, summary = lines[:-1], lines[-1]["summary"]
    assert len(records) == 19
    assert [r["index"] for r in records] == list(range(19))
    assert summary["records"] == 19
    assert summary["proved_failures"] == 0
    assert "duality" not in summary["suites"]
    assert all("wall_ms" not in r and "timestamp" not in r for r in records)
    assert SimplicialComplex.from_json(records[0]["input"]).faces == frozenset({0})


def test_enum_sample_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / name for name in ("a.jsonl", "b.jsonl", "c.jsonl")]
    for path,jobs in zip(paths, ("1", "1", "2")):
        code, _, _ = run(capsys, "enum", "--m", "5", "--sample", "--count", "20", "--seed", "1",
                         "--out", str(path), "--no-timestamp", "--jobs", jobs)
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes() == paths[2].read_bytes()


def test_enum_m4_records_the_square_as_equality_case(capsys, tmp_path, square):
    out_path = tmp_path / "m4.jsonl"
    code, _, _ = run(capsys, "enum", "--m", "4", "--mode", "exhaustive", "--out", str(out_path), "--suite", "trk,eg", "--jobs", "1")
    assert code == 0
    summary = read_lines(out_path)[-1]["summary"]
    assert summary["records"] == 167
    assert summary["min_hrk_ratio"] == "1"
    assert square.to_json() in [entry["input"] for entry in summary["extremal"]]
    assert summary["suites"]["trk"]["fail"] == 0


def test_enum_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "enum", "--m", "2", "--out", str(tmp_path / "missing" / "out.jsonl"), "--jobs", "1")
    assert code == 5
    assert "cannot write" in err


def test_enum_usage_errors(capsys, tmp_path):
    out = str(tmp_path / "x.jsonl")
    assert run(capsys, "enum", "--m", "6", "--exhaustive", "--out", out)[0] == 2
    assert run(capsys, "enum", "--m", "3", "--sample", "--out", out)[0] == 2
    assert run(capsys, "enum", "--m", "3", "--sample", "--exhaustive", "--count", "2", "--out", out)[0] == 2


def test_report(capsys, tmp_path):
    out_path = tmp_path / "m2.jsonl"
    run(capsys, "enum", "--m", "2", "--out", str(out_path), "--no-timestamp", "--jobs", "1")
    code, out, _ = run(capsys, "report", "--input", str(out_path))
    assert code == 0
    summary = json.loads(out)
    assert summary["records"] == 5
    assert summary["skipped"] == 0
    assert sum(summary["hrk"].values()) == 5

    with open(out_path, "a", encoding="utf-8") as file:
        file.write("{corrupt\n")
    code, out, err = run(capsys, "report", "--input", str(out_path), "--format", "tsv")
    assert code == 0
    assert "skipped\t1" in out.splitlines()
    assert "1 corrupt record(s)" in err


def test_report_empty_file(capsys, tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    code, out, _ = run(capsys, "report", "--input", str(path))
    assert code == 0
    summary = json.loads(out)
    assert summary["records"] == 0
    assert summary["min_hrk_ratio"] is None


def test_help_and_unknown_commands(capsys):
    code, out, _ = run(capsys, "betti", "--help")
    assert code == 0
    assert "--input" in out
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
