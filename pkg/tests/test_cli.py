import csv
import hashlib
import json

import pytest

from clairvoyant import cli


def run_csv(tmp_path, argv, name="out.csv"):
    out = tmp_path / name
    code = cli.main(argv + ["--out", str(out)])
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    manifest = json.loads((tmp_path / (name + ".manifest.json")).read_text())
    return rows, manifest, out


def test_recursion_output(tmp_path):
    rows, manifest, _ = run_csv(tmp_path, ["embed", "recursion", "--M", "2",
                                           "--n", "2"])
    assert [r["v"] for r in rows] == ["1", "3/4", "5/8"]
    assert manifest["command"] == "embed recursion"
    assert manifest["config"]["M"] == 2


def test_manifest_hash_matches_payload(tmp_path):
    _, manifest, out = run_csv(tmp_path, ["embed", "roots", "--M", "3"])
    assert manifest["sha256"] == hashlib.sha256(out.read_bytes()).hexdigest()
    assert manifest["version"]
    assert manifest["wall_time_s"] >= 0


def test_scan_header_and_values(tmp_path):
    rows, _, out = run_csv(tmp_path, ["embed", "scan", "--n", "3", "--M", "2"])
    header = out.read_text().splitlines()[0]
    assert header == "w,probability_num,probability_den"
    assert len(rows) == 8
    got = {r["w"]: (int(r["probability_num"]), int(r["probability_den"]))
           for r in rows}
    num, den = got["010"]
    assert num * 32 == den * 17           # v_3 = 17/32


def test_exact_decide_count(tmp_path):
    rows, _, _ = run_csv(tmp_path, ["embed", "exact", "--v", "01", "--M", "2"])
    assert rows[0]["probability_num"] == "5"
    assert rows[0]["probability_den"] == "8"
    rows, _, _ = run_csv(tmp_path, ["embed", "decide", "--v", "01",
                                    "--y", "0101", "--M", "2"])
    assert rows[0] == {"found": "true", "positions": "[1,2]", "valid": "true"}
    rows, _, _ = run_csv(tmp_path, ["embed", "count", "--v", "01",
                                    "--y", "0101", "--M", "2"])
    assert rows[0]["count"] == "1"


def test_embed_mc_modes(tmp_path):
    args = ["embed", "mc", "--M", "2", "--n", "6", "--replicas", "300",
            "--seed", "5"]
    rows, _, _ = run_csv(tmp_path, args + ["--target", "alternating"])
    assert rows[0]["target"] == "010101"
    rows, _, _ = run_csv(tmp_path, args + ["--target", "random"])
    assert rows[0]["target"] == "random"
    rows, _, _ = run_csv(tmp_path, args + ["--target", "110010"])
    assert rows[0]["target"] == "110010"


def test_schedule_commands(tmp_path):
    rows, _, _ = run_csv(tmp_path, ["schedule", "survive", "--M", "2",
                                    "--depth", "2", "--x", "1,1,1",
                                    "--y", "2,2,2"])
    assert rows[0]["survived"] == "true"
    assert json.loads(rows[0]["path"])[0] == [0, 0]
    rows, _, _ = run_csv(tmp_path, ["schedule", "curve", "--M", "2",
                                    "--depths", "1,3", "--replicas", "200",
                                    "--seed", "1"])
    assert [r["depth"] for r in rows] == ["1", "3"]
    assert float(rows[0]["estimate"]) >= float(rows[1]["estimate"])
    rows, _, _ = run_csv(tmp_path, ["schedule", "coupling", "--M", "2",
                                    "--k", "2", "--depth", "10",
                                    "--replicas", "50", "--seed", "2"])
    assert int(rows[0]["reduced_survivals"]) <= int(rows[0]["big_survivals"])
    rows, _, _ = run_csv(tmp_path, ["schedule", "undirected", "--M", "3",
                                    "--box", "5", "--replicas", "100",
                                    "--seed", "3"])
    assert 0.0 <= float(rows[0]["estimate"]) <= 1.0


def test_kwise_csv_feeds_env_checker(tmp_path):
    _, _, out = run_csv(tmp_path, ["schedule", "kwise",
                                   "--vertices", "1,1;1,2;2,1", "--M", "2"],
                        name="pmf.csv")
    rows, _, _ = run_csv(tmp_path, ["env", "kwise", "--pmf", str(out),
                                    "--k", "3"], name="report.csv")
    assert rows[0]["independent"] == "true"
    _, _, out4 = run_csv(tmp_path, ["schedule", "kwise",
                                    "--vertices", "1,1;1,2;2,1;2,2",
                                    "--M", "4"], name="pmf4.csv")
    rows, _, _ = run_csv(tmp_path, ["env", "kwise", "--pmf", str(out4),
                                    "--k", "4"], name="report4.csv")
    assert rows[0]["independent"] == "false"


def test_compat_commands(tmp_path):
    rows, _, _ = run_csv(tmp_path, ["compat", "decide", "--x", "0110",
                                    "--y", "1001"])
    assert rows[0]["compatible"] == "true"
    rows, _, _ = run_csv(tmp_path, ["compat", "oracle", "--x", "111",
                                    "--y", "111"])
    assert rows[0]["compatible"] == "false"
    rows, _, _ = run_csv(tmp_path, ["compat", "cert", "--x", "111",
                                    "--y", "111"])
    assert rows[0] == {"found": "true", "N": "1"}
    rows, _, _ = run_csv(tmp_path, ["compat", "mc", "--p", "1/2",
                                    "--n", "10,20", "--replicas", "200",
                                    "--seed", "4"])
    assert [r["n"] for r in rows] == ["10", "20"]
    assert float(rows[0]["estimate"]) >= float(rows[1]["estimate"])


def test_lattice_commands(tmp_path):
    rows, _, _ = run_csv(tmp_path, ["lattice", "blocks", "--p", "1/2",
                                    "--R", "2", "--replicas", "500",
                                    "--seed", "6"])
    assert rows[0]["formula"] == "7/8"
    rows, _, _ = run_csv(tmp_path, ["lattice", "embed2d", "--p", "1/2",
                                    "--R", "2", "--depth", "8",
                                    "--word", "0101", "--seed", "7"])
    if rows[0]["found"] == "true":
        assert rows[0]["valid"] == "true"
        assert rows[0]["gap_bound"] == "10"
    field = tmp_path / "field.txt"
    field.write_text("010\n101\n010\n")
    rows, _, _ = run_csv(tmp_path, ["lattice", "visible", "--field",
                                    str(field), "--origin", "1,1",
                                    "--word", "1010"])
    assert rows[0]["outcome"] == "found"
    rows, _, _ = run_csv(tmp_path, ["lattice", "abscan", "--p", "1/2",
                                    "--box", "3", "--replicas", "40",
                                    "--seed", "8"])
    assert {r["word"] for r in rows} == {"alternating", "constant"}


def test_env_column(tmp_path):
    rows, _, _ = run_csv(tmp_path, ["env", "column", "--mu", "1:1",
                                    "--box", "4", "--replicas", "30",
                                    "--seed", "9"])
    assert float(rows[0]["estimate"]) == 1.0


def test_json_format_matches_csv(tmp_path):
    argv = ["embed", "roots", "--M", "5"]
    rows_csv, _, _ = run_csv(tmp_path, argv)
    out = tmp_path / "roots.jsonl"
    assert cli.main(argv + ["--format", "json", "--out", str(out)]) == 0
    rows_json = [json.loads(line) for line in out.read_text().splitlines()]
    assert rows_json == rows_csv


def test_float_formatting(tmp_path):
    rows, _, _ = run_csv(tmp_path, ["embed", "roots", "--M", "2"])
    assert rows[0]["r_large"] == "8.53553390593e-01"


def test_exit_codes(tmp_path, capsys):
    # refusing an oversized exact computation is a usage-class failure
    assert cli.main(["embed", "exact", "--v", "0" * 13, "--M", "2"]) == 2
    assert "refused" in capsys.readouterr().err
    assert cli.main(["embed", "roots", "--M", "1"]) == 2
    with pytest.raises(SystemExit):
        cli.main(["embed", "nosuchop"])
    # a failed runtime self-check maps to 1
    def boom(argv=None):
        raise cli.PropertyViolation("forced")
    orig = cli.run
    cli.run = boom
    try:
        assert cli.main([]) == 1
    finally:
        cli.run = orig


def test_worker_count_does_not_change_bytes(tmp_path):
    argv = ["compat", "mc", "--p", "1/2", "--n", "30", "--replicas", "400",
            "--seed", "123"]
    outs = []
    for w, name in ((1, "a.csv"), (3, "b.csv")):
        out = tmp_path / name
        assert cli.main(argv + ["--workers", str(w), "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
