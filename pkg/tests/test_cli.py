"""Command-line interface: outputs, exit codes, checkpointing, CSV mirror."""

import csv
import json
import os

from galcount import cli


def run(argv, tmp_path, name="out.jsonl", extra=()):
    out = tmp_path / name
    code = cli.main([*argv, "--out", str(out), *extra])
    lines = []
    if out.exists():
        with open(out) as fh:
            lines = [json.loads(line) for line in fh if line.strip()]
    return code, lines


# ---------------------------------------------------------------------------
# count


def test_count_E2(tmp_path):
    code, objs = run(["count", "--n", "2", "--H", "1"], tmp_path)
    assert code == 0
    assert objs[0]["E"] == 4
    assert objs[0]["formatVersion"] == 1
    assert objs[0]["config"]["n"] == 2


def test_count_ladder_emits_fit(tmp_path):
    code, objs = run(["count", "--n", "2", "--H", "2,4,8"], tmp_path)
    assert code == 0
    kinds = [o["type"] for o in objs]
    assert kinds == ["ledger", "ledger", "ledger", "fit"]
    assert 0.5 <= objs[-1]["slope"] <= 1.5  # E_2(H) grows like H


def test_count_interval_degree6(tmp_path):
    code, objs = run(["count", "--n", "6", "--H", "1"], tmp_path)
    assert code == 0
    lo, hi = objs[0]["EInterval"]
    assert 0 <= lo <= hi


def test_count_budget_exit_2(tmp_path):
    assert cli.main(["count", "--n", "9", "--H", "10"]) == 2


def test_count_bad_ladder_exit_1(tmp_path):
    assert cli.main(["count", "--n", "3", "--H", "abc"]) == 1


def test_count_checkpoint_idempotent(tmp_path):
    ck = tmp_path / "ck"
    args = ["count", "--n", "3", "--H", "2", "--checkpoint", str(ck)]
    code, objs = run(args, tmp_path, "a.jsonl")
    assert code == 0 and objs[0]["slicesComputed"] == 5
    files = sorted(os.listdir(ck))
    assert len(files) == 5 and all(f.endswith(".json") for f in files)
    code, objs = run(args, tmp_path, "b.jsonl")
    assert code == 0 and objs[0]["slicesComputed"] == 0
    assert objs[0]["status"] == "up to date"


def test_count_checkpoint_matches_direct(tmp_path):
    ck = tmp_path / "ck"
    code, ck_objs = run(["count", "--n", "3", "--H", "2", "--checkpoint", str(ck)], tmp_path, "a.jsonl")
    code2, objs = run(["count", "--n", "3", "--H", "2"], tmp_path, "b.jsonl")
    assert code == code2 == 0
    for key in ("E", "total", "discZero", "reducible", "perGroup", "checksum"):
        assert ck_objs[0][key] == objs[0][key]


def test_count_parallel_ledger_bytes_identical(tmp_path):
    payloads = []
    for workers in ("1", "4"):
        _, objs = run(
            ["count", "--n", "3", "--H", "5", "--parallelism", workers],
            tmp_path,
            f"p{workers}.jsonl",
        )
        obj = {k: v for k, v in objs[0].items() if k != "config"}
        payloads.append(json.dumps(obj, sort_keys=True).encode())
    assert payloads[0] == payloads[1]


def test_csv_mirror(tmp_path):
    out = tmp_path / "o.jsonl"
    mirror = tmp_path / "o.csv"
    code = cli.main(["count", "--n", "2", "--H", "1", "--out", str(out), "--csv", str(mirror)])
    assert code == 0
    with open(mirror) as fh:
        rows = list(csv.DictReader(fh))
    assert rows and rows[0]["E"] == "4"


# ---------------------------------------------------------------------------
# group


def test_group_m11(tmp_path):
    code, objs = run(["group", "--name", "M11"], tmp_path)
    assert code == 0
    assert objs[0]["order"] == 7920 and objs[0]["ind"] == 4


def test_group_from_exact_table(tmp_path):
    code, objs = run(["group", "--name", "F20"], tmp_path)
    assert code == 0
    assert objs[0]["order"] == 20 and objs[0]["degree"] == 5


def test_group_wreath(tmp_path):
    code, objs = run(["group", "--wreath", "m=5,k=1,r=2"], tmp_path)
    assert code == 0
    assert objs[0]["degree"] == 25 and objs[0]["ind"] == 5 and objs[0]["primitive"]


def test_group_usage_errors(tmp_path):
    assert cli.main(["group"]) == 1
    assert cli.main(["group", "--name", "Nope"]) == 1
    assert cli.main(["group", "--wreath", "m=5"]) == 1


# ---------------------------------------------------------------------------
# fourier


def test_fourier_reports(tmp_path):
    code, objs = run(
        ["fourier", "--p", "3,5,7", "--n", "3", "--sigma", "1^2"], tmp_path
    )
    assert code == 0
    assert len(objs) == 3
    for o in objs:
        assert o["parsevalGap"] <= 1e-9
        assert o["trendBounded"]


def test_fourier_bad_sigma_exit_1(tmp_path):
    assert cli.main(["fourier", "--p", "5", "--n", "3", "--sigma", "0^9"]) == 1


# ---------------------------------------------------------------------------
# verify


def test_verify_fmky(tmp_path):
    code, objs = run(["verify", "fmky"], tmp_path)
    assert code == 0
    assert objs[0]["pass"] and objs[0]["violations"] == 0


def test_verify_unknown_suite(tmp_path):
    assert cli.main(["verify", "nosuch"]) == 1


# ---------------------------------------------------------------------------
# bound


def test_bound_cor18(tmp_path):
    code, objs = run(
        ["bound", "--n", "11", "--ind", "4", "--a", "5/2", "--u", "1/110"], tmp_path
    )
    assert code == 0
    assert abs(float(objs[0]["chosenExpDecimal"]) - 8.686) <= 5e-3


def test_bound_accepts_decimal_rational(tmp_path):
    code, objs = run(["bound", "--n", "11", "--ind", "4", "--a", "2.5", "--u", "1/110"], tmp_path)
    assert code == 0


def test_bound_bad_rational_exit_1(tmp_path):
    assert cli.main(["bound", "--n", "4", "--ind", "2", "--a", "x/y"]) == 1
