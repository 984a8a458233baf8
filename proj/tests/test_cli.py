#!/usr/bin/env python3
"""End-to-end checks of the command-line interface."""

import json
import subprocess
import sys

CLI = sys.argv[1]


def run(*args, expect_ok=True):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if expect_ok and proc.returncode != 0:
        raise SystemExit(f"command {args} failed:\n{proc.stdout}\n{proc.stderr}")
    return proc


def main():
    out = run("core", "--lambda", "[4,4,4,2,1]", "--k", "5").stdout
    assert "core: [9,6,5,2,1]" in out, out
    assert "shifts: [5,2,1,0,0]" in out, out
    assert "rho: [5,2,1]" in out, out

    out = run("core", "--lambda", "[1]", "--k", "1").stdout
    assert "core: [1]" in out, out

    proc = run("core", "--lambda", "[3]", "--k", "2", expect_ok=False)
    assert proc.returncode != 0
    assert "not k-bounded" in proc.stderr, proc.stderr

    out = run("fill", "--lambda", "[4,4,4,2,1]", "--mu", "[3,3,3,3,3]", "--k", "5").stdout
    assert out.strip() == "[[1,1,1,2,3,4,4,5,5],[2,2,3,3,4,5],[3,4,4,5,5],[4,5],[5]]", out

    out = run("fill", "--lambda", "[2]", "--mu", "[2]", "--k", "2").stdout
    assert out.strip() == "[[1,1]]", out

    proc = run("fill", "--lambda", "[2,2]", "--mu", "[3,1]", "--k", "2", expect_ok=False)
    assert proc.returncode != 0
    assert "dominance" in proc.stderr and "prefix 1" in proc.stderr, proc.stderr

    out = run("fill", "--lambda", "[4,4,4,2,1]", "--mu", "[3,3,3,3,3]", "--k", "5",
              "--trace").stdout
    assert "after filling letter 5:" in out, out
    assert out.strip().endswith("[[1,1,1,2,3,4,4,5,5],[2,2,3,3,4,5],[3,4,4,5,5],[4,5],[5]]")

    payload = json.loads(run("expand", "affine-stanley", "--word", "2,1,0,2",
                             "--k", "2").stdout)
    assert payload["degree"] == 4
    assert payload["coeffs"] == {"[1,1,1,1]": 1, "[2,1,1]": 1, "[2,2]": 1}, payload

    payload = json.loads(run("expand", "schur", "--lambda", "[1]").stdout)
    assert payload["coeffs"] == {"[1]": 1}

    payload = json.loads(run("expand", "dual-k-schur", "--lambda", "[3,2,1,1]",
                             "--k", "3").stdout)
    assert payload["coeffs"]["[2,2,1,1,1]"] == 2, payload

    payload = json.loads(run("expand", "affine-stanley", "--word", "2,1,0,2", "--k", "2",
                             "--basis", "schur").stdout)
    assert payload["coeffs"] == {"[2,2]": 1, "[1,1,1,1]": -1}, payload

    payload = json.loads(run("expand", "schur", "--lambda", "[2,1]",
                             "--support", "3").stdout)
    assert payload["support_points"] == 7, payload

    csv = run("expand", "schur", "--lambda", "[2,1]", "--format", "csv").stdout
    assert "[2,1],1" in csv and "[1,1,1],2" in csv, csv

    payload = json.loads(run("expand", "cylindric", "--outer", "5,2:[5,4]",
                             "--inner", "5,2:[2,1]").stdout)
    assert payload["degree"] == 6
    assert payload["coeffs"]["[2,2,1,1]"] >= 1, payload

    # verify: deterministic output, exit codes, jsonl validity
    args = ("verify", "--checks", "rado", "--size", "1..4", "--n", "1..4")
    first = run(*args)
    second = run(*args)
    assert first.stdout == second.stdout, "verify output is not deterministic"
    for line in first.stdout.strip().splitlines():
        verdict = json.loads(line)
        assert verdict["result"] == "pass", verdict

    proc = run("verify", "--checks", "self-test-bad-support", expect_ok=False)
    assert proc.returncode != 0
    verdict = json.loads(proc.stdout.strip().splitlines()[-1])
    assert verdict["result"] == "fail"
    assert verdict["witness"]["alpha"] == [0, 2]
    assert verdict["witness"]["beta"] == [2, 0]

    proc = run("verify", "--checks", "support-equality", "--k", "2..2",
               "--size", "4..4", "--budget", "10", expect_ok=False)
    results = {json.loads(line)["result"] for line in proc.stdout.strip().splitlines()}
    assert "budget-exceeded" in results, proc.stdout

    # config file mirrors the flags
    import tempfile, os
    with tempfile.NamedTemporaryFile("w", suffix=".conf", delete=False) as f:
        f.write("checks = rado\nsize = 1..3\nn = 1..3\n")
        path = f.name
    try:
        from_config = run("verify", "--config", path)
        from_flags = run("verify", "--checks", "rado", "--size", "1..3", "--n", "1..3")
        assert from_config.stdout == from_flags.stdout
    finally:
        os.unlink(path)

    print("cli ok")


if __name__ == "__main__":
    main()
