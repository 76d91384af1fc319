"""Exit codes, stderr diagnostics and byte-for-byte determinism of the rtcalc CLI."""
import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.update(env or {})
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=e)


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def expect_exit(args, code, env=None):
    p = run(*args, env=env)
    check(p.returncode == code, f"{' '.join(args)}: exit {p.returncode}, expected {code}")
    if code != 0 and code != 1:
        try:
            json.loads(p.stderr.strip().splitlines()[-1])
        except (ValueError, IndexError):
            check(False, f"{' '.join(args)}: stderr is not JSON: {p.stderr!r}")
    return p


p = expect_exit(["eval", "--catalog", "trefoil", "--r", "2", "--alpha", "0.4", "--eta", "0.3"], 0)
out = json.loads(p.stdout)
check(set(["value", "eta", "cut", "residual", "r"]) <= set(out), "eval json keys")
check(out["residual"] < 1e-7, "trefoil residual")
check(out["r"] == 2 and out["eta"] == [0.3, 0.0], "eval echoes r and eta")
check(run("eval", "--catalog", "trefoil", "--r", "2", "--alpha", "0.4", "--eta", "0.3").stdout == p.stdout,
      "eval output is deterministic")

h = [json.loads(expect_exit(["eval", "--catalog", "hopf", "--r", "2", "--alpha", "0.4", "--beta", "1.7",
                             "--eta", "0.3", "--cut", c], 0).stdout)["value"] for c in ("0", "1")]
check(abs(complex(*h[0]) - complex(*h[1])) < 1e-8 * max(1, abs(complex(*h[0]))), "hopf cuts agree")

expect_exit(["eval", "--catalog", "unknot", "--r", "3", "--alpha", "0.4", "--eta", "0.3", "--out", "text"], 0)
expect_exit(["eval", "--catalog", "unknot", "--r", "3", "--alpha", "0.4", "--out", "csv"], 0)

# domain and usage errors
expect_exit(["eval", "--catalog", "trefoil", "--r", "2", "--alpha", "2"], 2)
expect_exit(["eval", "--catalog", "trefoil", "--r", "2", "--alpha", "0.4", "--eta", "1"], 2)
expect_exit(["eval", "--catalog", "nope", "--alpha", "0.4"], 2)
expect_exit(["eval", "--catalog", "trefoil", "--alpha", "zz"], 2)
expect_exit(["eval", "--alpha", "0.4"], 2)
expect_exit(["eval", "--catalog", "hopf", "--alpha", "0.4", "--cut", "7"], 2)
expect_exit(["eval", "--catalog", "trefoil", "--alpha", "0.4", "--out", "xml"], 2)
expect_exit(["verify", "--r", "1"], 2)
expect_exit(["bogus"], 2)
expect_exit(["eval", "--catalog", "trefoil", "--r", "6", "--alpha", "0.4"], 2, env={"RTCALC_MAX_R": "5"})
# residual failure
expect_exit(["eval", "--catalog", "trefoil", "--r", "3", "--alpha", "0.4", "--tol", "1e-300"], 3)

with tempfile.TemporaryDirectory() as tmp:
    braid = os.path.join(tmp, "hopf.json")
    with open(braid, "w") as f:
        json.dump({"r": 2, "braid": [1, 1], "strands": 2, "cut": 1,
                   "colors": [{"id": "x", "kind": "verma", "alpha": [0.4, 0]},
                              {"id": "y", "kind": "verma", "alpha": [1.7, 0]}]}, f)
    out = json.loads(expect_exit(["eval", "--file", braid, "--eta", "0.3"], 0).stdout)
    check(out["cut"] == "y", "cut read from the file")
    check(abs(complex(*out["value"]) - complex(*h[0])) < 1e-8 * max(1, abs(complex(*h[0]))), "file matches catalog")
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        f.write('{"r":2,"colors":[{"id":"a","kind":"verma","alpha":[0.4,0]}],'
                '"bottom":[["a","up"],["a","up"]],"slices":[[{"op":"capL"}]]}')
    p = expect_exit(["eval", "--file", bad], 2)
    check("orientation mismatch" in p.stderr, "typing error reported")
    expect_exit(["eval", "--file", os.path.join(tmp, "missing.json")], 2)

p = expect_exit(["sweep", "--catalog", "trefoil", "--r", "2", "--alpha-grid", "0.1:0.9:0.1", "--out", "csv"], 0)
rows = p.stdout.strip().splitlines()
check(len(rows) == 10, f"sweep has 9 rows plus a header, got {len(rows)}")
p = expect_exit(["sweep", "--catalog", "trefoil", "--r", "2", "--alpha-grid", "0.5,1,1.5", "--out", "json"], 0)
status = [row["status"] for row in json.loads(p.stdout)]
check(status == ["ok", "guarded", "ok"], f"guarded row, got {status}")
expect_exit(["sweep", "--catalog", "trefoil", "--r", "2", "--alpha-grid", "1,2"], 2)

p = expect_exit(["sweep", "--catalog", "figure8", "--r", "3", "--alpha-grid", "0.2,0.45",
                 "--eta-grid", "0.3,0.71", "--out", "json"], 0)
rows = json.loads(p.stdout)
ratios = [complex(*rows[i]["value"]) / complex(*rows[i + 1]["value"]) for i in (0, 2)]
check(abs(ratios[0] - ratios[1]) < 1e-9 * abs(ratios[0]), "eta ratio is constant across alpha")

p = expect_exit(["verify", "--r", "2", "--seed", "7"], 0)
check(p.stdout == run("verify", "--r", "2", "--seed", "7").stdout, "verify output is deterministic")
report = json.loads(expect_exit(["verify", "--r", "2", "--out", "json"], 0).stdout)
check(report["passed"] and len(report["suites"]) >= 14, "verify json report")

print("cli smoke:", "ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
