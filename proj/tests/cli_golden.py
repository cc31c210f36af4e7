"""Golden tests for the ncpbw executable: exit codes, schema, determinism, text/JSON agreement."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

EXE, FIXTURES, SCHEMA = sys.argv[1:4]
schema = json.load(open(SCHEMA))
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env={**os.environ, "LC_ALL": "de_DE.UTF-8"})
    return p.returncode, p.stdout, p.stderr


def check(ok, what):
    if not ok:
        failures.append(what)


def fixture(name):
    return os.path.join(FIXTURES, name)


# (fixture, command, extra args, exit code, expected fields)
GOLDEN = [
    ("weyl.alg", "pbw", ["--degree-bound", "6"], 0, {"verdict": "holds", "assoc_graded": ["x*y - y*x"]}),
    ("weyl.alg", "rees", ["--degree-bound", "6"], 0, {"elements": ["x*y - y*x - t*t"]}),
    ("weyl.alg", "nf", ["--element", "x*x*y"], 0, {"normal_form": "y*x*x + 2*x"}),
    ("sl2.alg", "hilbert", ["--degree-bound", "5"], 0, {"hilbert": [1, 3, 6, 10, 15, 21]}),
    ("sl2.alg", "pbw", ["--degree-bound", "6"], 0, {"verdict": "holds", "status": "complete"}),
    ("x2y.alg", "gb", ["--degree-bound", "6"], 0, {"elements": ["x*x - y", "x*y - y*x"], "status": "complete"}),
    ("x2y.alg", "pbw", ["--degree-bound", "6"], 0, {"verdict": "fails"}),
    ("x3y.alg", "koszul", [], 0, {"verdict": "inconclusive"}),
    ("quantum_plane.alg", "koszul", [], 0, {"verdict": "koszul-by-gb"}),
    ("path_ab.alg", "gr", [], 0, {"elements": ["a*b"]}),
    ("path_ab.alg", "hilbert", ["--degree-bound", "4"], 0, {"hilbert": [2, 2, 1, 0, 0]}),
    ("weyl.alg", "gb", ["--order-precedence", "y,x"], 0, {"elements": ["y*x - x*y + 1"]}),
]

for name, cmd, extra, code, fields in GOLDEN:
    tag = f"{cmd} {name} {' '.join(extra)}"
    rc, out, err = run(cmd, fixture(name), *extra)
    check(rc == code, f"{tag}: exit {rc}, expected {code}; {err}")
    report = json.loads(out)
    for k, v in fields.items():
        check(report.get(k) == v, f"{tag}: {k} = {report.get(k)!r}, expected {v!r}")

# Every fixture and command: schema, determinism, text agreement.
for name in sorted(os.listdir(FIXTURES)):
    for cmd in ["gb", "pbw", "gr", "rees", "hilbert", "koszul", "nf"]:
        tag = f"{cmd} {name}"
        extra = ["--element", "e1" if name.startswith("path") else "x*x"] if cmd == "nf" else []
        rc1, out1, _ = run(cmd, fixture(name), "--degree-bound", "6", *extra)
        rc2, out2, _ = run(cmd, fixture(name), "--degree-bound", "6", *extra)
        check(rc1 in (0, 2) and rc1 == rc2, f"{tag}: exit codes {rc1}, {rc2}")
        a, b = json.loads(out1), json.loads(out2)
        try:
            jsonschema.validate(a, schema)
        except jsonschema.ValidationError as e:
            failures.append(f"{tag}: schema: {e.message}")
        a.pop("timings"), b.pop("timings")
        check(json.dumps(a) == json.dumps(b), f"{tag}: nondeterministic report")
        rc3, text, _ = run(cmd, fixture(name), "--degree-bound", "6", "--output", "text", *extra)
        check(rc3 == rc1, f"{tag}: text exit {rc3} != {rc1}")
        check(f"status: {a['status']}\n" in text, f"{tag}: text status differs")
        if "verdict" in a:
            check(f"verdict: {a['verdict']}\n" in text, f"{tag}: text verdict differs")

# Undecided and error exits.
with tempfile.TemporaryDirectory() as tmp:
    def write(body):
        path = os.path.join(tmp, f"job{len(os.listdir(tmp))}.alg")
        with open(path, "w") as f:
            f.write('[algebra]\ntype = "free"\ngenerators = ["x", "y"]\n[relations]\n' + body)
        return path

    braid = write('f = "x*y*x - y*x*y"\n')
    rc, out, _ = run("pbw", braid, "--degree-bound", "6")
    check(rc == 2 and json.loads(out)["verdict"] == "undecided", f"braid pbw: exit {rc}")
    rc, out, _ = run("gb", braid, "--degree-bound", "6")
    check(rc == 2 and json.loads(out)["status"] == "truncated", f"braid gb: exit {rc}")
    rc, out, _ = run("gb", braid, "--degree-bound", "10", "--max-pairs", "2")
    check(rc == 2 and json.loads(out)["status"] == "resource_limit", f"braid budget: exit {rc}")
    rc, out, _ = run("hilbert", braid, "--degree-bound", "6")
    check(rc == 0, f"braid hilbert: exit {rc}")

    rc, _, err = run("gb", write('f = "x*y - y*x - h"\n'))
    check(rc == 1 and "line 5, column 18: unknown generator 'h'" in err, f"unknown generator: exit {rc}, {err!r}")
    rc, out, err = run("gb", braid, "--degree-bound", "2")
    check(rc == 1 and json.loads(out)["status"] == "error", f"bound below relation degree: exit {rc}")
    rc, out, _ = run("pbw", write('f = "x*y - 1"\ng = "y*x"\n'))
    check(rc == 1, f"unit ideal pbw: exit {rc}")
    rc, _, _ = run("gb", os.path.join(tmp, "missing.alg"))
    check(rc == 1, f"missing file: exit {rc}")
    rc, _, _ = run("gb", braid, "--output", "xml")
    check(rc == 1, f"bad output format: exit {rc}")
    rc, _, _ = run("nf", braid)
    check(rc == 1, f"nf without element: exit {rc}")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
