#!/usr/bin/env python3
"""End-to-end checks of the command line interface."""

import json
import subprocess
import sys
import tempfile
import os

CLI = sys.argv[1]
failures = 0


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)


def check(name, cond):
    global failures
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures += 1


# golden scalar emission
r = run("theorem1", "--type", "A", "--rank", "3", "--emit", "scalar")
check("theorem1 A3 golden line", r.returncode == 0 and r.stdout.strip() == "y^(4) - t1*y - t2*y' - t3*y''")

# roots dump
r = run("roots", "--type", "A", "--rank", "2")
doc = json.loads(r.stdout)
check("roots A2 has 3 positive roots", r.returncode == 0 and len(doc["positive_roots"]) == 3)
check("roots schema tag", doc["schema"] == "1")
r2 = run("roots", "--type", "A", "--rank", "2")
check("roots output is byte identical across runs", r.stdout == r2.stdout)

# basis dump
r = run("basis", "--type", "C", "--rank", "2")
doc = json.loads(r.stdout)
check("basis C2 dims", doc["n"] == 4 and len(doc["X_plus"]) == 4 and len(doc["H"]) == 2)

# verify: symplectic rank 2, identity rescaling
r = run("theorem1", "--type", "C", "--rank", "2", "--verify")
doc = json.loads(r.stdout)
check("theorem1 C2 verifies", doc["verified"] is True and doc["epsilon"] == ["1", "1"])
check("theorem1 C2 witness nonzero", doc["rank_witness_nonzero"] is True)

# odd orthogonal records its rescaling
r = run("theorem1", "--type", "B", "--rank", "2", "--verify")
doc = json.loads(r.stdout)
check("theorem1 B2 records eps=2", doc["verified"] is True and doc["epsilon"] == ["2", "2"])

# type D scalar emission is a domain error
r = run("theorem1", "--type", "D", "--rank", "3", "--emit", "scalar")
check("theorem1 D exits 1", r.returncode == 1)
r = run("theorem1", "--type", "D", "--rank", "3", "--emit", "matrix")
check("theorem1 D matrix emission works", r.returncode == 0 and "matrix" in json.loads(r.stdout))

# reduce: already-normal input comes back unchanged with an empty certificate
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "normal_already.json")
    with open(path, "w") as f:
        json.dump({"type": "A", "rank": 2, "field": "Ct",
                   "entries": [["0", "1", "0"], ["0", "0", "1"], ["t1", "t2", "0"]]}, f)
    r = run("reduce", "--input", path)
    doc = json.loads(r.stdout)
    check("reduce normal input certified", r.returncode == 0 and doc["certified"] is True)
    check("reduce normal input unchanged", doc["normal"][2][0] == "t1" and not doc["gauge"]["factors"])

    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        json.dump({"type": "A", "rank": 1, "field": "Cz",
                   "entries": [["1", "0"], ["0", "1"]]}, f)
    r = run("reduce", "--input", bad)
    check("reduce rejects non-members", r.returncode == 1)

    mixed = os.path.join(tmp, "mixed.json")
    with open(mixed, "w") as f:
        json.dump({"type": "A", "rank": 1, "field": "Cz",
                   "entries": [["0", "1"], ["t1", "0"]]}, f)
    r = run("reduce", "--input", mixed)
    check("reduce enforces the declared field", r.returncode == 1)

    # a Cartan-plus-negative input over C(z)
    work = os.path.join(tmp, "work.json")
    with open(work, "w") as f:
        json.dump({"type": "A", "rank": 2, "field": "Cz",
                   "entries": [["z", "1", "0"], ["z^2", "0", "1"], ["1 - z", "3", "-z"]]}, f)
    r = run("reduce", "--input", work)
    doc = json.loads(r.stdout)
    check("reduce certifies a generic input", r.returncode == 0 and doc["certified"] is True)
    check("reduce emits the specialization", len(doc["specialization"]) == 2)

    # the emitted normal form round-trips through the schema and is a fixed
    # point of the reduction
    again = os.path.join(tmp, "again.json")
    with open(again, "w") as f:
        json.dump({"type": "A", "rank": 2, "field": "Cz", "entries": doc["normal"]}, f)
    r = run("reduce", "--input", again)
    doc2 = json.loads(r.stdout)
    check("normal form is a reduction fixed point",
          r.returncode == 0 and doc2["normal"] == doc["normal"] and not doc2["gauge"]["factors"])

# specialization demo
r = run("mitschi-singer", "--type", "A", "--rank", "1", "--h", "1")
doc = json.loads(r.stdout)
check("mitschi-singer A1 certified", r.returncode == 0 and doc["certified"] is True)
check("mitschi-singer matrix", doc["matrix"] == [["z^2", "1"], ["1", "-z^2"]])
check("mitschi-singer t_map present", "t1" in doc["t_map"])

# unimodular chain demo
r = run("genericity-demo", "--rank", "1", "--f", "z^2", "--g", "1/z", "--a", "z+3,2/z")
doc = json.loads(r.stdout)
check("genericity-demo certified", r.returncode == 0 and doc["certified"] is True)
r = run("genericity-demo", "--rank", "1", "--f", "z^3", "--g", "1/z", "--a", "z,2/z")
check("genericity-demo guards preconditions", r.returncode == 1)

# selftest
r = run("selftest", "--max-rank", "2")
check("selftest passes", r.returncode == 0 and "PASS theorem-annihilators" in r.stdout)
r = run("selftest", "--max-rank", "2", "--inject-fault")
check("selftest fault injection fails the bracket suite",
      r.returncode == 1 and "FAIL bracket-relations" in r.stdout)

# usage errors
r = run()
check("empty invocation exits 2", r.returncode == 2)
r = run("roots", "--type", "A", "--rank", "2", "--bogus")
check("unknown flag exits 2", r.returncode == 2)
r = run("roots", "--type", "Q", "--rank", "2")
check("unknown type exits 1", r.returncode == 1)
r = run("reduce", "--input", "/nonexistent/file.json")
check("missing input exits 3", r.returncode == 3)

print("cli smoke:", "FAILED" if failures else "all passed")
sys.exit(1 if failures else 0)
