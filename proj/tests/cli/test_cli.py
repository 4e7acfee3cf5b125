"""End-to-end checks of the bofourier command line.

usage: test_cli.py <bofourier executable> <schemas dir>
"""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

EXE, SCHEMAS = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True)
    return p.returncode, p.stdout, p.stderr.decode()


def check(name, cond, info=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else "  " + info))
    if not cond:
        failures.append(name)


def schema(cmd):
    with open(os.path.join(SCHEMAS, cmd + ".schema.json")) as f:
        return json.load(f)


def validated(cmd, *args, expect_rc=0):
    rc, out, err = run(cmd, *args)
    check(f"{cmd} {' '.join(args)}: exit {expect_rc}", rc == expect_rc, f"got {rc}: {err}")
    doc = json.loads(out)
    try:
        jsonschema.validate(doc, schema(cmd))
        ok = True
        msg = ""
    except jsonschema.ValidationError as e:
        ok, msg = False, e.message
    check(f"{cmd} {' '.join(args)}: schema", ok, msg)
    check(f"{cmd} {' '.join(args)}: round trip", json.loads(json.dumps(doc)) == doc)
    return doc, out


def coeff_at(doc, exp):
    for t in doc["terms"]:
        if t["exp"] == exp:
            return int(t["coeff"])
    return 0


# coeff
doc, _ = validated("coeff", "--pos", "0", "--order", "12")
check("coeff pos=(0) terms", [(t["exp"], t["coeff"]) for t in doc["terms"]]
      == [("1", "1"), ("3", "-1"), ("6", "1"), ("10", "-1")], str(doc["terms"]))
s = doc["series"]
dense = {s["valuation"] + i: int(c) for i, c in enumerate(s["coeffs"]) if c != "0"}
check("coeff dense and sparse forms agree", dense == {8 * int(t["exp"]): int(t["coeff"]) for t in doc["terms"]})
doc, _ = validated("coeff", "--pos", "0", "--neg", "1", "--order", "12", "--method", "ct")
check("coeff mixed via constant term", [t["exp"] for t in doc["terms"]][:3] == ["1", "2", "6"], str(doc["terms"]))
doc, _ = validated("coeff", "--pos", "2,3,4,5", "--order", "900")
check("coeff pos=(2,3,4,5): table values before q^894",
      [coeff_at(doc, e) for e in ("43", "100", "153", "245", "538", "713")] == [2, -7, 18, -2, -81, 112])
check("coeff pos=(2,3,4,5): table coefficient of q^894 is -4", coeff_at(doc, "894") == -4,
      f"computed {coeff_at(doc, '894')}")
_, a = validated("coeff", "--pos", "5,4,3,2", "--order", "100")
_, b = validated("coeff", "--pos", "2,3,4,5", "--order", "100")
check("index order on the command line does not matter", a == b)

# malformed queries
rc, _, err = run("coeff", "--pos", "1", "--neg", "1")
check("collision rejected with exit 2", rc == 2, f"rc={rc}")
check("collision message names the predicate", "r_j != s_k" in err and "Collisions" in err, err)
for bad in (["--pos", "3,1,3"], ["--pos", "2,2"], ["--neg", "1,4,2"], ["--pos", "-1"], []):
    rc, _, _ = run("coeff", *bad)
    check(f"malformed {bad} exits 2", rc == 2, f"rc={rc}")
doc, _ = validated("coeff", "--pos", "0", "--neg", "0", "--order", "8", "--allow-collision")
check("allowed collision: paths agree", doc["paths_agree"] is True)
check("allowed collision: claim emitted as zero", doc["vanishing_claim"]["terms"] == [])
check("allowed collision: r=0 starts q^2 - q^4 - q^5",
      [(t["exp"], t["coeff"]) for t in doc["oracle"]["terms"]][:3] == [("2", "1"), ("4", "-1"), ("5", "-1")])

# oracle, determinism over shards
_, one = validated("oracle", "--pos", "3,1", "--neg", "2,0", "--order", "20", "--shards", "1")
_, four = validated("oracle", "--pos", "3,1", "--neg", "2,0", "--order", "20", "--shards", "4")
check("oracle output byte-identical for 1 and 4 shards", one == four)
_, again = validated("oracle", "--pos", "3,1", "--neg", "2,0", "--order", "20", "--shards", "1")
check("oracle output byte-identical across runs", one == again)
doc, _ = validated("oracle", "--pos", "2,0", "--neg", "1", "--order", "16", "--compare", "--shards", "3")
check("oracle --compare agrees", doc["agrees"] == {"ct_formula": True, "g_multisum": True})

# falsetheta
doc, _ = validated("falsetheta", "--pos", "0")
check("falsetheta pos=(0): P=-1, Q=1", doc["pair"] == {"P": [[0, "-1", "1"]], "Q": [[0, "1", "1"]]}, str(doc["pair"]))
check("falsetheta pos=(0): certified", doc["certificate"]["verified"] is True)
p, _ = validated("falsetheta", "--pos", "4,1", "--neg", "3,0", "--order", "200")
r, _ = validated("falsetheta", "--pos", "4,1", "--neg", "3,0", "--order", "200", "--pivot", "reversed")
check("falsetheta pivot rules give the same pair", p["pair"] == r["pair"])

# asym
doc, _ = validated("asym", "--pos", "0", "--neg", "1", "--K", "3", "--y", "0.1,0.05")
c = [(int(x["num"]), int(x["den"])) for x in doc["coefficients"]]
check("asym G: c_0 = 1/4, c_1 = 1/8", c[:2] == [(1, 4), (1, 8)], str(c))
d = [abs(float(x["difference"])) for x in doc["numeric"]]
check("asym G: difference shrinks with y", d[1] < d[0] / 8, str(d))

# scan
rc, out, _ = run("scan", "--pos", "1,0", "--scan-limit", "6")
lines = out.decode().splitlines()
check("scan defaults to csv", rc == 0 and lines[0] == "l,coefficient,partitions,ratio", lines[0] if lines else "")
check("scan csv rows", lines[5] == "4,1,5,0.8", lines[5] if len(lines) > 5 else "")
doc, _ = validated("scan", "--pos", "1,0", "--scan-limit", "50", "--format", "json")
check("scan json rows", len(doc["rows"]) == 51 and doc["n"] == 2)
doc, _ = validated("scan", "--pos", "0", "--neg", "1", "--scan-limit", "40", "--column", "normalized", "--format", "json")
check("scan G kind", doc["kind"] == "G")

# --out writes exactly what stdout would carry
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "x.json")
    rc, out, _ = run("coeff", "--pos", "1", "--order", "30", "--out", path)
    with open(path, "rb") as f:
        written = f.read()
    _, direct, _ = run("coeff", "--pos", "1", "--order", "30")
    check("--out matches stdout payload", rc == 0 and out == b"" and written == direct)

# verify and examples report honestly; their exit status tracks their content
rc, out, _ = run("verify", "--format", "json")
doc = json.loads(out)
jsonschema.validate(doc, schema("verify"))
check("verify: exit status matches pass flag", (rc == 0) == doc["passed"])
check("verify: properties all pass", all(r["passed"] for r in doc["results"] if r["id"] > 100))
rc, out, _ = run("examples", "--format", "json")
doc = json.loads(out)
jsonschema.validate(doc, schema("examples"))
check("examples: exit status matches differences", (rc == 0) == (doc["differences"] == 0))
check("examples: difference count consistent",
      doc["differences"] == sum(1 for e in doc["examples"] if not e["match"]))

print(f"{len(failures)} failing check(s)")
sys.exit(1 if failures else 0)
