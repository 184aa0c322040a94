#!/usr/bin/env python3
# Copyright 2026 The fqcert Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs the fqcert CLI, validates its JSON against schemas/ and checks reruns."""

import csv
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

FAILURES = []


def run(exe, args, expect=0):
    proc = subprocess.run([exe, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}: {proc.stderr.strip()}")
    return proc


def check(cond, what):
    if not cond:
        FAILURES.append(what)


def validate(schema_dir, name, doc):
    schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        FAILURES.append(f"{name}: {e.message} at {list(e.absolute_path)}")


def main():
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    tmp = pathlib.Path(tempfile.mkdtemp())
    sysfile = tmp / "conic.sys"
    sysfile.write_text("field 3\nnvars 3\npoly 1: 1:2,0,0 + 1:0,1,1\n")

    cases = [
        ("bounds", ["bounds", "--n", "3", "--s", "2", "--d", "2,1", "--q", "101"]),
        ("bounds", ["bounds", "--n", "4", "--s", "2", "--d", "3,2"]),
        ("test", ["test", "--system", str(sysfile)]),
        ("census", ["sample", "--n", "3", "--s", "2", "--d", "2,1", "--q", "5",
                    "--trials", "200", "--seed", "3", "--points", "--records"]),
        ("census", ["exhaustive", "--n", "2", "--s", "1", "--d", "2", "--q", "3"]),
        ("patterns", ["patterns", "--b", "12", "--n", "4", "--s", "3", "--q", "101"]),
        ("chow", ["chow", "--n", "3", "--s", "2", "--d", "3,2"]),
        ("oracle-check", ["oracle-check", "--trials", "20", "--seed", "5"]),
    ]
    for name, args in cases:
        proc = run(exe, args)
        if proc.returncode == 0:
            validate(schema_dir, name, json.loads(proc.stdout))

    # Usage errors.
    run(exe, ["bounds", "--n", "3", "--s", "2", "--d", "2"], expect=1)
    run(exe, ["sample", "--n", "3", "--s", "1", "--d", "2", "--q", "6", "--trials", "5"], expect=1)
    run(exe, ["test", "--system", str(tmp / "missing.sys")], expect=1)

    # Rerun determinism and file output.
    args = ["sample", "--n", "3", "--s", "2", "--d", "2,1", "--q", "7", "--trials", "500",
            "--seed", "11", "--omit-runtime"]
    a = run(exe, args + ["--jobs", "1"]).stdout
    b = run(exe, args + ["--jobs", "1"]).stdout
    c = run(exe, args + ["--jobs", "3"]).stdout
    check(a == b, "sample output differs between identical runs")
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "config"}
    check(strip(a) == strip(c), "sample output depends on --jobs")

    out = tmp / "out"
    run(exe, args + ["--out-dir", str(out)])
    jpath, cpath = out / "sample.json", out / "sample.csv"
    check(jpath.exists() and cpath.exists(), "--out-dir did not write sample.json and sample.csv")
    if jpath.exists() and cpath.exists():
        doc = json.loads(jpath.read_text())
        check(doc == json.loads(a), "written JSON differs from stdout")
        rows = list(csv.DictReader(cpath.open()))
        check([r["cert"] for r in rows] == list(doc["per_cert"]), "CSV rows do not follow JSON certs")
        for r in rows:
            t = doc["per_cert"][r["cert"]]
            check(int(r["count"]) == t["count"] and r["verdict"] == t["verdict"],
                  f"CSV row {r['cert']} disagrees with JSON")

    for f in FAILURES:
        print("FAIL:", f)
    print(f"{len(cases)} schema cases, {len(FAILURES)} failures")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
