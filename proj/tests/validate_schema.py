"""Runs the CLI on representative inputs and validates every JSON document against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path, encoding="utf-8"))
validator = jsonschema.Draft202012Validator(schema)

invocations = [
    ["fold", "--type", "E6", "--d", "2"],
    ["fold", "--type", "D4", "--d", "3"],
    ["reduce", "--type", "A3", "--d", "2", "--point", "3/2,-1/8,-3/16", "--point", "1/2,-1/4+1/3i,3/8-1/6i"],
    ["tables", "--type", "D4", "--d", "3"],
    ["tables", "--type", "E6", "--d", "2"],
    ["tables", "--family", "an-even", "--a", "0", "--b", "1", "--s", "2"],
    ["hecke", "--type", "E6", "--d", "2"],
    ["hecke", "--datum", "B2", "--lambda", "1,3", "--lambda-star", ",1", "--x", "1,0"],
    ["verify", "--suite", "table-d4-triality-iwahori"],
    ["dump", "--type", "A2", "--d", "2"],
]

failed = 0
for args in invocations:
    out = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
    if out.returncode != 0:
        print(f"FAIL {' '.join(args)}: exit {out.returncode}: {out.stderr.strip()}")
        failed += 1
        continue
    again = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
    if args[0] != "verify" and again.stdout != out.stdout:
        print(f"FAIL {' '.join(args)}: output differs between identical runs")
        failed += 1
    errors = sorted(validator.iter_errors(json.loads(out.stdout)), key=lambda e: list(e.path))
    for e in errors[:3]:
        print(f"FAIL {' '.join(args)}: {list(e.path)}: {e.message}")
    failed += bool(errors)
    if not errors:
        print(f"ok   {' '.join(args)}")
sys.exit(1 if failed else 0)
