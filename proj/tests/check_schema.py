"""Validate the JSON output of every subcommand against docs/output.schema.json."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ["theta", "--R", "1", "--x", "0.4"],
    ["cfun", "--lambda", "0.8", "--level", "2"],
    ["lemma411", "--R", "1"],
    ["lemma421", "--R", "1"],
    ["poisson", "--alpha", "0.5"],
    ["density", "--R", "inf", "--r-scan", "0:5:11"],
    ["potential", "--R", "1", "--r-scan", "0.1:5:11"],
    ["invert", "--R", "inf", "--r", "1"],
    ["positivity", "--R-scan", "0.05:5:5:log"],
    ["geometry", "--profile", "gk"],
    ["spectrum", "--potential", "pt"],
    ["probe-qr", "--R", "1"],
    ["scatter", "--k", "1", "--depth", "3.75"],
    ["verify", "--suite", "geometry"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for args in CASES:
        proc = subprocess.run([cli, *args, "--output", "json"], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        doc = json.loads(proc.stdout)
        errors = list(validator.iter_errors(doc))
        width = len(doc.get("columns", []))
        ragged = [i for i, row in enumerate(doc.get("rows", [])) if len(row) != width]
        if errors or ragged or doc.get("command") != args[0]:
            print(f"FAIL {' '.join(args)}: {[e.message for e in errors]} ragged rows {ragged}")
            failed += 1
        else:
            print(f"ok   {' '.join(args)} ({len(doc['rows'])} rows)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
