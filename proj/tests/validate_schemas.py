"""Runs theta-lab across every command and validates the JSON against docs/schemas."""

import copy
import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ["harmonics", "--n", "3", "--k", "1", "--dmax", "4", "--with-basis"],
    ["harmonics", "--n", "2", "--k", "2", "--dmax", "2"],
    ["harmonics", "--n", "6", "--k", "1", "--dmax", "2"],
    ["check", "spherical-harmonics", "--n", "3", "--dmax", "4"],
    ["check", "duality", "--n", "3", "--k", "2", "--dmax", "3"],
    ["check", "conservation", "--n", "3", "--size-max", "3"],
    ["check", "persistence", "--n", "3", "--lambda", "1,1,1"],
    ["check", "persistence", "--n", "2"],
    ["check", "stable-range", "--n", "3"],
    ["check", "relations", "--n", "2", "--k", "2", "--dmax", "3"],
    ["check", "gl-duality", "--m", "2", "--n", "2", "--d", "2"],
    ["check", "gl-duality", "--m", "2", "--n", "3", "--dmax", "3"],
    ["decompose", "--n", "4", "--k", "2", "--d", "2", "--space", "full", "--with-basis"],
    ["decompose", "--n", "2", "--k", "2", "--d", "3"],
    ["invariants", "--n", "4", "--k", "2", "--dmax", "4", "--with-basis"],
    ["occurrence", "--n", "3", "--lambda", "2,1"],
    ["occurrence", "--n", "2", "--lambda", ""],
    ["catalog"],
]


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads((schema_dir / "output.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    docs = []
    for args in RUNS:
        proc = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=str)
        if errors:
            print(f"FAIL schema: {' '.join(args)}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {' '.join(args)}")
        docs.append((args, doc))

        # the csv projection carries the same rows
        csv = subprocess.run([exe, *args, "--format", "csv"], capture_output=True, text=True, check=False)
        if csv.returncode != 0 or not csv.stdout.strip():
            print(f"FAIL csv: {' '.join(args)}")
            failures += 1

    # the schema has teeth
    _, harm = docs[0]
    broken = copy.deepcopy(harm)
    broken["result"]["degrees"][0]["decomposition"]["verdict"] = "maybe"
    bad_label = copy.deepcopy(docs[-1][1])
    bad_label["result"][0].pop("source")
    for tampered in (broken, bad_label, {"command": "check", "parameters": {}, "passed": True}):
        if validator.is_valid(tampered):
            print("FAIL tampered document accepted")
            failures += 1

    # usage errors produce no document and exit 2
    proc = subprocess.run([exe, "check", "duality", "--n", "9", "--k", "1"], capture_output=True, text=True, check=False)
    if proc.returncode != 2 or proc.stdout:
        print("FAIL unsupported rank did not exit 2 cleanly")
        failures += 1

    print(f"{len(RUNS)} runs, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
