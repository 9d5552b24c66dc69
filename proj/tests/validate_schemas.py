"""Runs the CLI with --format json over a set of subcommands and validates
each document against schemas/<kind>.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ["tables"],
    ["--p", "3", "--degree", "1", "tables"],
    ["--p", "7", "--degree", "1", "tables"],
    ["census"],
    ["chsh"],
    ["chsh", "--scan"],
    ["chsh", "--state", "T", "--axes", "1,3,3,1"],
    ["chsh", "--bound"],
    ["groups"],
    ["groups", "--classes"],
    ["groups", "--iso"],
    ["groups", "--iso", "--reference"],
    ["--p", "7", "--degree", "1", "groups", "--iso"],
    ["orbits"],
    ["orbits", "--mode", "global", "--size", "24"],
    ["infer"],
    ["infer", "--state", "U"],
    ["infer", "--state", "S", "--marginals"],
    ["infer", "--state", "T", "--observable", "1,1", "--marginals"],
    ["mimic"],
    ["mimic", "--state", "T"],
    ["--p", "3", "--degree", "1", "mimic"],
    ["mimic", "--state", "U", "--axes-per-side", "3", "--marginals"],
    ["canonical", "--table4"],
    ["canonical", "--correspondence"],
    ["verify-phi", "--p", "7"],
    ["--seed-check"],
]


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for args in RUNS:
        cmd = [cli, "--format", "json", *args]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        schema = json.loads((schema_dir / f"{doc['kind']}.json").read_text())
        try:
            jsonschema.validate(doc, schema)
            print(f"ok   {label} ({doc['kind']})")
        except jsonschema.ValidationError as e:
            print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
