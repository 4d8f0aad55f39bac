"""Run the CLI with --format json and validate every document against the shipped schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

binary = str(Path(sys.argv[1]).resolve())
data, schema_path = Path(sys.argv[2]).resolve(), Path(sys.argv[3]).resolve()
graphs = data / "graphs"
schema = json.loads(schema_path.read_text())
validator = jsonschema.Draft202012Validator(schema)

work = Path(tempfile.mkdtemp())
cases = [
    (["bounds", "3", "11", "17"], 0),
    (["bounds", "4", "5", "--all-s"], 0),
    (["bounds", "--table", "4"], 0),
    (["search", "3", "5", "4", "--deterministic", "--witness", str(work / "w.mpole")], 0),
    (["search", "3", "9", "0", "--budget", "100"], 3),
    (["cc", str(graphs / "petersen.g6")], 0),
    (["cc", str(graphs / "k4.g6")], 0),
    (["cc", str(graphs / "heawood.g6"), "--all-min-cuts"], 0),
    (["verify-cage", str(graphs / "mcgee.g6"), "3", "7"], 0),
    (["construct", str(graphs / "mcgee.g6"), "3", "7", "7", "--output", str(work / "h.mpole")], 0),
    (["tables", "--which", "1"], 0),
    (["tables", "--which", "3"], 0),
]

failures = 0
for args, code in cases:
    run = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True, cwd=work)
    label = " ".join(args)
    if run.returncode != code:
        print(f"FAIL {label}: exit {run.returncode}, expected {code}\n{run.stderr}")
        failures += 1
        continue
    try:
        validator.validate(json.loads(run.stdout))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"FAIL {label}: {e}")
        failures += 1
        continue
    print(f"ok   {label}")

# Byte-identical output for repeated and multi-worker runs.
for args in (["search", "3", "6", "4"], ["cc", str(graphs / "heawood.g6"), "--all-min-cuts"]):
    outs = set()
    for workers in ("1", "1", "2", "4"):
        run = subprocess.run([binary, *args, "--workers", workers, "--deterministic", "--format", "json"],
                             capture_output=True, cwd=work)
        outs.add(run.stdout)
    if len(outs) != 1:
        print(f"FAIL determinism {' '.join(args)}")
        failures += 1
    else:
        print(f"ok   determinism {' '.join(args)}")

sys.exit(1 if failures else 0)
