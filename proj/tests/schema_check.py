"""Validates the CLI's JSON output against the schemas in schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli = sys.argv[1]
schemas = pathlib.Path(sys.argv[2])

RUNS = [
    ("analysis_report", ["analyze", "z^2*y'' + z*y' - y = 0", "--json"]),
    ("analysis_report", ["analyze", "y'' - z*y = 0", "--json"]),
    ("analysis_report", ["analyze", "z*(1-z)*y'' + (0.5 - 2*z)*y' - 0.1875*y = 0", "--json"]),
    ("bound_report", ["bound", "--json", "strip", "--lambda", "0", "--lambda", "1+2i", "--alpha", "1"]),
    ("bound_report", ["bound", "--json", "ky", "--lambda", "0", "--lambda", "i", "--diam", "6.283185307179586"]),
    ("bound_report", ["bound", "--json", "cover", "--lambda", "1", "--lambda", "-1", "--alpha", "0.5"]),
    ("bound_report", ["bound", "--json", "cover", "--lambda", "1", "--poly", "1+z", "--lambda", "-1", "--poly", "2", "--alpha", "0.5"]),
    ("bound_report", ["bound", "--json", "sector", "z^2*y'' + z*y' - y = 0", "--alpha", "0.5", "--beta", "-1"]),
    ("count_report", ["count", "--lambda", "i", "--poly", "-0.5*i", "--lambda", "-i", "--poly", "0.5*i", "--box", "-4", "4", "-1", "1", "--json"]),
    ("count_report", ["count", "--lambda", "1", "--lambda", "-1", "--box", "-1", "1", "-10", "10", "--subdivide", "4", "--json"]),
    ("verification_result", ["verify", "--seed", "7", "--cases", "5", "--json"]),
]

failed = 0
for schema_name, args in RUNS:
    schema = json.loads((schemas / f"{schema_name}.schema.json").read_text())
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    try:
        if proc.returncode != 0:
            raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
        jsonschema.validate(json.loads(proc.stdout), schema)
        print(f"ok    {schema_name}: {' '.join(args)}")
    except Exception as e:  # report and keep going
        failed += 1
        print(f"FAIL  {schema_name}: {' '.join(args)}\n      {e}")

sys.exit(1 if failed else 0)
