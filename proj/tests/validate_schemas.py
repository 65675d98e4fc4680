"""Validate CLI JSON output against docs/schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

resources = []
schemas = {}
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    schemas[path.name] = doc
    resources.append((doc["$id"], Resource.from_contents(doc)))
    resources.append((path.name, Resource.from_contents(doc)))
registry = Registry().with_resources(resources)

tmp = pathlib.Path(tempfile.mkdtemp())
subprocess.run([binary, "construct", "--family", "gst", "--s", "2", "--t", "3", "--out", str(tmp / "g.sg")], check=True)

cases = [
    ("graph", ["construct", "--family", "h2", "--s", "2", "--t", "3"]),
    ("spectrum", ["spectrum", "--in", str(tmp / "g.sg")]),
    ("spectrum", ["spectrum", "--family", "unbal-c4", "--vector"]),
    ("check", ["check", "--family", "gst", "--s", "1", "--t", "4"]),
    ("check", ["check", "--family", "complete-pos", "--n", "5"]),
    ("canonical", ["canonical", "--in", str(tmp / "g.sg"), "--against", str(tmp / "g.sg")]),
    ("bounds", ["bounds", "--n", "9"]),
    ("bounds", ["bounds", "--in", str(tmp / "g.sg")]),
    ("search", ["search", "--n", "6", "--quiet"]),
    ("search", ["search", "--n", "6", "--objective", "max-rho", "--timing", "--quiet"]),
    ("search", ["search", "--n", "5", "--objective", "max-neg-edges", "--forbid", "c3-plus", "--allow-balanced", "--quiet"]),
    ("verify", ["verify", "--theorem", "t1_2_neg", "--n", "4..6", "--quiet"]),
    ("verify", ["verify", "--theorem", "l3_6_order", "--n", "7..9"]),
    ("properties", ["verify", "--theorem", "properties", "--count", "20"]),
]

failures = 0
for kind, args in cases:
    proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
    if proc.returncode != 0:
        print(f"FAIL {kind} {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    validator = jsonschema.Draft202012Validator(schemas[f"{kind}.schema.json"], registry=registry)
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    for e in errors:
        print(f"FAIL {kind} {' '.join(args)}: {e.json_path}: {e.message}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {kind} {' '.join(args)}")

sys.exit(1 if failures else 0)
