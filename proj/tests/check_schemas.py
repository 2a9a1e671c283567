#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Validate every JSON document kind the CLI emits against the shipped schemas.

usage: check_schemas.py <opial_lab executable> <schema directory>
"""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        jsonschema.Draft7Validator.check_schema(schema)
        resources.append((path.name, Resource.from_contents(schema)))
    return Registry().with_resources(resources)


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    registry = load_registry(schema_dir)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        cases = [
            (["constant", "--p", "2", "--n", "256"], None, "constant_report"),
            (["verify", "opial", "--samples", "20", "--format", "json"], None, "verify_summary"),
            (["verify", "meanzero", "--samples", "5", "--format", "json"], None, "verify_summary"),
            (["bounds", "--p", "3", "--L", "3.14159265"], None, "energy_bound"),
            (["extremal", "--p", "3", "--mu", "1", "--compare", "-o", str(tmp / "u.csv")],
             tmp / "u.json", "extremal_profile"),
        ]
        for args, sidecar, kind in cases:
            proc = subprocess.run([cli, *args], capture_output=True, text=True)
            text = sidecar.read_text() if sidecar else proc.stdout
            document = json.loads(text)
            schema = json.loads((schema_dir / f"{kind}.schema.json").read_text())
            validator = jsonschema.Draft7Validator(schema, registry=registry)
            errors = list(validator.iter_errors(document))
            status = "ok" if not errors else "INVALID"
            print(f"{status:8s} {kind:18s} {' '.join(args[:2])}")
            for error in errors:
                print(f"         {error.json_path}: {error.message}")
            failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
