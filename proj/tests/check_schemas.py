"""Validates the shipped problems, and reports produced by the tool for them, against docs/schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

root = pathlib.Path(sys.argv[2])
tool = sys.argv[1]
schemas = {name: json.loads((root / "docs/schema" / f"{name}.schema.json").read_text()) for name in ("problem", "report")}
for schema in schemas.values():
    jsonschema.Draft202012Validator.check_schema(schema)

checked = 0
for path in sorted((root / "problems").glob("*.json")):
    jsonschema.validate(json.loads(path.read_text()), schemas["problem"])
    for task in ("faces", "cayley", "smooth", "degrees", "expected-dim", "check", "count", "analyze"):
        out = subprocess.run([tool, task, "--input", str(path), "--format", "json"], capture_output=True, text=True)
        if out.returncode not in (0, 3):
            sys.exit(f"{path.name} {task}: exit {out.returncode}: {out.stderr}")
        jsonschema.validate(json.loads(out.stdout), schemas["report"])
        checked += 1
print(f"{checked} reports valid")
