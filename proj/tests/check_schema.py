"""Run the CLI and validate its JSON output against a schema in schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main():
    schema_dir = pathlib.Path(sys.argv[1])
    schema_name, cli, args = sys.argv[2], sys.argv[3], sys.argv[4:]
    resources = []
    for path in schema_dir.glob("*.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    registry = Registry().with_resources(resources)
    schema = json.loads((schema_dir / schema_name).read_text())

    out = subprocess.run([cli, *args], capture_output=True, text=True, check=True).stdout
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = sorted(validator.iter_errors(json.loads(out)), key=lambda e: list(e.path))
    for e in errors:
        print(f"{list(e.path)}: {e.message}")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
