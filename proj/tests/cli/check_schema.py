"""Validates database files against data/coincalc-db.schema.json."""

import json
import sys
from pathlib import Path

import jsonschema


def main():
    schema_path, *files = sys.argv[1:]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for f in files:
        text = Path(f).read_text()
        if not text.strip():
            continue  # an empty file is an empty database
        errors = list(validator.iter_errors(json.loads(text)))
        for e in errors:
            print(f"{f}: {'/'.join(map(str, e.path))}: {e.message}")
        failed += bool(errors)
        print(f"{'ok  ' if not errors else 'FAIL'} {f}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
