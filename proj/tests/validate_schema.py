"""Validate CLI reports against docs/report-schema.json."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft7Validator.check_schema(schema)
    runs = [
        ["verify", "cyclic", "--d", "3", "--precision", "8"],
        ["verify", "q8", "--suite", "endotrivial"],
        ["verify", "gq", "--d", "4", "--suite", "lift", "--seed", "7"],
    ]
    for args in runs:
        out = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        if out.returncode != 0:
            print("unexpected exit", out.returncode, args)
            return 1
        jsonschema.validate(json.loads(out.stdout), schema)
        print("valid:", " ".join(args))
    doc = json.loads(out.stdout)
    doc["checks"][0]["status"] = "fail"
    doc["checks"][0].pop("witness", None)
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError:
        print("rejected: failure without witness")
    else:
        print("schema accepted a failure without witness")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
