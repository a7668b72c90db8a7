"""Runs the CLI on a suite and validates its JSON against the shipped schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, *suites = sys.argv[1:]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    for suite in suites:
        run = subprocess.run([cli, "suite", suite, "--max-n", "8"], capture_output=True, text=True, check=False)
        if run.returncode == 1:
            print(f"{suite}: CLI failed\n{run.stderr}")
            return 1
        doc = json.loads(run.stdout)
        errors = sorted(validator.iter_errors(doc), key=str)
        if errors:
            for err in errors[:5]:
                print(f"{suite}: {err.message} at {list(err.absolute_path)}")
            return 1
        if doc["exit_code"] != run.returncode:
            print(f"{suite}: exit_code field {doc['exit_code']} but process returned {run.returncode}")
            return 1
        print(f"{suite}: valid ({len(doc['reports'][0]['cases'])} cases)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
