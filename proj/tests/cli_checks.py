"""Runs the toledo binary as a subprocess and validates its JSON output."""

import json
import subprocess
import sys

import jsonschema


def run(binary, args, env=None):
    return subprocess.run([binary, *args], capture_output=True, text=True, env=env)


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = []

    json_cases = [
        (["report", "--group", "su", "--p", "2", "--q", "3", "--vol", "100"], 0),
        (["report", "--group", "sp", "--n", "3"], 0),
        (["report", "--group", "su", "--p", "1", "--q", "1", "--vol", "1000"], 0),
        (["verify", "--group", "su", "--p", "2", "--q", "2", "--trials", "10", "--seed", "42"], 0),
        (["verify", "--group", "sp", "--n", "2", "--trials", "6"], 0),
        (["verify", "--group", "su", "--p", "1", "--q", "2", "--inject-fault", "sign-of-I"], 1),
        (["verify", "--group", "sp", "--n", "2", "--inject-fault", "drop-sqrt2"], 1),
        (["check-embedding", "--group", "sp", "--n", "4"], 0),
        (["check-embedding", "--group", "sp", "--n", "1", "--inject-fault", "drop-sqrt2"], 1),
        (["scan-degrees", "--group", "su", "--p", "1", "--q", "1", "--vol", "30"], 0),
        (["scan-degrees", "--group", "sp", "--n", "2", "--vol", "7/2", "--pi-bits", "128"], 0),
    ]
    for args, code in json_cases:
        r = run(binary, args)
        label = " ".join(args)
        if r.returncode != code:
            failures.append(f"{label}: exit {r.returncode}, expected {code}: {r.stderr.strip()}")
            continue
        try:
            validator.validate(json.loads(r.stdout))
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures.append(f"{label}: {e}")

    usage_cases = [
        ["report", "--group", "su", "--p", "0", "--q", "3"],
        ["report", "--group", "su", "--p", "1", "--q", "1", "--vol", "6.28"],
        ["check-embedding", "--group", "su", "--p", "1", "--q", "1"],
        ["bogus"],
    ]
    for args in usage_cases:
        r = run(binary, args)
        if r.returncode != 2:
            failures.append(f"{' '.join(args)}: exit {r.returncode}, expected 2")

    r = run(binary, ["report", "--group", "su", "--p", "2", "--q", "2", "--inject-fault", "sign-of-I"])
    try:
        err = json.loads(r.stderr)
        if r.returncode != 1 or err["error"]["stage"] != "admissibility":
            failures.append(f"report sign-of-I: unexpected {r.returncode} {r.stderr.strip()}")
    except (json.JSONDecodeError, KeyError):
        failures.append(f"report sign-of-I: stderr is not an error object: {r.stderr.strip()}")

    r = run(binary, ["report", "--group", "su", "--p", "1", "--q", "1"], env={"MW_PI_BITS": "3"})
    if r.returncode != 2:
        failures.append(f"MW_PI_BITS=3: exit {r.returncode}, expected 2")
    r = run(binary, ["report", "--group", "su", "--p", "1", "--q", "1"], env={"MW_PI_BITS": "256"})
    if r.returncode != 0 or json.loads(r.stdout)["inputs"]["pi_bits"] != 256:
        failures.append("MW_PI_BITS=256 not honored")

    for args in (["verify", "--group", "su", "--p", "3", "--q", "3", "--trials", "15", "--seed", "3"],
                 ["report", "--group", "sp", "--n", "4", "--vol", "12", "--seed", "11"]):
        a, b = run(binary, args), run(binary, args)
        if a.stdout != b.stdout or a.returncode != b.returncode:
            failures.append(f"{' '.join(args)}: runs differ")

    for f in failures:
        print("FAIL:", f)
    print(f"{len(json_cases) + len(usage_cases) + 5} checks, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
