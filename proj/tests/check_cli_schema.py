"""Runs the CLI over a fixed set of commands and validates every document
against schema/report.json. Also checks exit codes and repeat determinism."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (["split", "--poly", "x^4+x^3+x^2+x+1", "--q", "11"], 0),
    (["split", "--poly", "x^3-2", "--q", "5"], 0),
    (["split", "--p", "7", "--q", "7"], 0),
    (["split", "--poly", "x^2", "--q", "7"], 1),
    (["divides", "--p", "3", "--q", "7", "--a", "2", "--elem", "[3,-5]"], 0),
    (["divides", "--p", "3", "--q", "5", "--elem", "[5,10]"], 0),
    (["member", "--p", "3", "--q", "7", "--a", "2", "--s", "2", "--elem", "[3,-5]"], 0),
    (["member", "--p", "3", "--q", "7", "--a", "2", "--s", "3", "--elem", "[3,-5]"], 0),
    (["valuation", "--p", "5", "--q", "11", "--a", "3", "--elem", "t-3"], 0),
    (["thm2-check", "--poly", "x^2+1", "--q", "5", "--a", "2", "--s", "2", "--elem", "[3,-4]"], 0),
    (["thm2-search", "--p", "3", "--q", "7", "--s", "2", "--trials", "100", "--seed", "1"], 0),
    (["thm2-search", "--p", "3", "--q", "7", "--s", "1"], 1),
    (["cyclo-norms", "--p", "5", "--x", "1", "--y", "-1", "--q", "11"], 0),
    (["cyclo-norms", "--p", "3"], 0),
    (["ramify", "--p", "5"], 0),
    (["lemma-trace", "--p", "3", "--q", "7", "--x", "1", "--y", "2", "--z", "14"], 0),
    (["lemma-trace", "--p", "3", "--q", "3", "--x", "1", "--y", "2", "--z", "3"], 0),
    (["lemma-trace", "--p", "5", "--q", "11", "--x", "2", "--y", "1", "--z", "33", "--assume-p-less-z"], 0),
    (["roots-count", "--p", "3", "--q", "7"], 0),
    (["roots-count", "--p", "7", "--q", "1000000007"], 0),
    (["roots-count", "--p", "3", "--q", "3"], 1),
    ([], 1),
    (["split", "--poly", "x^2+1", "--q", "not-a-number"], 1),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        validator = jsonschema.Draft202012Validator(json.load(fh))
    failures = 0
    for args, expected in CASES:
        first = subprocess.run([binary, *args], capture_output=True, text=True)
        second = subprocess.run([binary, *args], capture_output=True, text=True)
        label = " ".join(args) or "(no arguments)"
        problems = []
        if first.returncode != expected:
            problems.append(f"exit {first.returncode}, expected {expected}")
        if first.stdout != second.stdout:
            problems.append("output differs between runs")
        try:
            doc = json.loads(first.stdout)
            problems += [e.message for e in validator.iter_errors(doc)]
        except json.JSONDecodeError as exc:
            problems.append(f"not a single JSON document: {exc}")
        status = "ok" if not problems else "FAIL"
        print(f"{status}  {label}")
        for p in problems:
            print(f"      {p}")
        failures += bool(problems)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
