# Copyright 2026 The mecoff Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates `mecoff solve` and `mecoff sweep` JSON against docs/*.schema.json."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def solve_json(binary, args):
    proc = subprocess.run([binary, "solve", *args], capture_output=True,
                          text=True, check=False)
    if proc.returncode not in (0, 2):
        sys.exit(f"solve {args} exited {proc.returncode}: {proc.stderr}")
    return proc.returncode, json.loads(proc.stdout[proc.stdout.index("\n{") + 1:])


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True)
    parser.add_argument("--source-dir", required=True, type=pathlib.Path)
    args = parser.parse_args()
    docs = args.source_dir / "docs"
    configs = args.source_dir / "configs"
    solve_schema = json.loads((docs / "solve_output.schema.json").read_text())
    sweep_schema = json.loads((docs / "sweep_output.schema.json").read_text())

    cases = [
        [f"--input={configs / 'scenario_k6.json'}"],
        [f"--input={configs / 'scenario_k6.json'}", "--tau=1"],
        [f"--input={configs / 'scenario_k1.json'}", "--force-n=1"],
    ]
    codes = []
    for case in cases:
        code, doc = solve_json(args.binary, case)
        codes.append(code)
        jsonschema.validate(doc, solve_schema)
    if codes != [0, 2, 0]:
        sys.exit(f"unexpected exit codes {codes}")

    with tempfile.TemporaryDirectory() as tmp:
        cfg = pathlib.Path(tmp) / "s.cfg"
        cfg.write_text("[scenario]\nK = 6\n[system]\ntau = 10\n"
                       "[sweep]\nparam = mean_B\nvalues = [1, 8]\n"
                       "trials = 20\n")
        subprocess.run([args.binary, "sweep", f"--config={cfg}",
                        f"--out={tmp}/out"], check=True,
                       stdout=subprocess.DEVNULL)
        doc = json.loads((pathlib.Path(tmp) / "out" / "sweep.json").read_text())
        jsonschema.validate(doc, sweep_schema)
        if not any(not row["feasible"] for row in doc["rows"]):
            sys.exit("expected at least one infeasible trial in the check sweep")
    print("solve and sweep output match the published schemas")


if __name__ == "__main__":
    main()
