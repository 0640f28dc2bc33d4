#!/usr/bin/env python3
# Copyright 2026 The Corn Authors.
#
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
"""Runs the /v1 protocol conformance vectors against a live server.

The server's current state (model loaded or not, from GET /v1/health)
selects which cases apply.
"""

import argparse
import json
import sys
import urllib.error
import urllib.request


def request(base, method, path, body):
    req = urllib.request.Request(base + path, data=body, method=method,
                                 headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req, timeout=30) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.read()


def check(case, status, body):
    problems = []
    if status != case["status"]:
        problems.append(f"status {status}, want {case['status']}")
        return problems
    if "predictions" in case:
        preds = json.loads(body)["predictions"]
        if len(preds) != case["predictions"]:
            problems.append(f"{len(preds)} predictions, want {case['predictions']}")
        for p in preds:
            values = [p["entailment"], p["neutral"], p["contradiction"]]
            if any(v < 0 or v > 1 for v in values) or abs(sum(values) - 1) > 1e-6:
                problems.append(f"not a distribution: {p}")
    if "health_status" in case and json.loads(body).get("status") != case["health_status"]:
        problems.append(f"health status {json.loads(body).get('status')!r}")
    return problems


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("url", help="server base URL, e.g. http://127.0.0.1:8080")
    parser.add_argument("--vectors", default="tests/data/backend/conformance.json")
    args = parser.parse_args()
    base = args.url.rstrip("/")

    with open(args.vectors, encoding="utf-8") as f:
        cases = json.load(f)["cases"]
    loaded = request(base, "GET", "/v1/health", None)[0] == 200

    failures = 0
    ran = 0
    for case in cases:
        if case["model_loaded"] != loaded:
            continue
        ran += 1
        if "raw_body" in case:
            body = case["raw_body"].encode()
        elif "body" in case:
            body = json.dumps(case["body"]).encode()
        else:
            body = None
        status, reply = request(base, case["method"], case["path"], body)
        problems = check(case, status, reply)
        failures += bool(problems)
        print(("FAIL " if problems else "PASS ") + case["name"]
              + ("" if not problems else ": " + "; ".join(problems)))
    print(f"{ran - failures}/{ran} cases passed (model loaded: {loaded})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
