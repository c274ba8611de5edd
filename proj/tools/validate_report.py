#!/usr/bin/env python3
"""Validate a gpmyc JSON report against docs/report.schema.json.

Also re-derives every verdict from expected/relation/computed and checks the
summary counts, so a report cannot claim PASS for a violated relation.
"""
import json
import operator
import sys

import jsonschema

RELATIONS = {"==": operator.eq, "<=": operator.le, ">=": operator.ge}


def main(schema_path, report_path):
    with open(schema_path) as f:
        schema = json.load(f)
    with open(report_path) as f:
        report = json.load(f)
    jsonschema.validate(report, schema)

    fails = 0
    for rec in report["records"]:
        holds = all(RELATIONS[rec["relation"]](v, rec["expected"]) for v in rec["computed"].values())
        if holds != (rec["verdict"] == "PASS"):
            print(f"verdict mismatch: {rec['theorem']} {rec['instance']}", file=sys.stderr)
            return 1
        fails += not holds
    summary = report["summary"]
    if summary["total"] != len(report["records"]) or summary["fail"] != fails or summary["pass"] + fails != summary["total"]:
        print("summary counts do not match the records", file=sys.stderr)
        return 1
    print(f"ok: {len(report['records'])} records")
    return 0


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit("usage: validate_report.py SCHEMA REPORT")
    sys.exit(main(sys.argv[1], sys.argv[2]))
