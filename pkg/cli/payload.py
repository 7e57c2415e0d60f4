"""
JSON-Ausgaben der Befehle im Schema "aritygap/1".
"""

import json

SCHEMA = "aritygap/1"


def payload(command: str, **fields) -> dict:
    return {"schema": SCHEMA, "command": command, **fields}


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def certificate_payload(certificate) -> dict:
    return {
        "index": certificate.index,
        "k": certificate.k,
        "b": certificate.b,
        "n": certificate.n,
        "table": list(certificate.table),
        "details": certificate.details,
    }


def report_payload(command: str, report) -> dict:
    return payload(
        command,
        theorem=report.theorem.value,
        population=report.population,
        exhaustive=report.exhaustive,
        examined=report.examined,
        checked=report.checked,
        skipped=report.skipped,
        violations=[certificate_payload(c) for c in report.violations],
        witnesses=[certificate_payload(c) for c in report.witnesses],
        # JSON-Schlüssel sind Zeichenketten
        gap_histogram={str(gap): count for gap, count in report.gap_histogram.items()},
        notes=list(report.notes),
        elapsed=round(report.elapsed, 3),
    )
