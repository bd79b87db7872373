"""Replay the three recorded worked examples against the library.

Each fixture stores the claims of one worked example: the Pell data, the
recurrence values, the coordinate memberships, the search counts. The
verifier recomputes everything and reports agreement plus any
discrepancies in the record as stated. Two of the three carry a known
discrepancy, kept on purpose; the checks pin down exactly what holds.

The CLI does the same thing: pellsum verify-remark --id 2.4 --n 100
"""

from pellsum import verify_remark

for remark_id, bound in (("2.3", 700), ("2.4", 100), ("2.5", 300)):
    report = verify_remark(remark_id, bound)
    print(f"example {report.remark_id} (search bound {report.bound}):")
    for check in report.checks:
        mark = "ok " if check.passed else "FAIL"
        print(f"  [{mark}] {check.name}")
        if not check.passed:
            print(f"         expected {check.expected}, computed {check.computed}")
    if report.discrepancies:
        print("  recorded-claim disputes:")
        for note in report.discrepancies:
            print(f"    - {note}")
    print(f"  agreement: {report.agreement}")
    print()
