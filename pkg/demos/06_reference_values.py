"""Recompute the published reference values and compare within tolerance.

Equivalent to `enscoh reproduce`. Takes about a minute.

Run: python demos/06_reference_values.py
"""

from enscoh.reproduce import format_table, reproduce

rows = reproduce()
print(format_table(rows))
print(sum(r.passed for r in rows), "of", len(rows), "within tolerance")
