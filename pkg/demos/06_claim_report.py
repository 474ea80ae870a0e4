"""
Claim report
============

Every closed form is measured against its oracle.  This is the same
report the ``isocs verify`` command writes.
"""

from isocs.claims import CLAIMS, RunConfig, run_claims

reports = run_claims(None, RunConfig(workers=4))
for r in reports:
    print(f"{r.id:4s} {r.verdict:18s} {r.max_residual:10.3g}  {CLAIMS[r.id].title}")
