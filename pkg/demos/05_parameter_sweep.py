"""Certificate sweep over a parameter grid, written to CSV.

Builds a sweep spec programmatically, runs it through the same machinery the
``quditshare sweep`` command uses, and summarizes the verdict landscape.
Grid points violating the strict-parameter rules (here: the diagonal, where
all x_i coincide) come back flagged 'skipped'.

Run:  python demos/05_parameter_sweep.py
"""

import collections
import tempfile
from pathlib import Path

from quditshare.cli import SweepSpec, parse_sweep_spec, run_sweep

spec = parse_sweep_spec(
    {
        "d": 3,
        "axes": {
            "x1": {"start": 0.1, "stop": 0.9, "steps": 9},
            "x2": {"start": 0.1, "stop": 0.9, "steps": 9},
        },
        "format": "csv",
    }
)
assert isinstance(spec, SweepSpec)

rows = run_sweep(spec, restarts=8, seed=0)
counts = collections.Counter(r["status"] for r in rows)
print(f"grid points: {len(rows)}  ok: {counts['ok']}  skipped: {counts['skipped']}")

verdict_true = sum(1 for r in rows if r["status"] == "ok" and r["verdict_ceiling"])
print(f"verdict_ceiling true on {verdict_true}/{counts['ok']} strict points")

print("\nsmallest strictness gaps on the grid:")
strict = sorted((r for r in rows if r["status"] == "ok"), key=lambda r: r["gap"])
for r in strict[:5]:
    print(f"  x=({r['x1']:.2f}, {r['x2']:.2f})  gap={r['gap']:.4f}  "
          f"lambda_max={r['lambda_max']:.6f}  ceiling={r['fstar_bound']:.6f}")

out = Path(tempfile.gettempdir()) / "quditshare_sweep_demo.csv"
from quditshare.cli import _rows_to_csv

out.write_text(_rows_to_csv(rows))
print(f"\nfull table written to {out}")
print("equivalent CLI run: quditshare sweep SPEC.json --restarts 8")
