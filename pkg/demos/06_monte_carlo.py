"""Monte Carlo experiments: the summary table and a parameter sweep.

Everything upstream — the contact law, hop planning, the routing
strategies, the efficiency estimates — feeds two batch entry points:

* ``run_table1`` evaluates each preset constellation at two failure
  budgets and reports hop counts, interruption probabilities, and
  closed-form plus measured efficiencies side by side, and
* ``sweep`` varies one cell parameter (endpoint distance, altitude, or
  satellite count) across all four strategies and emits flat records
  ready for CSV/JSON serialization.

Trial counts here are kept small so the demo finishes in seconds; the
command-line interface defaults to 10^4 trials per cell.
"""

import tempfile
from pathlib import Path

from leoroute import (
    SweepSpec,
    run_table1,
    sweep,
    table1_rows,
    write_records_csv,
    write_records_json,
)

TRIALS = 200
SEED = 0

print(f"=== summary table ({TRIALS} trials per cell, seed {SEED})")
result = run_table1(trials=TRIALS, base_seed=SEED)
header = ["metric"] + [col.preset for col in result.columns]
widths = [max(len(h), 22) for h in header]
print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
for row in table1_rows(result):
    print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
print()

spec = SweepSpec(
    variable="distance_km",
    values=(4000.0, 8000.0, 12000.0),
    fixed={"n_sat": 800, "altitude_km": 500.0, "epsilon": 0.1, "d_max_km": 3000.0},
    trials=TRIALS,
    base_seed=SEED,
)
print(f"=== distance sweep ({TRIALS} trials per cell, seed {SEED})")
records = sweep(spec)
print(f"{'distance_km':>12}  {'strategy':<14}  {'latency_ms':>10}  "
      f"{'type2_rate':>10}  {'eff':>6}")
for rec in records:
    latency = "-" if rec.mean_latency_ms is None else f"{rec.mean_latency_ms:.3f}"
    eff = "-" if rec.eff_measured is None else f"{rec.eff_measured:.3f}"
    print(f"{rec.swept_value:>12.0f}  {rec.strategy:<14}  {latency:>10}  "
          f"{rec.type2_rate:>10.3f}  {eff:>6}")
print()

with tempfile.TemporaryDirectory() as tmp:
    csv_path = Path(tmp) / "sweep.csv"
    json_path = Path(tmp) / "sweep.json"
    write_records_csv(records, csv_path)
    write_records_json(records, json_path)
    lines = csv_path.read_text().splitlines()
    print(f"wrote {len(lines) - 1} CSV records; first two lines:")
    for line in lines[:2]:
        print(f"    {line}")
    print(f"JSON mirror is {json_path.stat().st_size} bytes")
