"""Run the harness over a few ensembles and look at the tightest cases."""

import time

from blockradius import EnsembleSpec, Kind, run_checks, sharpness_probe, summarize
from blockradius.harness import records_to_csv

specs = [EnsembleSpec(Kind.GINIBRE, 3, 40, seed=7), EnsembleSpec(Kind.PSD, 2, 40, seed=7)]

t0 = time.perf_counter()
records = run_checks(specs, "all")
print(f"{len(records)} records in {time.perf_counter() - t0:.1f}s\n")

# smallest relative margins first; equalities show up with gaps near zero
for s in sorted(summarize(records), key=lambda s: s.min_gap)[:8]:
    print(f"{s.check_name:<22} {s.ensemble:<8} dim={s.dim} failures={s.failures} "
          f"min_gap={s.min_gap:+.2e} at sample {s.argmin_index}")

# the report is plain CSV
print()
print("\n".join(records_to_csv(records).splitlines()[:4]))

# sharpness: the designated equality case should have a gap at rounding level
print()
for name in ("th1_upper", "th2_upper", "th5_lower"):
    rec = sharpness_probe(name, EnsembleSpec(Kind.GINIBRE, 3, 20, seed=1))
    print(f"{name:<10} min gap over ensemble {rec.min_gap:.3e}, designated case {rec.designated_gap:+.1e}")
