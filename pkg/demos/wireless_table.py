"""Coverage probabilities that serve as arm means in the RAT-switching case.

Arm 0 is sub-6GHz, arm 1 is mm-wave. Blockage toggles the link between LOS
and NLOS, which flips which RAT is better. A quick system-level simulation
checks each quadrature value.

Run: python demos/wireless_table.py [trials]
"""
import sys

from tscd.config import DEFAULT_SCENARIO
from tscd.environment import rng_stream
from tscd.wireless import build_mean_table, coverage, mc_coverage, serving_pathloss

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 50_000
sc = DEFAULT_SCENARIO
table = build_mean_table(sc, check_los_gap=True)
radius = 50 * sc.los_radius

print(f"serving distance {sc.serving_distance} m, SINR threshold {sc.sinr_threshold}")
print(f"{'rat':>7s} {'state':>5s} {'coverage':>9s} {'cut at 50d':>10s} {'simulated':>10s}")
for (rat, vis), val in sorted(table.values.items()):
    p = sc.rat(rat)
    x = serving_pathloss(sc, rat, vis)
    cut = coverage(sc, rat, vis, x, upper=radius ** p.alpha_nlos / p.gain)
    mc, se = mc_coverage(sc, rat, x, trials, rng_stream(0, "demo", len(rat) + len(vis)))
    print(f"{rat:>7s} {vis:>5s} {val:9.4f} {cut:10.4f} {mc:10.4f} +- {se:.4f}")

print(f"\nLOS gap {table.gap('los'):.3f}, NLOS gap {table.gap('nlos'):.3f}, "
      f"smallest jump {table.delta_m:.3f}")
