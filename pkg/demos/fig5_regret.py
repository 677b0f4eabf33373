"""Time-averaged regret of TS-CD and the baselines on the wireless scenario.

Run: python demos/fig5_regret.py [n_seeds]

With the default 50 seeds this takes about a minute and a half on one core.
The CSVs land in runs/fig5_demo; `tscd run --manifest runs/fig5_demo`
repeats the run byte for byte.
"""
import dataclasses
import sys
from pathlib import Path

from tscd import harness
from tscd.config import load_config

root = Path(__file__).resolve().parents[1]
cfg = load_config(root / "configs" / "fig5.toml")
n = int(sys.argv[1]) if len(sys.argv) > 1 else len(cfg.seeds)
cfg = dataclasses.replace(cfg, seeds=cfg.seeds[:n], output_dir=str(root / "runs" / "fig5_demo"))

records = harness.run_experiment(cfg)
summary = harness.regret_summary(records)
detect = harness.detection_metrics(records)

print(f"{n} seeds, horizon {cfg.horizon}")
print(f"{'policy':>8s} {'regret/T':>9s} {'variance':>9s} {'median delay':>12s} {'alarms/step':>11s}")
for name, s in sorted(summary.items(), key=lambda kv: kv[1]["mean"]):
    d = detect[name]
    delay = f"{d.median_delay:g}" if d.delays else "-"
    print(f"{name:>8s} {s['mean']:9.5f} {s['var']:9.2e} {delay:>12s} {d.false_alarm_rate:11.2e}")

# the regret trajectory of one seed, coarsely
rec = next(r for r in records if r.policy == "TS-CD")
print("\nTS-CD cumulative regret, seed", rec.seed)
for step, reg in rec.trajectory[:: len(rec.trajectory) // 10]:
    print(f"  {step:>7d} {reg:8.2f}")
