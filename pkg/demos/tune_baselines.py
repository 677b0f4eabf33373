"""Grid search for the baseline parameters used in configs/fig5.toml.

Each baseline is scored by mean time-averaged regret over a few seeds of the
wireless scenario; the best point becomes the default in BaselineConfig.

Run: python demos/tune_baselines.py [n_seeds]
"""
import dataclasses
import sys
from itertools import product
from pathlib import Path

from tscd.config import load_config
from tscd.harness import tune_policy

root = Path(__file__).resolve().parents[1]
cfg = load_config(root / "configs" / "fig5.toml")
n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
cfg = dataclasses.replace(cfg, seeds=tuple(range(1000, 1000 + n)))

grids = {
    "ducb": [dict(discount=g, xi=x) for g, x in product((0.9, 0.96, 0.99), (3e-4, 0.01, 0.1))],
    "swucb": [dict(window=w, xi=x) for w, x in product((50, 100, 300), (0.01, 0.1))],
    "dts": [dict(discount=g) for g in (0.9, 0.95, 0.99, 0.999)],
    "rexp3": [dict(batch=b, gamma=g) for b, g in product((300, 1000, 3000), (0.05, 0.1, 0.2))],
    "phtucb": [dict(delta=d, lam=l) for d, l in product((0.01, 0.05), (0.5, 1.0, 3.0))],
}

for kind, grid in grids.items():
    ranked = tune_policy(cfg, kind, grid)
    best_mean, best_var, best = ranked[0]
    print(f"{kind:>7s} best {best} regret/T {best_mean:.4f} (var {best_var:.1e}); "
          f"worst {ranked[-1][0]:.4f}")
