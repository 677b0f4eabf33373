"""Turn error budgets into TS-CD parameters and look at how they move.

Run: python demos/design_walkthrough.py
"""
import math

from tscd.theory import (TheoryInputs, compute_lambda_bound, compute_regret_bound, compute_t_n,
                         design)

base = TheoryInputs(delta_mu=0.3, delta_m=0.3, sigma=0.1, epsilon=0.01, p_loc=0.01,
                    p_change=0.01, p_f=0.01, p_m=0.01, lambda_c=5e-4)

d = design(base)
print("Design for the base budgets")
print(f"  stationary phase T_N      {d.t_n:10.1f}  (play {d.t_n_steps} steps)")
print(f"  test window n_T           {d.n_t_proof:10.2f}  (use {d.n_t_samples} samples)")
print(f"  estimate window N         {d.est_window:10d}")
print(f"  threshold Delta_C         {d.delta_c:10.4f}")
print(f"  largest safe change rate  {d.lambda_max:10.2e}  (configured {base.lambda_c:g})")

# The stationary phase needed for a well-localized estimate dwarfs the mean
# dwell time 1/lambda here; that is why the experiment config pins t_n.
print(f"  mean dwell time           {1 / base.lambda_c:10.0f}")

print("\nT_N against the localization budget")
for p in (1e-4, 1e-3, 1e-2, 1e-1, 0.5):
    r = compute_t_n(base.replace(p_loc=p))
    print(f"  p_loc={p:<7g} T_N={r.t_n_numeric:10.1f}")

print("\nlambda_max against the change budget")
for p in (1e-3, 1e-2, 1e-1):
    inp = base.replace(p_change=p)
    print(f"  p_change={p:<6g} lambda_max={compute_lambda_bound(inp, d.t_n, d.n_t_proof):.3e}")

print("\nTime-averaged regret bound: grows while changes are rare, then decays")
for horizon in (1e2, 1e4, 1e6, 1e8):
    b = compute_regret_bound(base, d.t_n, d.n_t_proof, horizon)
    print(f"  T={horizon:8.0e}  bound/T={b.time_averaged:.3e}")
print(f"\n(p_tot = {(1 - base.p_loc) * (1 - base.p_change) * (1 - base.p_m):.4f}; "
      f"e^-1 = {math.exp(-1):.4f})")
