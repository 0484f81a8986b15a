"""
Redundancy in G(n, p)
=====================

Sample random graphs across p, compare with the closed-form curves and
the threshold scale L = ln(n)/n.
"""

import numpy as np

from redgraph import gnp

n = 100
th = gnp.thresholds(n)
print(f"n={n}  L={th.L:.4f}  weak from {th.weak_p:.4f} to {th.weak_end_p:.4f}, strong beyond {th.strong_p:.4f}")

grid = np.linspace(th.L, 2 * th.strong_p, 10)
rows = gnp.gnp_scan(n, grid, 200, seed=1)
curves = gnp.formula_curves(n, grid)

print(f"{'p':>6} {'conn':>5} {'diam':>5} {'red':>6} {'weak':>5} {'strong':>6} {'formula':>7}")
for r, c in zip(rows, curves):
    print(
        f"{r.p:6.3f} {r.p_connected:5.2f} {r.mean_diameter:5.2f} {r.mean_redundant_count:6.1f}"
        f" {r.p_weak:5.2f} {r.p_strong:6.2f} {c['p_strong_est']:7.2f}"
    )

# Where does the diameter-2 probability reach one half?
for m in (100, 1000):
    x = gnp.crossing(lambda p: gnp.p_diam_le2(m, p), 1e-4, 0.9)
    print(f"n={m}: P(diam <= 2) = 1/2 at p = {x:.4f} (sqrt(2L) = {gnp.thresholds(m).diam2_p:.4f})")
