"""
Laplacian spectrum and bounds
=============================

Compare each bound with the exact value on a handful of graphs.
"""

import numpy as np

from kalliance import closed_form_Kn, evaluate_all, generate, laplacian_spectrum, parse_gen

for text in ("complete:6", "cycle:6", "star:6", "grid:2x4"):
    s = laplacian_spectrum(parse_gen(text))
    print(f"{text:10s} mu={s.mu:.4f} mu*={s.mu_star:.4f} spectrum={np.round(s.eigenvalues, 3)}")

g = parse_gen("gnp:8,0.5,3")
rows = evaluate_all(g, range(0, g.Delta + 1))
for e in rows:
    b = round(e.bound_value, 3) if isinstance(e.bound_value, float) else e.bound_value
    print(f"k={e.inputs.k} {e.bound_id:9s} {e.invariant:10s} bound={b!s:>6} exact={e.exact_value} {e.status.value}")

# on complete graphs the spectral bound for phi_k is exact
k7 = generate("complete", 7)
for e in evaluate_all(k7, [0, 2, 4], ["B3-lower"]):
    print(e.inputs.k, e.bound_value, e.exact_value, closed_form_Kn(7, e.inputs.k, "phi_k"))
