"""
Alliance-free sets and covers
=============================

A cover meets every alliance; a free set contains none. Each is the
complement of the other, so the two numbers add up to n.
"""

from kalliance import AllianceSpec, compute, is_cover, is_free, max_free, min_cover, parse_gen

g = parse_gen("c8-chords")
print(g, g.degrees)

for k in range(-3, 4):
    spec = AllianceSpec.offensive(k)
    f, c = max_free(g, spec), min_cover(g, spec)
    print(f"k={k:+d}  {f.invariant}={f.value} {f.witness.sorted()}  {c.invariant}={c.value}  sum={f.value + c.value}")

# the set from the classic counterexample: a minimal cover whose complement
# leaves vertex 5 undominated
S = g.vertex_set([1, 2, 4, 5, 6])
print(is_cover(g, S, AllianceSpec.offensive(0)), is_free(g, S.complement(), AllianceSpec.offensive(0)))

# invariants can also be requested by name
grid = parse_gen("grid:3x4")
for name in ("phi_k", "zeta_k", "phi_k^go", "gamma_k^o"):
    print(name, compute(grid, name, 1).value)
