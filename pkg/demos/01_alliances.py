"""
Alliances on small graphs
=========================

Build a few graphs, test candidate sets, and ask the solver for the
smallest alliance of each family.
"""

from kalliance import AllianceSpec, generate, is_alliance, min_alliance, parse_gen

k5 = generate("complete", 5)
spec = AllianceSpec.defensive(1)

# four vertices of K_5: each has 3 neighbours inside and 1 outside
print(is_alliance(k5, k5.vertex_set([0, 1, 2, 3]), spec))  # True
print(is_alliance(k5, k5.vertex_set([0, 1, 2]), spec))     # False

r = min_alliance(k5, spec)
print(r.invariant, r.value, r.witness.sorted())

# offensive alliances only look at the vertices just outside the set
c4 = parse_gen("cycle:4")
for k in range(-2, 3):
    for gl in (False, True):
        r = min_alliance(c4, AllianceSpec.offensive(k, gl))
        print(f"C_4 k={k:+d} {r.invariant:10s} {r.value} {r.witness.sorted()}")

# some families are empty: a leaf can never satisfy 2*inside >= 1 + 3
r = min_alliance(generate("star", 4), AllianceSpec.defensive(3))
print(r.invariant, "feasible" if r.feasible else "no such alliance")
