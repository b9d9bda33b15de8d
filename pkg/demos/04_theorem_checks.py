"""
Checking the structural theorems
================================

Enumerate every subset of small graphs and test each statement. Instances
that fall outside a premise are counted as excluded, never as passes.
"""

from kalliance import corpus_run, default_corpus, parse_gen, verify

g = parse_gen("c8-chords")
r = verify(g, "T-oac-counter", 0)
print(r.status, r.witnesses)

r = verify(parse_gen("cycle:5"), "T-rem1", 0)
print(r.theorem, r.status, r.instances, r.witnesses[:2])

corpus = default_corpus()[:10]
rep = corpus_run(corpus, ["T-dom", "T-goa", "T-13", "T-table", "C-step-goaf"])
for tid, s in rep.summary().items():
    print(f"{tid:12s} {s['status']:9s} instances={s['instances']:6d} excluded={s['excluded']:4d} "
          f"counterexamples={s['counterexamples']}")
