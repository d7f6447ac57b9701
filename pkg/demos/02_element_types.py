"""
Element types in a skew polynomial ring
=======================================

Each coefficient classifier is paired with a brute-force oracle that
searches ``A`` directly.  They should never disagree.
"""

from skewpbw import classifiers as cl
from skewpbw import oracles as orc
from skewpbw.fixtures import fixture

z4 = fixture("zmod4")

for text in ["1 + 2*x1", "x1", "3 + 2*x1^2", "2 + 2*x1"]:
    f = z4.parse(text)
    v = cl.is_unit_in_A(f)
    o = orc.oracle_unit(f)
    print(f"{text:>12}  unit: {v.value:5}  oracle: {o.value}  inverse: {o.witness}")

# the inverse of I + E12 x over UT2(Z/2) comes from a terminating geometric series
ut = fixture("ut2")
g = ut.parse("[[1,0],[0,1]] + [[0,1],[0,0]]*x1")
print("inverse of", g, "is", orc.oracle_unit(g).witness)

# full sweeps of degree <= 1: every classifier verdict against its oracle
for theorem in ["units", "nilpotents", "vnr", "pi_regular", "vnl", "clean"]:
    rep = orc.theorem_crosscheck(z4, theorem, orc.SearchBounds(max_power=8))
    print(f"{theorem:>10}: {rep.agreements}/{rep.swept} agree, "
          f"{len(rep.counterexamples)} counterexamples")

# idempotents of S2(Z/4)[x; sigma] at degree <= 1
rep = orc.theorem_crosscheck(fixture("s2"), "idempotents")
print("idempotents found:", rep.positives)
