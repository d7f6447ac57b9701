"""
Compatibility of endomorphism systems
=====================================

Upper triangular 2x2 matrices over Z/2 with the diagonal projection as
sigma and the strict-upper part as delta: not compatible, but weak
compatible.  Then S2(Z/4) with three endomorphisms.
"""

from skewpbw import compatibility_report
from skewpbw.fixtures import fixture
from skewpbw.sigma_delta import compat_counterexamples, weak_compat_consequences

ut = fixture("ut2")
R = ut.base
rep = compatibility_report(ut.system)
print("UT2(Z/2):", rep.as_dict())

# every pair (a, b) with ab != 0 but a sigma(b) = 0
for a, b, exp in compat_counterexamples(ut.system, "sigma"):
    print("  ", R.format_element(a), R.format_element(b), "exponent", exp)

# the four standard consequences of weak compatibility, checked exhaustively
for item in weak_compat_consequences(ut.system):
    print(f"  item {item.item}: {item.passed}")

s2 = fixture("s2_three")
rep = compatibility_report(s2.system)
a, b, exp = rep.witnesses["sigma"]
print("S2(Z/4):", "sigma-compatible", rep.sigma_compatible, "weak", rep.weak_compatible)
print("  witness", s2.base.format_element(a), s2.base.format_element(b), "exponent", exp)
