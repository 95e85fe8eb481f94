"""
Verdicts for products of cyclic groups
======================================

Z1995 * Z1995 with n = 665: since 665 is a proper divisor of 1995 the
product is Hopfian, not simple, and not residually finite.  The normal
subgroups of Z1995 that are inheritably normal are the ones containing
the 665-th powers, a subgroup of order 3.
"""

from periodic_products import (
    FactorFamily,
    corollary1_scan,
    corollary3_verdict,
    cyclic,
    enumerate_normal_subgroups,
    hopfian_verdict,
    inheritably_factorizable_verdict,
    inheritably_normal_verdict,
    power_subgroup,
    simplicity_verdict,
    symmetric,
)
from periodic_products.finite_group import subgroup_as_group, normal_closure

z = cyclic(1995)
family = FactorFamily([z, z], n=665)

powers = power_subgroup(z, 665)
print("order of the 665-th power subgroup:", powers.order)

for sub in enumerate_normal_subgroups(z):
    if sub.is_trivial:
        continue
    v = inheritably_normal_verdict(family, 0, sub)
    print(f"  order {sub.order:5d}: {v.answer}")

for v in (simplicity_verdict(family), hopfian_verdict(family), inheritably_factorizable_verdict(family, 0)):
    print(f"{v.question}={v.answer} [{v.citation}] {v.reason}")

print(corollary3_verdict(2, 1995, 665).details)
print(corollary3_verdict(2, 665, 665).code)

# Small factors.
print("Z3*Z3:", simplicity_verdict(FactorFamily([cyclic(3), cyclic(3)], 665)).answer)
print("Z5*Z5:", simplicity_verdict(FactorFamily([cyclic(5), cyclic(5)], 665)).answer)
print("Z5*Z7 hopfian:", hopfian_verdict(FactorFamily([cyclic(5), cyclic(7)], 665)).answer)
print("S3*Z3:", simplicity_verdict(FactorFamily([symmetric(3), cyclic(3)], 665)).code)

# The involution statement, checked premise by premise.  A5 satisfies the
# lattice criterion and has fifteen involutions, none central.
s5 = symmetric(5)
a5 = subgroup_as_group(normal_closure(s5, [s5.element("(123)")]), name="A5")
for g in (cyclic(2), cyclic(4), a5):
    r = corollary1_scan(g, 665)
    print(f"{r.group}: premise={r.premise} conclusion={r.conclusion} tension={r.tension}")
