"""
Words in a free product
=======================

Normal forms, cyclic reduction and conjugacy in Z2 * S3, ending with the
two-involution test used to exclude periods.
"""

from periodic_products import FactorFamily, cyclic, symmetric, parse_word
from periodic_products.words import (
    CyclicWord,
    cyclic_reduce,
    is_conjugate,
    is_involution,
    two_involution_witness,
)

family = FactorFamily([cyclic(2, gen="b"), symmetric(3)], n=665)
print(family)

# Letters are written factor:element.  Adjacent letters from one factor merge.
w = parse_word("g1:b g2:(12) g2:(13) g1:b g1:b g2:(23)", family)
print("normal form:", w)
print("length:", len(w))

# Multiplication cancels across the seam.
u = parse_word("g2:(123) g1:b", family)
print("u * u^-1 is trivial:", (u * u.inverse()).is_identity)

# Conjugating by anything and cyclically reducing gives back a rotation.
c = parse_word("g2:(12) g1:b g2:(13)", family)
conj = c * w * c.inverse()
core, conjugator = cyclic_reduce(conj)
print("conjugate:", conj)
print("core:", core, " conjugator:", conjugator)
print("core is conjugate to w:", is_conjugate(core.word, w))

# Cyclic words compare by their least rotation.
print("canonical rotation of w:", CyclicWord(w))

# A product of two involutions: b z b z^-1 with z = (123).
bz = parse_word("g1:b g2:(123) g1:b g2:(132)", family)
wit = two_involution_witness(CyclicWord(bz))
print("witness c =", wit.c, " d =", wit.d)
print("both involutions:", is_involution(wit.c) and is_involution(wit.d))
print("c * d == word:", wit.c * wit.d == bz)

# b (123) has odd length, so it is never such a product.
print("b (123):", two_involution_witness(CyclicWord(parse_word("g1:b g2:(123)", family))))
