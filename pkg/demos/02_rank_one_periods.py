"""
Rank-1 elementary periods
=========================

A cyclically reduced word of length at least 2 that is not a product of two
involutions and has no cyclic 9-th power of a shorter word is certified as
an elementary period of rank 1.  Each certified word contributes the
relation A^n = 1.
"""

from periodic_products import (
    FactorFamily,
    classify_rank1,
    cyclic,
    enumerate_certified,
    find_nine_power,
    parse_word,
    relation_for,
    symmetric,
)

z3z3 = FactorFamily([cyclic(3), cyclic(3, gen="b")], n=665)
ab = parse_word("g1:a g2:b", z3z3)

cls = classify_rank1(ab)
print(ab, "->", cls.tag)
print(relation_for(ab))

# Nine copies of ab contain a 9-th power of the 2-syllable word ab.
ab9 = ab ** 9
print(ab9, "->", classify_rank1(ab9).tag, classify_rank1(ab9).witness)

# Both detectors agree: the quadratic scan and the Main-Lorentz runs.
print("scan:", find_nine_power(ab9), " runs:", find_nine_power(ab9, method="runs"))

# Conjugates are classified through their cyclically reduced core.
x = parse_word("g2:b g1:a g2:b g1:a^2 g2:b^2", z3z3)
print(x, "->", classify_rank1(x).tag, "core", classify_rank1(x).core)

# All certified classes up to 2 syllables: exactly a^i b^j.
for cw in enumerate_certified(z3z3, 2):
    print("  ", relation_for(cw))

# In Z2 * Z2 every length-2 word is a product of the two generators.
z2z2 = FactorFamily([cyclic(2), cyclic(2, gen="b")], n=665)
print("Z2*Z2 certified up to length 2:", len(list(enumerate_certified(z2z2, 2))))

# With involutions around, many short words are excluded.
z2s3 = FactorFamily([cyclic(2, gen="b"), symmetric(3)], n=665)
counts = {}
for k in range(2, 7):
    counts[k] = sum(1 for cw in enumerate_certified(z2s3, k) if len(cw) == k)
print("Z2*S3 certified classes by length:", counts)
