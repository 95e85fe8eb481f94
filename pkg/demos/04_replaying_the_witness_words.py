"""
Replaying the witness words
===========================

Four words show that a normal subgroup N of a factor which contains all
n-th powers is inheritably normal.  Each must be a certified rank-1 period
and must reduce, modulo N, to the expected right-hand side.
"""

from pathlib import Path

from periodic_products import FactorFamily, ProofBindings, cyclic, load_product, proof_word_suite

# V4 written out as a table with elements e, a, g, ag
v4_z2 = load_product(Path(__file__).resolve().parent / "data" / "v4_z2.ppl").family
v4 = v4_z2.factors[0]

setups = {
    "Z9 * Z3, a = x^3": (
        FactorFamily([cyclic(9, gen="x"), cyclic(3, gen="b")], 665),
        ProofBindings(a=3, g=1, b1=1, b2=2),
    ),
    "Z9 * Z2, a1 = x^3, a2 = x^6": (
        FactorFamily([cyclic(9, gen="x"), cyclic(2, gen="b")], 665),
        ProofBindings(a1=3, a2=6, g=1, b=1),
    ),
    "Z6 * Z2, |N| = 2, g of order 6": (
        FactorFamily([cyclic(6), cyclic(2, gen="b")], 665),
        ProofBindings(a=3, g=1, b=1),
    ),
    "V4 * Z2, a and g involutions": (
        v4_z2,
        ProofBindings(a=v4.element("a"), g=v4.element("g"), b=1),
    ),
}

for title, (family, bindings) in setups.items():
    print(title)
    for r in proof_word_suite(family, bindings).results:
        print(f"  {r.name}: {r.word}  (length {len(r.word)})")
        print(f"    class {r.tag}, image mod N: {r.image}, congruent {r.congruent}, "
              f"n-th power congruent {r.power_congruent} -> {r.status}")
