"""Walkthrough: Lyndon words as a basis of the free Lie algebra.

Lyndon words (strictly smaller than all of their rotations) index a basis of
nested commutators.  The expansion of each basis element has the word itself
as its lexicographically smallest term with coefficient 1, which makes
coefficient extraction a triangular back-substitution.
"""

import random
from fractions import Fraction

from splitcond import (
    NCSeries,
    bracket_str,
    bracketing,
    expand,
    lie_decompose,
    lyndon_words,
    word_str,
)

print("Lyndon words up to length 4, with their standard bracketings:")
for w in lyndon_words(2, 4):
    label = word_str(w)
    if len(w) == 1:
        print(f"  {label}")
    else:
        print(f"  {label:5s} = {bracket_str(bracketing(w))}")

print("\nexpansions of the degree-3 basis elements:")
for w in lyndon_words(2, 3):
    if len(w) == 3:
        print(f"  {bracket_str(bracketing(w))} = {expand(bracketing(w), 3)}")

# Round trip: a random combination of basis elements decomposes back to its
# own coefficients.
rng = random.Random(4)
degree = 4
combo = NCSeries.zero(degree)
weights = {}
for w in lyndon_words(2, degree):
    if len(w) == degree:
        weight = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if weight:
            weights[w] = weight
            combo = combo + expand(bracketing(w), degree).scale(weight)

recovered = lie_decompose(combo, degree)
print(f"\nrandom degree-{degree} combination, recovered coefficients:")
print(f"  planted:   {{{', '.join(f'{word_str(w)}: {c}' for w, c in sorted(weights.items()))}}}")
print(f"  recovered: {recovered}")

# A lone word is generally NOT a Lie element: AB = [A,B]/2 + (AB+BA)/2, and
# the symmetric half is reported as the offending residual.
from splitcond import NotALieElement

try:
    lie_decompose(NCSeries(2, 2, {(0, 1): 1}), 2)
except NotALieElement as err:
    print(f"\nword AB alone is not a Lie element; residual: {err.residual}")
