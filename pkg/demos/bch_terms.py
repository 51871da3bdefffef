"""Walkthrough: commutator coefficients of log(e^X e^Y).

Multiplying two exponentials of non-commuting letters and taking the
logarithm produces the classic series X + Y + [X,Y]/2 + ...; everything here
is exact rational arithmetic, so the 1/2 and 1/12 fall out literally.
"""

from splitcond import NCSeries, exp, log, lie_decompose
from splitcond.poly import Poly

# Work with symbolic weights: X = a1*A, Y = b1*B, truncated at degree 3.
a1 = Poly.symbol("a", 1)
b1 = Poly.symbol("b", 1)
X = NCSeries.letter(0, 3, coeff=a1)
Y = NCSeries.letter(1, 3, coeff=b1)

Z = log(exp(X) * exp(Y))
print("log(e^X e^Y) as a word series:")
print(" ", Z)

# Regroup each homogeneous degree in the Lyndon basis of nested commutators.
print("\ncommutator coefficients per degree:")
for degree in (1, 2, 3):
    part = NCSeries(degree, 2, {w: c for w, c in Z.terms.items() if len(w) == degree})
    decomposition = lie_decompose(part, degree)
    print(f"  degree {degree}: {decomposition}")

# AB stands for [A,B], AAB for [A,[A,B]], ABB for [[A,B],B]; the printed
# 1/2*a1*b1 and 1/12 coefficients are the expected leading BCH terms.
