"""Look up a coefficient symbolically, at a weight, and at a number q."""

from fractions import Fraction

from g2clasp import CoeffKey, coeff
from g2clasp.coefficients import F2, specialize_coeff

key = CoeffKey(F2, (3, -2))
general = coeff(key)
print(f"{key.label()} has {len(general.num)} numerator terms in q, A = q^a, B = q^b")

at_weight = specialize_coeff(key, 2, 3)
print("at (a, b) = (2, 3):", at_weight)
print("at q = 2:", at_weight.evaluate(Fraction(2)))
