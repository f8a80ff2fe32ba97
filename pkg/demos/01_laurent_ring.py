"""Tour of the exact Laurent coefficient ring and the quantum symbols.

Everything downstream (transition matrices, canonical coefficients) is a
value in this ring, so it is worth seeing the primitives on their own.
"""

from lindeg import LaurentPoly, qbinom, qfact, qint, v_power

# Polynomials are sparse maps exponent -> integer coefficient, always in
# canonical zero-free form, with exact big-integer arithmetic.
p = LaurentPoly({3: 1, 0: -2, -4: 5})
print("p          =", p)
print("p + p      =", p + p)
print("p * v^2    =", p * v_power(2))

# The bar involution flips every exponent.
print("bar(p)     =", p.bar())
print("involution:", p.bar().bar() == p)

# Quantum integers, factorials, binomials.  [k] is the balanced geometric
# sum, [k]! the product, [k choose m] the exact quotient of factorials.
print("\n[4]        =", qint(4))
print("[3]!       =", qfact(3))
print("[4 ch 2]   =", qbinom(4, 2))

# All three specialize to their classical values at v = 1 and are
# bar-symmetric (palindromic coefficient sequences).
print("\n[6 ch 2](1) =", qbinom(6, 2).at_one())
print("palindromic:", qbinom(6, 2) == qbinom(6, 2).bar())

# Quantum binomials are built by exact division; a nonzero remainder
# anywhere would raise immediately instead of silently truncating.
big = qbinom(40, 17)
print("\ndegree of [40 choose 17]:", big.degree())
print("value at 1 (binomial 40 choose 17):", big.at_one())

# Division is exposed directly as well.
product = qint(7) * qint(5)
print("\n[7][5] / [5] =", product.exact_div(qint(5)))
