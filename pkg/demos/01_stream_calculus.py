#!/usr/bin/env python3
# Closed-form streams and the derivative calculus.
#
# A rational stream is a quotient of polynomials in the formal variable X
# whose denominator is invertible at 0.  Its coefficients unfold through a
# linear recurrence, and its tail (the stream derivative) has a closed form
# that never grows the denominator.

from streamcalc import QQ, RationalStream
from streamcalc.expr import evaluate_text

# The geometric stream 1/(1-3X) = (1, 3, 9, 27, ...)
geometric = evaluate_text("1/(1-3*X)")
print("geometric      :", geometric)
print("first 8 terms  :", geometric.expand(8))

# The natural numbers arise as the square of the all-ones stream.
ones = evaluate_text("1/(1-X)")
naturals = ones * ones
print("\nnaturals       :", naturals)
print("first 8 terms  :", naturals.expand(8))

# Differentiating (taking tails) stays inside closed forms: the denominator
# is preserved and only the numerator moves.
s = naturals
for k in range(4):
    print(f"derivative^{k}  :", s, "-> head", s.initial_value())
    s = s.derivative()

# Every stream is rebuilt from its head and tail (stream integration).
head = RationalStream.constant(QQ, naturals.initial_value())
rebuilt = head + RationalStream.x(QQ) * naturals.derivative()
print("\nhead + X*tail == original:", rebuilt == naturals)

# Multiplicative inverses exist exactly when the head is nonzero.
print("ones * (1/ones) :", ones * ones.inverse())
