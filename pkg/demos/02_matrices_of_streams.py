#!/usr/bin/env python3
# Matrices over the field of rational functions, and the resolvent.
#
# For a square scalar matrix F, the inverse of I - X*F collects all powers of
# F into one matrix of rational functions: the coefficient of X^t in entry
# (i, j) is (F^t)_{ij}.  Exact Gaussian elimination over k(X) computes it.

from streamcalc import Matrix, QQ, RationalStream, inverse, resolvent
from streamcalc.poly import FractionField, Polynomial

fractions = FractionField(QQ)

shift_sum = Matrix(QQ, [[1, 1], [0, 0]])
print("F =")
print(" ", format(shift_sum))
res = resolvent(shift_sum)
print("(I - X*F)^-1 =")
for row in res.entries:
    print("  ", "  ".join(str(e) for e in row))

print("\nentrywise expansion reproduces the powers of F:")
power = Matrix.identity(QQ, 2)
for t in range(4):
    print(f"  F^{t} =", format(power), end="   ")
    coefficients = [
        [RationalStream.from_fraction(res.entries[i][j]).expand(4)[t] for j in range(2)]
        for i in range(2)
    ]
    print("coefficient of X^%d:" % t, coefficients)
    power = power * shift_sum

# General elimination over k(X) inverts any nonsingular matrix, even with
# entries whose denominators vanish at 0.
x = Polynomial.x(QQ)
one = Polynomial.one(QQ)
m = Matrix(fractions, [[one, x], [-x, one - x - x]])
print("\nM =")
for row in m.entries:
    print("  ", "  ".join(str(e) for e in row))
print("M^-1 =")
for row in inverse(m).entries:
    print("  ", "  ".join(str(e) for e in row))
