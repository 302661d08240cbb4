#!/usr/bin/env python3
# Linear systems as stream representations, and minimal realization.
#
# A linear system (dynamics F, output H) emits, from a state v, the stream
# (Hv, HFv, HF^2 v, ...).  Symbolically that stream is H (I - XF)^-1 v, so
# finite systems denote rational streams.  Conversely, chasing derivatives of
# a rational stream until they become linearly dependent yields a minimal
# companion-form system realizing it.

from streamcalc import (
    LinearSystem,
    Matrix,
    PointedLinearSystem,
    QQ,
    format_system,
    minimize,
    realize,
    states_equivalent,
)
from streamcalc.expr import evaluate_text

system = LinearSystem(Matrix(QQ, [[1, 1], [0, 0]]), Matrix(QQ, [[1, 1]]))
print("behaviour at (1,0):", system.behaviour((1, 0))[0])
print("behaviour at (0,1):", system.behaviour((0, 1))[0])
print("(1,0) ~ (0,1)?    :", states_equivalent(system, (1, 0), (0, 1)))

pointed = PointedLinearSystem(system, (1, 0))
reduced = minimize(pointed)
print("minimized dimension:", reduced.dim, "- behaviour kept:",
      reduced.behaviour() == pointed.behaviour())

# Realizing a stream: iterate derivatives, embed numerators, stop at the
# first linear dependence.
naturals = evaluate_text("1/(1-X)^2")
realized = realize([naturals])
print("\nrealization of", naturals)
print(format_system(realized), end="")
print("round-trip:", realized.behaviour()[0] == naturals)

# Vectors of streams realize jointly over a shared state space.
pair = realize([evaluate_text("1/(1-2*X)"), naturals])
print("\njoint realization of a pair has dimension", pair.dim)
print(format_system(pair), end="")
print("first 6 output vectors:", pair.step_outputs(6))
