#!/usr/bin/env python3
# Weighted stream automata: path sums and their closed forms.
#
# Each state carries an output scalar; transitions carry weights.  The
# stream of a state has, at index k, the total weight of all length-k paths
# leaving it (product of weights along the path times the output of the
# final state).  The same streams solve a linear fixed point, so they are
# rational and computable from the resolvent of the weight matrix.

from streamcalc import Matrix, QQ, WeightedAutomaton, format_automaton, realize
from streamcalc.expr import evaluate_text

automaton = WeightedAutomaton(
    outputs=(1, 2),
    weights=Matrix(QQ, [[0, 1], [-1, 2]]),
)
print(format_automaton(automaton), end="")

print("\npath sums (exponential enumeration):")
for q in range(2):
    print(f"  state {q + 1}:", [automaton.path_sum(q, k) for k in range(6)])

print("\nclosed forms (linear algebra):")
for q, stream in enumerate(automaton.behaviour()):
    print(f"  state {q + 1}:", stream, "->", stream.expand(6))

# A single-output linear system pointed at (1,0,...,0) becomes an automaton
# by transposing the dynamics; synthesis goes through realization.
naturals = evaluate_text("1/(1-X)^2")
synthesized = WeightedAutomaton.from_linear_system(realize([naturals]))
print("\nsynthesized from", naturals, "->", "same automaton?",
      synthesized == automaton)
