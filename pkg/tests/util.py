"""Shared builders for the test suite."""

import random

from streamcalc import LinearSystem, Matrix, PointedLinearSystem, Polynomial, QQ
from streamcalc.automaton import WeightedAutomaton
from streamcalc.ratstream import RationalStream


def poly(field, *coeffs):
    return Polynomial(field, coeffs)


def stream(num_coeffs, den_coeffs=(1,), field=QQ):
    return RationalStream(Polynomial(field, num_coeffs), Polynomial(field, den_coeffs))


def random_stream(rng: random.Random, field=QQ, max_deg=5, bound=9, allow_zero=False):
    """Random rational stream: degrees <= max_deg, int coefficients in +-bound,
    denominator constant term 1."""
    while True:
        num = [rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg) + 1)]
        den = [1] + [rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg))]
        s = RationalStream(Polynomial(field, num), Polynomial(field, den))
        if allow_zero or not s.is_zero:
            return s


def random_system(rng: random.Random, field=QQ, max_dim=4, outputs=1, bound=3):
    n = rng.randint(1, max_dim)
    dynamics = Matrix(
        field, [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    )
    output = Matrix(
        field, [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(outputs)]
    )
    initial = tuple(rng.randint(-bound, bound) for _ in range(n))
    return PointedLinearSystem(LinearSystem(dynamics, output), initial)


def random_automaton(rng: random.Random, field=QQ, max_states=4, bound=3):
    n = rng.randint(1, max_states)
    weights = Matrix(
        field, [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    )
    outputs = tuple(rng.randint(-bound, bound) for _ in range(n))
    return WeightedAutomaton(outputs, weights)


def triangular_prefix(field, length):
    """Indicator stream of the triangular numbers k(k+1)/2."""
    triangles = set()
    k = 0
    while k * (k + 1) // 2 < length:
        triangles.add(k * (k + 1) // 2)
        k += 1
    return [field.from_int(1 if i in triangles else 0) for i in range(length)]
