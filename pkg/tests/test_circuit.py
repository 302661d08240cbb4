import random
from collections import Counter

import pytest

from streamcalc import (
    Adder,
    CanonicalCircuit,
    Copier,
    DimensionMismatch,
    IllFormedCircuit,
    LinearSystem,
    Matrix,
    Multiplier,
    Netlist,
    PointedLinearSystem,
    QQ,
    Register,
    format_canonical,
    format_netlist,
    parse_canonical,
    parse_circuit_file,
    parse_netlist,
    realize,
)
from streamcalc.expr import evaluate_text
from util import random_stream

NATURALS_CANONICAL = CanonicalCircuit(
    Matrix(QQ, [[0, -1], [1, 2]]), Matrix(QQ, [[1, 2]]), (1, 0)
)


def test_simulate_canonical_netlist():
    net = NATURALS_CANONICAL.to_netlist()
    assert net.simulate(5) == [1, 2, 3, 4, 5]


def test_register_with_zero_feedback():
    # single register seeded with c whose next value is always 0
    c = CanonicalCircuit(Matrix(QQ, [[0]]), Matrix(QQ, [[1]]), (7,))
    assert c.to_netlist().simulate(4) == [7, 0, 0, 0]


def test_register_self_loop_keeps_value():
    c = CanonicalCircuit(Matrix(QQ, [[1]]), Matrix(QQ, [[1]]), (3,))
    net = c.to_netlist()
    assert net.simulate(4) == [3, 3, 3, 3]
    # the loop passes through the register itself
    assert any(isinstance(g, Register) for g in net.gates.values())


def test_canonical_behaviour_golden():
    assert NATURALS_CANONICAL.behaviour() == evaluate_text("1/(1-X)^2")


def test_canonical_behaviour_scalar():
    c = CanonicalCircuit(Matrix(QQ, [[5]]), Matrix(QQ, [[1]]), (1,))
    assert c.behaviour() == evaluate_text("1/(1-5*X)")


def test_canonical_behaviour_zero_seeds():
    c = CanonicalCircuit(Matrix(QQ, [[0, -1], [1, 2]]), Matrix(QQ, [[1, 2]]), (0, 0))
    assert c.behaviour().is_zero


def test_netlist_structure_with_zero_entry_elided():
    net = NATURALS_CANONICAL.to_netlist()
    counts = Counter(type(g).__name__ for g in net.gates.values())
    # the 0 entry in the feedback matrix produces no multiplier, and the
    # single-input row needs no adder
    assert counts == {"Register": 2, "Copier": 2, "Multiplier": 5, "Adder": 2}
    factors = sorted(
        g.factor for g in net.gates.values() if isinstance(g, Multiplier)
    )
    assert factors == [-1, 1, 1, 2, 2]


def test_netlist_for_unused_register_stays_closed():
    # second register influences nothing: it gets a 0-multiplier self-edge
    c = CanonicalCircuit(Matrix(QQ, [[2, 0], [0, 0]]), Matrix(QQ, [[1, 0]]), (1, 5))
    net = c.to_netlist()
    assert net.simulate(4) == [1, 2, 4, 8]


def test_simulation_agrees_with_closed_form():
    rng = random.Random(31)
    for _ in range(12):
        n = rng.randint(1, 4)
        c = CanonicalCircuit(
            Matrix(QQ, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]),
            Matrix(QQ, [[rng.randint(-3, 3) for _ in range(n)]]),
            tuple(rng.randint(-3, 3) for _ in range(n)),
        )
        assert c.to_netlist().simulate(12) == c.behaviour().expand(12)


def test_extra_output_register_prepends():
    net = NATURALS_CANONICAL.to_netlist()
    delayed = net.with_output_register(9)
    assert delayed.simulate(6) == [9] + net.simulate(5)


def test_conversion_to_linear_system_golden():
    pointed = NATURALS_CANONICAL.to_linear_system()
    assert pointed.system.dynamics == Matrix(QQ, [[0, -1], [1, 2]])
    assert pointed.system.output == Matrix(QQ, [[1, 2]])
    assert pointed.initial == (1, 0)
    assert pointed.behaviour()[0] == NATURALS_CANONICAL.behaviour()


def test_conversion_round_trip():
    again = CanonicalCircuit.from_linear_system(NATURALS_CANONICAL.to_linear_system())
    assert again == NATURALS_CANONICAL


def test_zero_dimensional_system_rejected():
    from streamcalc import RationalStream

    pointed = realize([RationalStream.zero(QQ)])
    with pytest.raises(DimensionMismatch):
        CanonicalCircuit.from_linear_system(pointed)


def test_multi_output_system_rejected():
    system = LinearSystem(Matrix(QQ, [[1]]), Matrix(QQ, [[1], [2]]))
    with pytest.raises(DimensionMismatch):
        CanonicalCircuit.from_linear_system(PointedLinearSystem(system, (1,)))


def test_behaviour_matches_synthesis_round_trip():
    rng = random.Random(32)
    for _ in range(10):
        s = random_stream(rng, max_deg=4)
        circuit = CanonicalCircuit.from_linear_system(realize([s]))
        assert circuit.behaviour() == s


def test_netlist_file_round_trip():
    net = NATURALS_CANONICAL.to_netlist()
    text = format_netlist(net)
    assert parse_netlist(text) == net
    assert format_netlist(parse_netlist(text)) == text


def test_canonical_file_round_trip():
    text = format_canonical(NATURALS_CANONICAL)
    assert text == "field=q\nM=0,-1;1,2\nN=1,2\nr=1,0\n"
    assert parse_canonical(text) == NATURALS_CANONICAL
    # the inline one-chunk spelling parses too
    inline = "M=0,-1;1,2; N=1,2; r=1,0"
    assert parse_canonical(inline) == NATURALS_CANONICAL


def test_parse_circuit_file_dispatch():
    assert isinstance(parse_circuit_file(format_canonical(NATURALS_CANONICAL)), CanonicalCircuit)
    assert isinstance(
        parse_circuit_file(format_netlist(NATURALS_CANONICAL.to_netlist())), Netlist
    )


def test_dangling_input_rejected():
    gates = {"r1": Register(QQ.from_int(1)), "m1": Multiplier(QQ.from_int(2))}
    wires = [(("m1", 0), ("r1", 0))]
    with pytest.raises(IllFormedCircuit):
        Netlist(QQ, gates, wires, ("r1", 0))


def test_combinational_cycle_rejected():
    gates = {
        "r1": Register(QQ.from_int(1)),
        "m1": Multiplier(QQ.from_int(2)),
        "m2": Multiplier(QQ.from_int(3)),
        "c1": Copier(2),
    }
    # m1 -> m2 -> c1 -> m1 is a register-free loop
    wires = [
        (("m1", 0), ("m2", 0)),
        (("m2", 0), ("c1", 0)),
        (("c1", 0), ("m1", 0)),
        (("c1", 1), ("r1", 0)),
    ]
    with pytest.raises(IllFormedCircuit):
        Netlist(QQ, gates, wires, ("r1", 0))


def test_double_driven_input_rejected():
    gates = {
        "r1": Register(QQ.from_int(1)),
        "r2": Register(QQ.from_int(2)),
        "m1": Multiplier(QQ.from_int(1)),
    }
    wires = [
        (("r1", 0), ("m1", 0)),
        (("r2", 0), ("m1", 0)),
        (("m1", 0), ("r1", 0)),
    ]
    with pytest.raises(IllFormedCircuit):
        Netlist(QQ, gates, wires, ("r2", 0))


def test_small_arity_gates_rejected():
    with pytest.raises(IllFormedCircuit):
        Netlist(QQ, {"a": Adder(1), "r": Register(QQ.zero())}, [], ("a", 0))
    with pytest.raises(IllFormedCircuit):
        Netlist(QQ, {"c": Copier(1), "r": Register(QQ.zero())}, [], ("c", 0))
