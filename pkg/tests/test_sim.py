"""Evaluators, equivalence checking, bijectivity and statistics."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revmap import (
    CircuitStats,
    FeedbackError,
    IrCircuit,
    IrGate,
    IrGateKind,
    Line,
    NameMismatchError,
    RevCircuit,
    RevGate,
    check_bijectivity,
    check_equivalence,
    convert_circuit,
    eval_ir,
    eval_rev,
    gen_random_circuit,
    insert_copiers,
    slot_circuit,
    stats,
    t1,
    t2,
    t3,
)
from samples import BOOL_FN, HALF_ADDER_BLIF, pipeline, single_gate_blif

K = IrGateKind


# ---------------------------------------------------------------- eval_ir


@pytest.mark.parametrize("kind", [k for k in K if k is not K.COPY])
def test_eval_ir_matches_oracle(kind):
    text = single_gate_blif(kind)
    from revmap import parse_blif

    c = parse_blif(text)
    n = kind.n_inputs
    names = c.inputs
    for bits in range(1 << n):
        assignment = {names[i]: (bits >> (n - 1 - i)) & 1 for i in range(n)}
        got = eval_ir(c, assignment)
        assert got["y"] == BOOL_FN[kind](*(assignment[nm] for nm in names))


def test_eval_ir_copy_duplicates():
    c = IrCircuit(
        "cp", ("a",), ("p", "q"), (IrGate(K.COPY, ("a",), ("p", "q")),)
    )
    assert eval_ir(c, {"a": 1}) == {"p": 1, "q": 1}
    assert eval_ir(c, {"a": 0}) == {"p": 0, "q": 0}


def test_eval_ir_handles_forward_references():
    # gate 0 reads the output of gate 1, declared later
    c = IrCircuit(
        "fwd",
        ("a",),
        ("y",),
        (
            IrGate(K.NOT, ("w",), ("y",)),
            IrGate(K.NOT, ("a",), ("w",)),
        ),
    )
    assert eval_ir(c, {"a": 0}) == {"y": 0}
    assert eval_ir(c, {"a": 1}) == {"y": 1}


def test_eval_ir_missing_input_rejected():
    c = IrCircuit("m", ("a", "b"), ("y",), (IrGate(K.AND, ("a", "b"), ("y",)),))
    with pytest.raises(ValueError, match="misses inputs"):
        eval_ir(c, {"a": 1})


def test_eval_ir_feedback_raises():
    c = IrCircuit(
        "loop",
        ("a",),
        ("y",),
        (
            IrGate(K.AND, ("a", "q"), ("p",)),
            IrGate(K.NOT, ("p",), ("q",)),
            IrGate(K.NOT, ("p",), ("y",)),
        ),
    )
    with pytest.raises(FeedbackError) as exc:
        eval_ir(c, {"a": 1})
    assert tuple(exc.value.cycle) == (0, 1)


# ---------------------------------------------------------------- eval_rev


def test_eval_rev_anchor_rows():
    flip = RevCircuit("n", (Line("a"),), (t1(0),))
    assert eval_rev(flip, (0,)) == (1,)
    assert eval_rev(flip, (1,)) == (0,)

    feynman = RevCircuit("f", (Line("a"), Line("b")), (t2(0, 1),))
    assert eval_rev(feynman, (1, 1)) == (1, 0)
    assert eval_rev(feynman, (1, 0)) == (1, 1)
    assert eval_rev(feynman, (0, 1)) == (0, 1)

    toffoli = RevCircuit("t", (Line("a"), Line("b"), Line("c")), (t3(0, 1, 2),))
    assert eval_rev(toffoli, (1, 1, 0)) == (1, 1, 1)
    assert eval_rev(toffoli, (1, 1, 1)) == (1, 1, 0)
    assert eval_rev(toffoli, (0, 1, 1)) == (0, 1, 1)


def test_eval_rev_length_mismatch():
    flip = RevCircuit("n", (Line("a"),), (t1(0),))
    with pytest.raises(ValueError, match="1 lines"):
        eval_rev(flip, (0, 1))


@settings(max_examples=60)
@given(st.data())
def test_gate_list_followed_by_its_reverse_is_identity(data):
    width = data.draw(st.integers(min_value=1, max_value=5))
    gates = []
    for _ in range(data.draw(st.integers(min_value=0, max_value=8))):
        lines = data.draw(
            st.lists(
                st.integers(min_value=0, max_value=width - 1),
                min_size=1,
                max_size=min(3, width),
                unique=True,
            )
        )
        gates.append(RevGate(tuple(lines[:-1]), lines[-1]))
    r = RevCircuit(
        "p",
        tuple(Line(f"l{i}") for i in range(width)),
        tuple(gates) + tuple(reversed(gates)),
    )
    state = tuple(data.draw(st.integers(0, 1)) for _ in range(width))
    assert eval_rev(r, state) == state


# ------------------------------------------------------- check_equivalence


def test_equivalent_report():
    c, slotted = pipeline(HALF_ADDER_BLIF)
    report = check_equivalence(c, convert_circuit(slotted))
    assert report.status == "Equivalent"
    assert report.equivalent
    assert (report.checked, report.mode, report.seed) == (4, "exhaustive", None)
    assert report.summary() == "status=Equivalent checked=4 witness=none"


def test_mismatch_witness_replays():
    c, slotted = pipeline(single_gate_blif(K.AND))
    rev = convert_circuit(slotted)
    broken = RevCircuit(rev.name, rev.lines, rev.gates + (t1(2),))
    report = check_equivalence(c, broken)
    assert report.status == "Mismatch"
    assert not report.equivalent
    w = report.witness
    assert w is not None
    # the witness assignment really does split the two circuits
    expected = eval_ir(c, w.assignment)
    start = [
        ln.constant if ln.constant is not None else w.assignment[ln.name]
        for ln in broken.lines
    ]
    end = eval_rev(broken, start)
    assert expected == w.expected
    assert end[2] == w.actual["y"]
    assert w.expected != w.actual
    assert report.summary().startswith("status=Mismatch")
    assert w.bits in report.summary()


def test_sampled_mode_above_the_cap():
    c = gen_random_circuit(3, 14, 6)
    rev = convert_circuit(slot_circuit(insert_copiers(c)))
    report = check_equivalence(c, rev, samples=200, seed=11)
    assert (report.mode, report.seed, report.checked) == ("sampled", 11, 200)
    assert report.equivalent
    again = check_equivalence(c, rev, samples=200, seed=11)
    assert again == report


def test_exhaustive_cap_is_tunable():
    c = gen_random_circuit(4, 5, 4)
    rev = convert_circuit(slot_circuit(insert_copiers(c)))
    report = check_equivalence(c, rev, max_exhaustive=4, samples=64, seed=9)
    assert report.mode == "sampled"
    assert report.checked == 64


def test_name_mismatch_rejected():
    c, slotted = pipeline(single_gate_blif(K.AND))
    rev = convert_circuit(slotted)
    renamed = RevCircuit(
        rev.name,
        tuple(
            Line("zz", ln.constant, ln.output) if i == 0 else ln
            for i, ln in enumerate(rev.lines)
        ),
        rev.gates,
    )
    with pytest.raises(NameMismatchError, match="primary inputs differ"):
        check_equivalence(c, renamed)


# ------------------------------------------------------- check_bijectivity


def test_converted_circuits_are_bijective():
    for text in (HALF_ADDER_BLIF, single_gate_blif(K.OR), single_gate_blif(K.NOT)):
        _, slotted = pipeline(text)
        assert check_bijectivity(convert_circuit(slotted)) is None


def test_bijectivity_cap():
    r = RevCircuit(
        "wide", tuple(Line(f"l{i}") for i in range(17)), (t1(0),)
    )
    with pytest.raises(ValueError, match="cap"):
        check_bijectivity(r)
    assert check_bijectivity(r, max_lines=17) is None


def test_vectorized_walk_agrees_with_scalar_eval():
    c = gen_random_circuit(12, 3, 5)
    rev = convert_circuit(slot_circuit(insert_copiers(c)))
    width = rev.width
    assert width <= 12
    images = set()
    for v in range(1 << width):
        start = tuple((v >> i) & 1 for i in range(width))
        images.add(eval_rev(rev, start))
    assert len(images) == 1 << width
    assert check_bijectivity(rev, max_lines=width) is None


# ------------------------------------------------------------------ stats


def test_stats_two_feynman():
    r = RevCircuit(
        "ff", (Line("a"), Line("b"), Line("c")), (t2(0, 1), t2(1, 2))
    )
    s = stats(r)
    assert s.quantum_cost == 2
    assert s.gate_count == 2


def test_stats_converted_or():
    c, slotted = pipeline(single_gate_blif(K.OR))
    s = stats(convert_circuit(slotted))
    assert s == CircuitStats(
        lines=3, constant_inputs=1, garbage_outputs=2, gate_count=5,
        quantum_cost=9,
    )
    assert s.summary() == (
        "lines=3 constants=1 garbage=2 gates=5 quantum_cost=9"
    )


def test_stats_half_adder():
    _, slotted = pipeline(HALF_ADDER_BLIF)
    s = stats(convert_circuit(slotted))
    assert (s.lines, s.constant_inputs, s.garbage_outputs) == (5, 3, 3)
    assert (s.gate_count, s.quantum_cost) == (4, 8)


# ------------------------------------------------------ gen_random_circuit


def test_generator_is_deterministic():
    a = gen_random_circuit(42, 4, 9)
    b = gen_random_circuit(42, 4, 9)
    assert a == b
    assert a.name == "rand42"


def test_generator_output_is_valid_and_convertible():
    from revmap import check_circuit

    for seed in range(10):
        c = gen_random_circuit(seed, 1 + seed % 5, seed % 9)
        check_circuit(c)
        assert all(g.kind is not K.COPY for g in c.gates)
        rev = convert_circuit(slot_circuit(insert_copiers(c)))
        assert check_equivalence(c, rev).equivalent


def test_generator_outputs_are_sink_free_nets():
    c = gen_random_circuit(7, 3, 8)
    read = {net for g in c.gates for net in g.inputs}
    defined = list(c.inputs) + [g.outputs[0] for g in c.gates]
    assert list(c.outputs) == [n for n in defined if n not in read]


def test_generator_zero_gates():
    c = gen_random_circuit(0, 3, 0)
    assert c.outputs == c.inputs
    assert c.gates == ()


def test_generator_argument_validation():
    with pytest.raises(ValueError):
        gen_random_circuit(0, 0, 3)
    with pytest.raises(ValueError):
        gen_random_circuit(0, 2, -1)
