"""Simulation, equivalence checking and circuit statistics.

eval_ir and eval_rev are the two reference evaluators; equivalence
checking runs both on the same assignments and compares primary outputs
by name.  Inputs are enumerated exhaustively up to a primary-input cap
and sampled with a seeded generator above it.  Bijectivity checking walks
the full line-state space, which is why it is vectorized with numpy and
capped by line count.
"""

import random
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import FeedbackError, NameMismatchError
from .ir import IrCircuit, IrGate, IrGateKind, detect_cycles

_BINARY = {
    IrGateKind.AND: lambda a, b: a & b,
    IrGateKind.NAND: lambda a, b: 1 ^ (a & b),
    IrGateKind.OR: lambda a, b: a | b,
    IrGateKind.NOR: lambda a, b: 1 ^ (a | b),
    IrGateKind.XOR: lambda a, b: a ^ b,
    IrGateKind.XNOR: lambda a, b: 1 ^ a ^ b,
}

_QUANTUM_COST = {0: 1, 1: 1, 2: 5}


def eval_ir(c, assignment):
    """Evaluate the conventional circuit; return {output_name: bit}.

    assignment must give a bit for every primary input.  Gates are
    evaluated in a topological order, so declaration order is free.
    """
    missing = [name for name in c.inputs if name not in assignment]
    if missing:
        raise ValueError(f"assignment misses inputs: {missing}")
    values = {name: assignment[name] & 1 for name in c.inputs}
    for i in _topo_order(c):
        g = c.gates[i]
        ins = [values[name] for name in g.inputs]
        if g.kind is IrGateKind.NOT:
            values[g.outputs[0]] = 1 ^ ins[0]
        elif g.kind is IrGateKind.COPY:
            values[g.outputs[0]] = ins[0]
            values[g.outputs[1]] = ins[0]
        else:
            values[g.outputs[0]] = _BINARY[g.kind](*ins)
    return {name: values[name] for name in c.outputs}


def _topo_order(c):
    cycle = detect_cycles(c)
    if cycle is not None:
        raise FeedbackError(cycle)
    driver = {net: i for i, g in enumerate(c.gates) for net in g.outputs}
    order = []
    done = set()

    def visit(i):
        if i in done:
            return
        done.add(i)
        for net in c.gates[i].inputs:
            if net in driver:
                visit(driver[net])
        order.append(i)

    for i in range(len(c.gates)):
        visit(i)
    return order


def eval_rev(r, state):
    """Apply the reversible gate list to a full line state (bit per line)."""
    if len(state) != r.width:
        raise ValueError(
            f"state has {len(state)} bits for {r.width} lines"
        )
    bits = [b & 1 for b in state]
    for g in r.gates:
        if all(bits[i] for i in g.controls):
            bits[g.target] ^= 1
    return tuple(bits)


@dataclass(frozen=True)
class Witness:
    """A primary-input assignment on which the two circuits disagree."""

    bits: str
    assignment: dict
    expected: dict
    actual: dict


@dataclass(frozen=True)
class EquivalenceReport:
    status: str
    checked: int
    mode: str
    seed: int | None = None
    witness: Witness | None = None

    @property
    def equivalent(self):
        return self.status == "Equivalent"

    def summary(self):
        bits = self.witness.bits if self.witness else "none"
        return f"status={self.status} checked={self.checked} witness={bits}"


def check_equivalence(c, r, max_exhaustive=12, samples=4096, seed=0):
    """Compare a conventional circuit against a reversible one.

    Exhaustive over all primary-input assignments up to max_exhaustive
    inputs, otherwise `samples` assignments drawn from a generator seeded
    with `seed`.  Primary input and output names must agree as sets;
    outputs are compared by name.
    """
    if set(c.inputs) != set(r.primary_inputs):
        raise NameMismatchError(
            f"primary inputs differ: {sorted(c.inputs)} vs "
            f"{sorted(r.primary_inputs)}"
        )
    if set(c.outputs) != set(r.primary_outputs):
        raise NameMismatchError(
            f"primary outputs differ: {sorted(c.outputs)} vs "
            f"{sorted(r.primary_outputs)}"
        )

    n = len(c.inputs)
    if n <= max_exhaustive:
        mode, used_seed = "exhaustive", None
        patterns = ("".join(bits) for bits in product("01", repeat=n))
    else:
        mode, used_seed = "sampled", seed
        rng = random.Random(seed)
        patterns = (
            format(rng.getrandbits(n), f"0{n}b") for _ in range(samples)
        )

    po_lines = [
        (i, ln.output) for i, ln in enumerate(r.lines) if ln.output is not None
    ]
    checked = 0
    for bits in patterns:
        assignment = {name: int(b) for name, b in zip(c.inputs, bits)}
        expected = eval_ir(c, assignment)
        start = [
            ln.constant if ln.constant is not None else assignment[ln.name]
            for ln in r.lines
        ]
        end = eval_rev(r, start)
        actual = {name: end[i] for i, name in po_lines}
        checked += 1
        if any(expected[name] != actual[name] for name in c.outputs):
            witness = Witness(bits, assignment, expected, actual)
            return EquivalenceReport("Mismatch", checked, mode, used_seed, witness)
    return EquivalenceReport("Equivalent", checked, mode, used_seed)


def check_bijectivity(r, max_lines=16):
    """Walk all line states; return None if the map is a bijection.

    On failure returns a pair of distinct input states with equal images.
    Composition of reversible gates is always bijective, so this is a
    consistency check on the construction; it raises ValueError above the
    line cap rather than trying 2^width states.
    """
    width = r.width
    if width > max_lines:
        raise ValueError(f"{width} lines exceed the bijectivity cap {max_lines}")
    state = np.arange(1 << width, dtype=np.uint64)
    one = np.uint64(1)
    for g in r.gates:
        hit = np.ones_like(state)
        for i in g.controls:
            hit &= state >> np.uint64(i)
        hit &= one
        state ^= hit << np.uint64(g.target)
    order = np.argsort(state, kind="stable")
    ranked = state[order]
    dup = np.nonzero(ranked[1:] == ranked[:-1])[0]
    if dup.size == 0:
        return None
    a, b = int(order[dup[0]]), int(order[dup[0] + 1])

    def unpack(v):
        return tuple((v >> i) & 1 for i in range(width))

    return (unpack(a), unpack(b))


@dataclass(frozen=True)
class CircuitStats:
    lines: int
    constant_inputs: int
    garbage_outputs: int
    gate_count: int
    quantum_cost: int

    def summary(self):
        return (
            f"lines={self.lines} constants={self.constant_inputs} "
            f"garbage={self.garbage_outputs} gates={self.gate_count} "
            f"quantum_cost={self.quantum_cost}"
        )


def stats(r):
    """Count lines, constants, garbage, gates and quantum cost.

    Cost per gate: NOT and CNOT are 1, the Toffoli gate is 5.
    """
    return CircuitStats(
        lines=r.width,
        constant_inputs=r.constant_count,
        garbage_outputs=r.garbage_count,
        gate_count=len(r.gates),
        quantum_cost=sum(_QUANTUM_COST[len(g.controls)] for g in r.gates),
    )


def gen_random_circuit(seed, n_inputs, n_gates):
    """Deterministically generate a random conventional circuit.

    Gate kinds are drawn uniformly from the seven plain kinds (never
    COPY); inputs are drawn from the nets defined so far, so fanout and
    repeated inputs occur naturally.  Every net without a sink becomes a
    primary output.
    """
    if n_inputs < 1:
        raise ValueError("need at least one primary input")
    if n_gates < 0:
        raise ValueError("gate count cannot be negative")
    kinds = [k for k in IrGateKind if k is not IrGateKind.COPY]
    rng = random.Random(seed)
    nets = [f"i{k}" for k in range(n_inputs)]
    gates = []
    for g in range(n_gates):
        kind = kinds[rng.randrange(len(kinds))]
        ins = tuple(nets[rng.randrange(len(nets))] for _ in range(kind.n_inputs))
        out = f"w{g}"
        gates.append(IrGate(kind, ins, (out,)))
        nets.append(out)
    read = {net for g in gates for net in g.inputs}
    outputs = tuple(net for net in nets if net not in read)
    return IrCircuit(f"rand{seed}", tuple(nets[:n_inputs]), outputs, tuple(gates))
