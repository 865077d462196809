"""Core circuit representations.

Two worlds live here.  The conventional side is a flat combinational
netlist (IrCircuit) of one- and two-input gates wired by named nets, as
read from BLIF.  The reversible side is a line circuit (RevCircuit) of
NOT/CNOT/Toffoli gates acting on a fixed set of lines, each line entering
as a primary input or a constant and leaving as a primary output or
garbage.  Both are immutable value types; every pipeline stage maps one
value to another.

Gates carry no explicit id: a gate is identified by its position in the
circuit's gate tuple, and diagnostics label position ``i`` as ``g<i>``.
"""

from dataclasses import dataclass, field
from enum import Enum

from .errors import ValidationError

PO_SINK = "PO"

_UNSET = object()


class IrGateKind(Enum):
    """The supported conventional gate kinds.

    COPY is the explicit fanout gate of the intermediate format: it takes
    one net and yields the same value on two fresh nets.  Plain BLIF input
    never contains it; the fanout preprocessor introduces it.
    """

    NOT = "not"
    AND = "and"
    NAND = "nand"
    OR = "or"
    NOR = "nor"
    XOR = "xor"
    XNOR = "xnor"
    COPY = "copy"

    @property
    def n_inputs(self):
        return 1 if self in (IrGateKind.NOT, IrGateKind.COPY) else 2

    @property
    def n_outputs(self):
        return 2 if self is IrGateKind.COPY else 1


@dataclass(frozen=True)
class IrGate:
    kind: IrGateKind
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]


@dataclass(frozen=True)
class IrCircuit:
    """A combinational netlist with named primary inputs and outputs."""

    name: str
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    gates: tuple[IrGate, ...] = ()


@dataclass(frozen=True)
class NetRecord:
    """Driver and consumers of one net.

    source is the driving gate's position, or None for a primary input.
    sinks holds (gate, pin) pairs in declaration order; a net listed in
    .outputs additionally has the PO_SINK marker, always first.
    """

    net: str
    source: int | None
    sinks: tuple


@dataclass(frozen=True)
class Slot:
    """One level of the slotted circuit.

    gates holds gate positions in declaration order (empty for slot 0);
    nets holds the nets available once the slot has fired.
    """

    gates: tuple[int, ...]
    nets: tuple[str, ...]


@dataclass(frozen=True)
class SlottedCircuit:
    circuit: IrCircuit
    slots: tuple[Slot, ...]


@dataclass(frozen=True)
class RevGate:
    """A generalized Toffoli gate with 0, 1 or 2 controls.

    The target flips exactly when every control line carries 1, so zero
    controls is NOT, one is CNOT and two is the Toffoli gate.
    """

    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        touched = (*self.controls, self.target)
        if len(set(touched)) != len(touched):
            raise ValueError(f"gate touches a line twice: {touched}")
        if len(self.controls) > 2:
            raise ValueError("at most two controls are supported")
        if min(touched) < 0:
            raise ValueError("negative line index")


def t1(target):
    return RevGate((), target)


def t2(control, target):
    return RevGate((control,), target)


def t3(control_a, control_b, target):
    return RevGate((control_a, control_b), target)


@dataclass(frozen=True)
class Line:
    """One line of a reversible circuit.

    constant is None for a primary-input line (name is then the input's
    net name) and 0 or 1 for an ancilla line.  output names the primary
    output the line carries at the end, or None for a garbage line.
    """

    name: str
    constant: int | None = None
    output: str | None = None


@dataclass(frozen=True)
class RevCircuit:
    """A reversible netlist: equal-width in/out, lines indexed from 0.

    The name is a label only and does not take part in equality; the
    .real format does not carry one.
    """

    name: str = field(compare=False)
    lines: tuple[Line, ...]
    gates: tuple[RevGate, ...]

    def __post_init__(self):
        width = len(self.lines)
        names = [ln.name for ln in self.lines]
        if len(set(names)) != width:
            raise ValueError("line names are not unique")
        pos = [ln.output for ln in self.lines if ln.output is not None]
        if len(set(pos)) != len(pos):
            raise ValueError("a primary output appears on two lines")
        for g in self.gates:
            if max((*g.controls, g.target)) >= width:
                raise ValueError(f"gate {g} exceeds line count {width}")

    @property
    def width(self):
        return len(self.lines)

    @property
    def primary_inputs(self):
        return tuple(ln.name for ln in self.lines if ln.constant is None)

    @property
    def primary_outputs(self):
        return tuple(ln.output for ln in self.lines if ln.output is not None)

    @property
    def constant_count(self):
        return sum(1 for ln in self.lines if ln.constant is not None)

    @property
    def garbage_count(self):
        return sum(1 for ln in self.lines if ln.output is None)


@dataclass(frozen=True)
class Violation:
    """One structural defect found by validate_circuit."""

    code: str
    subject: str

    def __str__(self):
        return f"{self.code}: {self.subject}"


def _gate_label(index, gate):
    return f"g{index} ({gate.kind.value})"


def validate_circuit(c):
    """Check structural invariants; return a list of violations (empty if ok).

    Checked: names are nonempty and whitespace-free, primary inputs and
    outputs are duplicate-free, gate arities match their kind, every net
    has exactly one driver, and every referenced net is driven.
    """
    found = []

    def check_name(name):
        if not name or any(ch.isspace() for ch in name):
            found.append(Violation("bad-name", repr(name)))

    for name in (*c.inputs, *c.outputs):
        check_name(name)
    for seq in (c.inputs, c.outputs):
        seen = set()
        for name in seq:
            if name in seen:
                found.append(Violation("duplicate-name", name))
            seen.add(name)

    drivers = {}
    for name in dict.fromkeys(c.inputs):
        drivers[name] = None
    for i, g in enumerate(c.gates):
        for name in (*g.inputs, *g.outputs):
            check_name(name)
        if len(g.inputs) != g.kind.n_inputs or len(g.outputs) != g.kind.n_outputs:
            found.append(Violation("bad-arity", _gate_label(i, g)))
        seen = set()
        for name in g.outputs:
            if name in seen:
                found.append(Violation("duplicate-name", name))
            seen.add(name)
            if name in drivers:
                found.append(Violation("multiple-drivers", name))
            else:
                drivers[name] = i

    for name in c.outputs:
        if name not in drivers:
            found.append(Violation("undriven-output", name))
    for i, g in enumerate(c.gates):
        for name in g.inputs:
            if name not in drivers:
                found.append(Violation("undriven-input", name))
    return found


def check_circuit(c):
    """Raise ValidationError if the circuit is structurally unsound."""
    found = validate_circuit(c)
    if found:
        raise ValidationError(found)


def build_netlist(c):
    """Map every net to its NetRecord.

    Records appear in definition order: primary inputs, then nets first
    referenced by .outputs, then nets first referenced by gates.  The
    circuit must validate.
    """
    check_circuit(c)
    table = {}

    def touch(net):
        if net not in table:
            table[net] = [_UNSET, []]
        return table[net]

    for net in c.inputs:
        table[net] = [None, []]
    for net in c.outputs:
        touch(net)[1].append(PO_SINK)
    for i, g in enumerate(c.gates):
        for pin, net in enumerate(g.inputs):
            touch(net)[1].append((i, pin))
        for net in g.outputs:
            touch(net)[0] = i
    return {
        net: NetRecord(net, source, tuple(sinks))
        for net, (source, sinks) in table.items()
    }


def detect_cycles(c):
    """Return an ordered gate-position cycle, or None if the graph is acyclic.

    Gate a depends on gate b when some input net of a is driven by b.  The
    search visits gates in declaration order, so the witness is stable.
    """
    check_circuit(c)
    driver = {net: i for i, g in enumerate(c.gates) for net in g.outputs}
    deps = [
        [driver[net] for net in g.inputs if net in driver] for g in c.gates
    ]
    state = [0] * len(c.gates)  # 0 new, 1 on path, 2 done
    path = []

    for root in range(len(c.gates)):
        if state[root]:
            continue
        stack = [(root, iter(deps[root]))]
        state[root] = 1
        path.append(root)
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state[nxt] == 1:
                    return path[path.index(nxt):]
                if state[nxt] == 0:
                    state[nxt] = 1
                    path.append(nxt)
                    stack.append((nxt, iter(deps[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                path.pop()
                stack.pop()
    return None
