"""Levelize a fanout-free circuit into slots.

Slot 0 holds the primary input nets and no gates.  Each later slot takes
every unplaced gate whose inputs are all available after the previous
slot, then updates the available-net set: consumed nets leave, the new
gates' outputs arrive, untouched nets pass through.  The loop stops when
the available set equals the primary output set, which on a fanout-free
acyclic circuit coincides with all gates being placed.

Nets nobody will ever read (unused primary inputs, dangling gate outputs
that are not primary outputs) are dropped from the working set as soon as
they appear so the stopping test stays exact; slot 0 still lists every
primary input.
"""

from .errors import FanoutError, UnsupportedError
from .ir import PO_SINK, Slot, SlottedCircuit, build_netlist


def slot_circuit(c):
    records = build_netlist(c)
    for net, rec in records.items():
        if len(rec.sinks) > 1:
            raise FanoutError(
                f"net '{net}' has {len(rec.sinks)} sinks; "
                "run fanout preprocessing first"
            )

    goal = set(c.outputs)
    consumer = {
        net: rec.sinks[0][0]
        for net, rec in records.items()
        if rec.sinks and rec.sinks[0] != PO_SINK
    }
    placed = set()

    def alive(net):
        if net in goal:
            return True
        return net in consumer and consumer[net] not in placed

    working = [net for net in c.inputs if alive(net)]
    slots = [Slot((), tuple(c.inputs))]

    while set(working) != goal:
        ready = set(working)
        chosen = tuple(
            i
            for i, g in enumerate(c.gates)
            if i not in placed and all(net in ready for net in g.inputs)
        )
        if not chosen:
            left = ", ".join(f"g{i}" for i in range(len(c.gates)) if i not in placed)
            raise UnsupportedError(
                f"slotting made no progress; unplaced gates: {left}"
            )
        placed.update(chosen)
        consumed = {net for i in chosen for net in c.gates[i].inputs}
        fresh = [
            net for i in chosen for net in c.gates[i].outputs if alive(net)
        ]
        working = fresh + [net for net in working if net not in consumed]
        slots.append(Slot(chosen, tuple(working)))
    return SlottedCircuit(c, tuple(slots))
