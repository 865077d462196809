"""BLIF-subset reader and writer.

Accepted directives: .model, .inputs, .outputs, .names with one- or
two-input single-output covers, and .end.  A ``#`` starts a comment and a
trailing backslash continues a logical line.  Sequential and hierarchical
constructs (.latch, .subckt, .gate) are rejected as unsupported.

The intermediate format is the same dialect plus one extension,
``.copy <in> <out1> <out2>``, the explicit fanout gate.  parse_blif
rejects it; parse_intermediate accepts it.

Covers are classified by their on-set, so any row spelling of a supported
function is accepted: for example ``1- 1`` / ``-1 1`` and the three
minterm rows both read as OR.  A one-input cover with on-set {1} is the
identity; it emits no gate and instead aliases the output name to the
input name everywhere downstream, including in .outputs.
"""

from itertools import product

from .errors import BlifError, UnsupportedError
from .ir import IrCircuit, IrGate, IrGateKind

_COVER_KINDS = {
    (1, frozenset({"0"})): IrGateKind.NOT,
    (2, frozenset({"11"})): IrGateKind.AND,
    (2, frozenset({"00", "01", "10"})): IrGateKind.NAND,
    (2, frozenset({"01", "10", "11"})): IrGateKind.OR,
    (2, frozenset({"00"})): IrGateKind.NOR,
    (2, frozenset({"01", "10"})): IrGateKind.XOR,
    (2, frozenset({"00", "11"})): IrGateKind.XNOR,
}

_BUFFER = (1, frozenset({"1"}))

_EMIT_ROWS = {
    IrGateKind.NOT: ("0",),
    IrGateKind.AND: ("11",),
    IrGateKind.NAND: ("00", "01", "10"),
    IrGateKind.OR: ("01", "10", "11"),
    IrGateKind.NOR: ("00",),
    IrGateKind.XOR: ("01", "10"),
    IrGateKind.XNOR: ("00", "11"),
}

_REJECTED_DIRECTIVES = (".latch", ".subckt", ".gate", ".exdc", ".clock")


def classify_cover(rows, n_inputs, subject="cover"):
    """Classify a cover by its on-set; return a gate kind or None for identity.

    rows are (pattern, output_bit) pairs with patterns over {0,1,-}.  The
    expansion of the patterns must equal the on-set of one supported
    function exactly.  Rows with output bit 0 belong to off-set cover
    style, which this subset does not accept.
    """
    onset = set()
    for pattern, out in rows:
        if out != "1":
            raise UnsupportedError(
                f"{subject}: rows with output 0 are not supported"
            )
        choices = ["01" if ch == "-" else ch for ch in pattern]
        for minterm in product(*choices):
            onset.add("".join(minterm))
    key = (n_inputs, frozenset(onset))
    if key == _BUFFER:
        return None
    try:
        return _COVER_KINDS[key]
    except KeyError:
        shown = ",".join(sorted(onset)) or "empty"
        raise UnsupportedError(
            f"{subject}: unrecognized cover with on-set {{{shown}}}"
        ) from None


def _logical_lines(text):
    """Yield (line_number, tokens) with comments stripped and continuations joined."""
    raw = text.splitlines()
    i = 0
    while i < len(raw):
        start = i + 1
        piece = raw[i].split("#", 1)[0]
        while piece.rstrip().endswith("\\"):
            piece = piece.rstrip()[:-1]
            i += 1
            if i < len(raw):
                piece += " " + raw[i].split("#", 1)[0]
        tokens = piece.split()
        i += 1
        if tokens:
            yield start, tokens


def _parse(text, allow_copy):
    model = None
    inputs = []
    outputs = []
    gates = []
    aliases = {}
    ended = False

    lines = list(_logical_lines(text))
    pos = 0
    while pos < len(lines):
        lineno, tokens = lines[pos]
        head = tokens[0]
        if ended:
            if head == ".model":
                raise BlifError("only one .model block is supported", lineno)
            raise BlifError("content after .end", lineno)
        if not head.startswith("."):
            raise BlifError(f"expected a directive, got {head!r}", lineno)

        if head == ".model":
            if model is not None:
                raise BlifError("only one .model block is supported", lineno)
            if len(tokens) != 2:
                raise BlifError(".model takes exactly one name", lineno)
            model = tokens[1]
            pos += 1
        elif head == ".inputs":
            inputs.extend(tokens[1:])
            pos += 1
        elif head == ".outputs":
            outputs.extend(tokens[1:])
            pos += 1
        elif head == ".names":
            pos = _parse_names(lines, pos, gates, aliases)
        elif head == ".copy":
            if not allow_copy:
                raise BlifError(
                    ".copy is only valid in the intermediate format", lineno
                )
            if len(tokens) != 4:
                raise BlifError(".copy takes one input and two outputs", lineno)
            gates.append(IrGate(IrGateKind.COPY, (tokens[1],), (tokens[2], tokens[3])))
            pos += 1
        elif head == ".end":
            ended = True
            pos += 1
        elif head in _REJECTED_DIRECTIVES:
            raise UnsupportedError(f"unsupported construct {head}")
        else:
            raise BlifError(f"unknown directive {head}", lineno)

    return _resolve_aliases(
        IrCircuit(model or "top", tuple(inputs), tuple(outputs), tuple(gates)),
        aliases,
    )


def _parse_names(lines, pos, gates, aliases):
    lineno, tokens = lines[pos]
    nets = tokens[1:]
    if len(nets) < 2:
        if len(nets) == 1:
            raise UnsupportedError(
                f"constant cover for '{nets[0]}': .names needs at least one input"
            )
        raise BlifError(".names needs nets", lineno)
    *ins, out = nets
    if len(ins) > 2:
        raise UnsupportedError(
            f"gate '{out}' has {len(ins)} inputs; at most 2 are supported"
        )

    rows = []
    pos += 1
    while pos < len(lines) and not lines[pos][1][0].startswith("."):
        row_no, row = lines[pos]
        if len(row) != 2:
            raise BlifError("cover row must be '<pattern> <bit>'", row_no)
        pattern, bit = row
        if len(pattern) != len(ins) or any(ch not in "01-" for ch in pattern):
            raise BlifError(f"bad cover pattern {pattern!r}", row_no)
        if bit not in "01":
            raise BlifError(f"bad cover output bit {bit!r}", row_no)
        rows.append((pattern, bit))
        pos += 1

    kind = classify_cover(rows, len(ins), subject=f"gate '{out}'")
    if kind is None:
        _record_alias(aliases, out, ins[0], gates, lineno)
    else:
        gates.append(IrGate(kind, tuple(ins), (out,)))
    return pos


def _record_alias(aliases, out, src, gates, lineno):
    driven = {net for g in gates for net in g.outputs}
    if out in aliases or out in driven:
        raise BlifError(f"multiple drivers for net '{out}'", lineno)
    aliases[out] = src


def _resolve_aliases(c, aliases):
    if not aliases:
        return c
    driven = {net for g in c.gates for net in g.outputs} | set(c.inputs)
    clash = sorted(set(aliases) & driven)
    if clash:
        raise BlifError(f"multiple drivers for net '{clash[0]}'")

    def resolve(name):
        seen = set()
        while name in aliases:
            if name in seen:
                raise BlifError(f"buffer alias cycle involving '{name}'")
            seen.add(name)
            name = aliases[name]
        return name

    gates = tuple(
        IrGate(g.kind, tuple(resolve(n) for n in g.inputs), g.outputs)
        for g in c.gates
    )
    outputs = tuple(resolve(n) for n in c.outputs)
    return IrCircuit(c.name, c.inputs, outputs, gates)


def parse_blif(text):
    """Parse plain BLIF text into an IrCircuit (no validation)."""
    return _parse(text, allow_copy=False)


def parse_intermediate(text):
    """Parse intermediate-format text, which may contain .copy gates."""
    return _parse(text, allow_copy=True)


def write_intermediate(c):
    """Serialize a circuit to intermediate-format text.

    COPY gates become .copy lines and every other kind becomes a .names
    block with its canonical minterm rows, so a COPY-free circuit is plain
    BLIF.  Emission is deterministic: same circuit, same bytes.
    """
    out = [f".model {c.name}"]
    out.append(" ".join((".inputs", *c.inputs)).rstrip())
    out.append(" ".join((".outputs", *c.outputs)).rstrip())
    for g in c.gates:
        if g.kind is IrGateKind.COPY:
            out.append(f".copy {g.inputs[0]} {g.outputs[0]} {g.outputs[1]}")
            continue
        out.append(" ".join((".names", *g.inputs, g.outputs[0])))
        for pattern in _EMIT_ROWS[g.kind]:
            out.append(f"{pattern} 1")
    out.append(".end")
    return "\n".join(out) + "\n"
