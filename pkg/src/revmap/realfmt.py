"""RevLib-style .real serialization.

write_real emits, in this order: .version 2.0, .numvars, .variables (one
name per line of the circuit), .inputs (the net name for a primary-input
line, the constant's bit for an ancilla line), .outputs (the primary
output name, or g<k> for the k-th garbage line), .constants (a word over
{0,1,-}, '-' marking non-constant lines), .garbage (a word over {1,-}),
then the gate list between .begin and .end with one ``t<n>`` gate per
line, controls first and target last.

parse_real accepts that layout plus ``#`` comments and blank lines, with
the header directives in any order before .begin.  Gates above two
controls (t4 and up) are out of the supported set.  The format carries no
circuit name, so a parsed circuit is named "".
"""

from .errors import RealFormatError, UnsupportedError
from .ir import Line, RevCircuit, RevGate


def write_real(r):
    out = [".version 2.0", f".numvars {r.width}"]
    out.append(" ".join((".variables", *(ln.name for ln in r.lines))))
    out.append(
        " ".join(
            (
                ".inputs",
                *(
                    ln.name if ln.constant is None else str(ln.constant)
                    for ln in r.lines
                ),
            )
        )
    )
    labels = []
    garbage_seen = 0
    for ln in r.lines:
        if ln.output is None:
            labels.append(f"g{garbage_seen}")
            garbage_seen += 1
        else:
            labels.append(ln.output)
    out.append(" ".join((".outputs", *labels)))
    out.append(
        ".constants "
        + "".join(
            "-" if ln.constant is None else str(ln.constant) for ln in r.lines
        )
    )
    out.append(
        ".garbage " + "".join("1" if ln.output is None else "-" for ln in r.lines)
    )
    out.append(".begin")
    for g in r.gates:
        touched = (*g.controls, g.target)
        out.append(
            f"t{len(touched)} " + " ".join(r.lines[i].name for i in touched)
        )
    out.append(".end")
    return "\n".join(out) + "\n"


def _tokenized(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def parse_real(text):
    width = None
    variables = None
    inputs = None
    outputs = None
    constants = None
    garbage = None
    gate_rows = []
    in_body = False
    ended = False

    for lineno, tokens in _tokenized(text):
        head = tokens[0]
        if ended:
            raise RealFormatError("content after .end", lineno)
        if in_body:
            if head == ".end":
                ended = True
            else:
                gate_rows.append((lineno, tokens))
            continue
        if head == ".version":
            continue
        if head == ".numvars":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise RealFormatError(".numvars takes one number", lineno)
            width = int(tokens[1])
        elif head == ".variables":
            variables = tokens[1:]
        elif head == ".inputs":
            inputs = tokens[1:]
        elif head == ".outputs":
            outputs = tokens[1:]
        elif head == ".constants":
            constants = _word(tokens, "01-", lineno)
        elif head == ".garbage":
            garbage = _word(tokens, "1-", lineno)
        elif head == ".begin":
            in_body = True
        else:
            raise RealFormatError(f"unknown directive {head}", lineno)

    if width is None:
        raise RealFormatError("missing .numvars")
    if variables is None:
        raise RealFormatError("missing .variables")
    if not in_body or not ended:
        raise RealFormatError("missing .begin/.end body")

    constants = constants if constants is not None else "-" * width
    garbage = garbage if garbage is not None else "-" * width
    for label, row in (
        (".variables", variables),
        (".inputs", inputs),
        (".outputs", outputs),
    ):
        if row is not None and len(row) != width:
            raise RealFormatError(
                f"inconsistent header: {label} lists {len(row)} entries "
                f"for {width} lines"
            )
    for label, word in ((".constants", constants), (".garbage", garbage)):
        if len(word) != width:
            raise RealFormatError(
                f"inconsistent header: {label} word has length {len(word)} "
                f"for {width} lines"
            )
    if len(set(variables)) != width:
        raise RealFormatError("duplicate names in .variables")

    lines = []
    for i, name in enumerate(variables):
        constant = None if constants[i] == "-" else int(constants[i])
        if garbage[i] == "1":
            output = None
        else:
            output = outputs[i] if outputs is not None else name
        lines.append(Line(name, constant=constant, output=output))

    index_of = {name: i for i, name in enumerate(variables)}
    gates = []
    for lineno, tokens in gate_rows:
        gates.append(_parse_gate(tokens, index_of, lineno))
    try:
        return RevCircuit("", tuple(lines), tuple(gates))
    except ValueError as exc:
        raise RealFormatError(str(exc)) from None


def _word(tokens, alphabet, lineno):
    if len(tokens) != 2 or any(ch not in alphabet for ch in tokens[1]):
        raise RealFormatError(
            f"{tokens[0]} takes one word over {{{','.join(alphabet)}}}", lineno
        )
    return tokens[1]


def _parse_gate(tokens, index_of, lineno):
    head = tokens[0]
    if not head.startswith("t") or not head[1:].isdigit():
        raise RealFormatError(f"unknown gate {head!r}", lineno)
    n = int(head[1:])
    if n > 3:
        raise UnsupportedError(f"unsupported gate t{n}: at most 2 controls")
    if n < 1:
        raise RealFormatError(f"bad gate size t{n}", lineno)
    if len(tokens) != n + 1:
        raise RealFormatError(f"t{n} takes exactly {n} lines", lineno)
    try:
        touched = [index_of[name] for name in tokens[1:]]
    except KeyError as exc:
        raise RealFormatError(f"unknown line {exc.args[0]!r}", lineno) from None
    try:
        return RevGate(tuple(touched[:-1]), touched[-1])
    except ValueError as exc:
        raise RealFormatError(str(exc), lineno) from None
