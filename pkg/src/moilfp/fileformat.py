"""Instance text format.

::

    MOILFP 1
    dims n m k
    psi num <n coeffs> <lambda>
    psi den <n coeffs> <mu>
    crit i num <n coeffs> <alpha_i>     # i = 1..k
    crit i den <n coeffs> <beta_i>
    row j <n coeffs> <le|ge|eq> <b_j>   # j = 1..m

``#`` starts a comment; numbers are integers or ``p/q``.
"""
from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .model import FractionalObjective, Instance, RELATIONS, fmt, rational

MAGIC = "MOILFP"
VERSION = "1"


def _numbers(tokens, lineno, what):
    out = []
    for tok in tokens:
        try:
            out.append(rational(tok))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad number {tok!r} in {what}", lineno) from None
    return out


def _int(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno) from None


def parse(text: str, name: str = "") -> Instance:
    """Parse instance text. Raises :class:`ParseError` carrying the offending line number."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, head = lines[0]
    if head != [MAGIC, VERSION]:
        raise ParseError(f"expected header '{MAGIC} {VERSION}'", lineno)
    if len(lines) < 2 or lines[1][1][0] != "dims":
        raise ParseError("expected 'dims n m k'", lines[1][0] if len(lines) > 1 else lineno)
    lineno, dims = lines[1]
    if len(dims) != 4:
        raise ParseError("expected 'dims n m k'", lineno)
    n, m, k = (_int(t, lineno, "dimension") for t in dims[1:])
    if n < 1 or m < 1 or k < 1:
        raise ParseError("dimensions must be positive", lineno)

    psi = {}
    crit = {}
    rows = {}
    for lineno, tok in lines[2:]:
        kw = tok[0]
        if kw == "psi":
            if len(tok) != n + 3 or tok[1] not in ("num", "den"):
                raise ParseError(f"expected 'psi num|den' with {n} coefficients and a constant", lineno)
            if tok[1] in psi:
                raise ParseError(f"duplicate 'psi {tok[1]}'", lineno)
            psi[tok[1]] = _numbers(tok[2:], lineno, "psi")
        elif kw == "crit":
            if len(tok) != n + 4 or tok[2] not in ("num", "den"):
                raise ParseError(f"expected 'crit i num|den' with {n} coefficients and a constant", lineno)
            i = _int(tok[1], lineno, "criterion index")
            if not 1 <= i <= k:
                raise ParseError(f"criterion index {i} outside 1..{k}", lineno)
            if (i, tok[2]) in crit:
                raise ParseError(f"duplicate 'crit {i} {tok[2]}'", lineno)
            crit[(i, tok[2])] = _numbers(tok[3:], lineno, "criterion")
        elif kw == "row":
            if len(tok) != n + 4:
                raise ParseError(f"expected 'row j' with {n} coefficients, a relation and a right-hand side", lineno)
            j = _int(tok[1], lineno, "row index")
            if not 1 <= j <= m:
                raise ParseError(f"row index {j} outside 1..{m}", lineno)
            if j in rows:
                raise ParseError(f"duplicate row {j}", lineno)
            rel = tok[-2]
            if rel not in RELATIONS:
                raise ParseError(f"relation must be one of {', '.join(RELATIONS)}, got {rel!r}", lineno)
            coeffs = _numbers(tok[2:-2], lineno, "row")
            rows[j] = (coeffs, rel, _numbers(tok[-1:], lineno, "row")[0])
        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno)

    last = lines[-1][0]
    for part in ("num", "den"):
        if part not in psi:
            raise ParseError(f"missing 'psi {part}'", last)
    for i in range(1, k + 1):
        for part in ("num", "den"):
            if (i, part) not in crit:
                raise ParseError(f"missing 'crit {i} {part}'", last)
    for j in range(1, m + 1):
        if j not in rows:
            raise ParseError(f"missing 'row {j}'", last)

    def objective(num, den):
        return FractionalObjective(num[:-1], num[-1], den[:-1], den[-1])

    return Instance(
        A=[rows[j][0] for j in range(1, m + 1)],
        b=[rows[j][2] for j in range(1, m + 1)],
        criteria=[objective(crit[(i, "num")], crit[(i, "den")]) for i in range(1, k + 1)],
        master=objective(psi["num"], psi["den"]),
        relations=[rows[j][1] for j in range(1, m + 1)],
        name=name,
    )


def dump(inst: Instance) -> str:
    def line(prefix, coeffs, const):
        return " ".join([prefix] + [fmt(c) for c in coeffs] + [fmt(const)])

    out = [f"{MAGIC} {VERSION}"]
    if inst.name:
        out.append(f"# {inst.name}")
    out.append(f"dims {inst.n} {inst.m} {inst.k}")
    out.append(line("psi num", inst.master.num, inst.master.num_const))
    out.append(line("psi den", inst.master.den, inst.master.den_const))
    for i, c in enumerate(inst.criteria, 1):
        out.append(line(f"crit {i} num", c.num, c.num_const))
        out.append(line(f"crit {i} den", c.den, c.den_const))
    for j, (a, rel, b) in enumerate(zip(inst.A, inst.relations, inst.b), 1):
        out.append(" ".join([f"row {j}"] + [fmt(c) for c in a] + [rel, fmt(b)]))
    return "\n".join(out) + "\n"


def load(path) -> Instance:
    path = Path(path)
    return parse(path.read_text(), name=path.stem)


def save(inst: Instance, path) -> None:
    Path(path).write_text(dump(inst))
