"""Text formats: divisor classes, Mukai vectors, surface descriptors, reports.

Class      ``[c1,...,c10;t]``  (``;t`` optional, t in {0, 1})
Vector     ``(r,[c1,...,c10;t],s)``  with s = 2a, i.e. v = (r, L, s/2)
Descriptor one ``key = value`` per line, ``#`` starts a comment::

    classical = true
    ample = [3,3,-1,0,0,0,0,0,0,0;0]
    root = [0,0,1,0,0,0,0,0,0,0]
    coeff_bound = 6
    height_bound = 4
"""

from __future__ import annotations

import json
import re
from typing import Any

from .lattice import RANK, NSClass
from .mukai import MukaiVector
from .surface import DEFAULT_COEFF_BOUND, DEFAULT_HEIGHT_BOUND, SurfaceModel


class FormatError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_INT = re.compile(r"[+-]?\d+")


class _Cursor:
    def __init__(self, text: str, line: int = 1, col0: int = 1):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    def error(self, message: str) -> FormatError:
        return FormatError(message, self.line, self.col0 + self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected trailing text {self.text[self.pos:]!r}")


def _class(cur: _Cursor, allow_torsion: bool = True) -> NSClass:
    cur.expect("[")
    start = cur.pos
    coords = [cur.integer()]
    while cur.peek() == ",":
        cur.expect(",")
        coords.append(cur.integer())
    torsion = 0
    if cur.peek() == ";":
        if not allow_torsion:
            raise cur.error("a torsion bit is not allowed here")
        cur.expect(";")
        torsion = cur.integer()
        if torsion not in (0, 1):
            raise cur.error(f"torsion bit must be 0 or 1, got {torsion}")
    if len(coords) != RANK:
        cur.pos = start
        raise cur.error(f"expected {RANK} coordinates, got {len(coords)}")
    cur.expect("]")
    return NSClass(tuple(coords), torsion)


def parse_class(text: str, line: int = 1, column: int = 1,
                allow_torsion: bool = True) -> NSClass:
    cur = _Cursor(text, line, column)
    x = _class(cur, allow_torsion)
    cur.end()
    return x


def parse_vector(text: str) -> MukaiVector:
    cur = _Cursor(text)
    cur.expect("(")
    r = cur.integer()
    cur.expect(",")
    L = _class(cur)
    cur.expect(",")
    s = cur.integer()
    cur.expect(")")
    cur.end()
    v = MukaiVector(r, L, s)
    if not v.parity_ok():
        raise FormatError(f"r = {r} and s = {s} must have the same parity", 1, 1)
    return v


def format_vector(v: MukaiVector) -> str:
    return str(v)


def _bool(text: str, cur: _Cursor) -> bool:
    t = text.strip()
    if t == "true":
        return True
    if t == "false":
        return False
    raise cur.error(f"expected true or false, got {t!r}")


def parse_descriptor(text: str) -> SurfaceModel:
    """Parse a surface descriptor; validation is left to the caller."""
    fields: dict[str, Any] = {}
    roots = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].rstrip("\r")
        if not body.strip():
            continue
        if "=" not in body:
            raise FormatError("expected 'key = value'", lineno, len(body) - len(body.lstrip()) + 1)
        key_part, value = body.split("=", 1)
        key = key_part.strip()
        vcol = len(key_part) + 2
        cur = _Cursor(value, lineno, vcol)
        if key == "root":
            roots.append(parse_class(value, lineno, vcol, allow_torsion=False))
            continue
        if key in fields:
            raise FormatError(f"duplicate key {key!r}", lineno, 1)
        if key == "classical":
            fields[key] = _bool(value, cur)
        elif key == "ample":
            fields[key] = parse_class(value, lineno, vcol)
        elif key in ("coeff_bound", "height_bound"):
            n = cur.integer()
            cur.end()
            fields[key] = n
        else:
            raise FormatError(f"unknown key {key!r}", lineno, 1)
    for required in ("classical", "ample"):
        if required not in fields:
            raise FormatError(f"missing required key {required!r}", 1, 1)
    return SurfaceModel(
        classical=fields["classical"],
        nodal_roots=tuple(roots),
        ample=fields["ample"],
        coeff_bound=fields.get("coeff_bound", DEFAULT_COEFF_BOUND),
        height_bound=fields.get("height_bound", DEFAULT_HEIGHT_BOUND),
    )


def format_descriptor(model: SurfaceModel) -> str:
    lines = [f"classical = {'true' if model.classical else 'false'}",
             f"ample = {model.ample}"]
    for d in model.nodal_roots:
        lines.append("root = [" + ",".join(str(c) for c in d.free) + "]")
    lines.append(f"coeff_bound = {model.coeff_bound}")
    lines.append(f"height_bound = {model.height_bound}")
    return "\n".join(lines) + "\n"


# Reports

def _scalar(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _flatten(prefix: str, obj: Any, out: list[tuple[str, str]]):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}.{i}", v, out)
    else:
        out.append((prefix, _scalar(obj)))


def render_report(report: dict[str, Any], as_json: bool = False) -> str:
    """Key-value lines (``a.b = value``) by default, or JSON. Key order is preserved."""
    if as_json:
        return json.dumps(report, indent=2) + "\n"
    rows: list[tuple[str, str]] = []
    _flatten("", report, rows)
    return "".join(f"{k} = {v}\n" for k, v in rows)


def parse_report(text: str) -> dict[str, str]:
    """Inverse of the key-value rendering, values left as text."""
    out = {}
    for line in text.splitlines():
        if line.strip():
            k, v = line.split(" = ", 1)
            out[k] = v
    return out
