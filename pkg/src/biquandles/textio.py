"""Plain-text file formats.

Table files::

    <kind>            quandle | biquandle | group | structure
    <n>
    <n rows of n space-separated integers>
    [blank line]
    <second block>    biquandle: the over table; structure: n lines, betas[y]

For biquandles the first block is the under table (x ⊻ y). For structures the
first block is the base quandle table and line ``y`` of the second block lists
the images of ``betas[y]``. Lines starting with ``#`` are comments.

Group listings (output only)::

    degree <n>
    order <k>
    <k lines, one permutation each in image notation, sorted>
    [generators <g>
     <g lines>]
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import TableError
from .structures import BiquandleStructure
from .tables import Biquandle, Group, Quandle, Table

KINDS = ("quandle", "biquandle", "group", "structure")
_BLOCKS = {"quandle": 1, "group": 1, "biquandle": 2, "structure": 2}


class ParseError(TableError):
    def __init__(self, source: str, line: int, col: int, message: str):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.source, self.line, self.col = source, line, col


@dataclass(frozen=True)
class Document:
    """A parsed file before any axiom checking."""

    kind: str
    n: int
    blocks: tuple[Table, ...]


def parse(text: str, source: str = "<input>") -> Document:
    raw_lines = {i + 1: raw.split("#", 1)[0] for i, raw in enumerate(text.splitlines())}
    lines = [(no, s.strip()) for no, s in raw_lines.items() if s.strip()]
    if not lines:
        raise ParseError(source, 1, 1, "empty input")
    no, kind = lines[0]
    if kind not in KINDS:
        raise ParseError(source, no, 1, f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if len(lines) < 2:
        raise ParseError(source, no, 1, "missing order line")
    no, order = lines[1]
    try:
        n = int(order)
    except ValueError:
        raise ParseError(source, no, 1, f"order must be an integer, got {order!r}") from None
    if n < 1:
        raise ParseError(source, no, 1, f"order must be positive, got {n}")
    body = lines[2:]
    want = _BLOCKS[kind] * n
    if len(body) != want:
        at = body[want][0] if len(body) > want else (body[-1][0] + 1 if body else no + 1)
        raise ParseError(source, at, 1, f"expected {want} rows for a {kind} of order {n}, got {len(body)}")
    rows = []
    for no, s in body:
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", raw_lines[no])]
        if len(tokens) != n:
            raise ParseError(source, no, 1, f"expected {n} entries, got {len(tokens)}")
        row = []
        for col, tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(source, no, col, f"not an integer: {tok!r}") from None
            if not 0 <= v < n:
                raise ParseError(source, no, col, f"entry {v} outside 0..{n - 1}")
            row.append(v)
        rows.append(tuple(row))
    blocks = tuple(tuple(rows[i:i + n]) for i in range(0, len(rows), n))
    return Document(kind, n, blocks)


def read(path: str | Path) -> Document:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise TableError(f"{path}: {exc.strerror}") from None
    return parse(text, str(path))


def build(doc: Document):
    """Turn a document into its validated object (raises ``AxiomError`` on failure)."""
    if doc.kind == "quandle":
        return Quandle(doc.blocks[0])
    if doc.kind == "biquandle":
        return Biquandle(doc.blocks[0], doc.blocks[1])
    if doc.kind == "group":
        return Group(doc.blocks[0])
    return BiquandleStructure(Quandle(doc.blocks[0]), doc.blocks[1])


def _block(rows: Sequence[Sequence[int]]) -> str:
    return "".join(" ".join(map(str, r)) + "\n" for r in rows)


def dumps(obj) -> str:
    if isinstance(obj, Quandle):
        return f"quandle\n{obj.n}\n" + _block(obj.table)
    if isinstance(obj, Biquandle):
        return f"biquandle\n{obj.n}\n" + _block(obj.under) + "\n" + _block(obj.over)
    if isinstance(obj, Group):
        return f"group\n{obj.n}\n" + _block(obj.mul)
    if isinstance(obj, BiquandleStructure):
        return f"structure\n{obj.n}\n" + _block(obj.base.table) + "\n" + _block(obj.betas)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def write(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj))


def format_group(G, with_generators: bool = False) -> str:
    out = f"degree {G.degree}\norder {G.order}\n" + _block(G.elements)
    if with_generators and G.generators is not None:
        out += f"generators {len(G.generators)}\n" + _block(G.generators)
    return out
