"""Plain-text table format for rings.

    ring <n>
    zero <i>
    one <i>
    <n lines of the addition table>
    <n lines of the multiplication table>

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .ring import FiniteRing, MalformedTable, validate_axioms


def _tokens(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def _header(row: list[str], key: str, lineno: int) -> int:
    if len(row) != 2 or row[0] != key:
        raise MalformedTable(f"line {lineno}: expected '{key} <int>', got {' '.join(row)!r}")
    try:
        return int(row[1])
    except ValueError:
        raise MalformedTable(f"line {lineno}: {row[1]!r} is not an integer") from None


def parse_table(text: str, provenance: str = "") -> FiniteRing:
    """Parse the table format and fully validate the ring axioms."""
    rows = _tokens(text)
    if len(rows) < 3:
        raise MalformedTable("missing 'ring', 'zero' or 'one' header")
    n = _header(rows[0], "ring", 1)
    zero = _header(rows[1], "zero", 2)
    one = _header(rows[2], "one", 3)
    if n < 1:
        raise MalformedTable(f"ring order must be positive, got {n}")
    body = rows[3:]
    if len(body) != 2 * n:
        raise MalformedTable(f"expected {2 * n} table rows, found {len(body)}")
    try:
        table = [[int(v) for v in row] for row in body]
    except ValueError as exc:
        raise MalformedTable(f"non-integer table entry: {exc}") from None
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedTable(f"table row {i} has {len(row)} entries, expected {n}")
    return validate_axioms(table[:n], table[n:], zero, one, provenance=provenance)


def load_table(path: str | Path) -> FiniteRing:
    path = Path(path)
    return parse_table(path.read_text(), provenance=f"Table({path})")


def format_table(R: FiniteRing) -> str:
    lines = [f"ring {R.order}", f"zero {R.zero}", f"one {R.one}"]
    for t in (R.add_table, R.mul_table):
        lines.extend(" ".join(str(int(v)) for v in row) for row in t)
    return "\n".join(lines) + "\n"


def save_table(R: FiniteRing, path: str | Path) -> None:
    Path(path).write_text(format_table(R))
