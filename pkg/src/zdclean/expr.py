"""The ring-construction expression language.

Grammar (whitespace-insensitive, ``x`` is left-associative)::

    expr  := term { "x" term }
    term  := "Z" int | "Bool(" int ")" | "T" int "(" expr ")" | "M" int "(" expr ")"
           | "GR(" expr "," group ")" | "Table(" path ")" | "(" expr ")"
    group := gterm { "x" gterm }
    gterm := "C" int | "S3" | "(" group ")"

``×`` and ``⊕`` are accepted as spellings of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .constructors import (
    GroupRing,
    boolean_ring,
    cyclic_group,
    direct_product,
    group_product,
    group_ring,
    make_zn,
    matrix_ring,
    symmetric_group_s3,
)
from .ring import DEFAULT_CAP, CapExceeded, FiniteGroup, FiniteRing, RingError
from .tablefile import load_table

MAX_INT = 1 << 20


class ExprSyntaxError(RingError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        where = "end of input" if pos >= len(text) else f"position {pos}"
        super().__init__(f"{message} at {where}: {text!r}")


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class Bool:
    k: int


@dataclass(frozen=True)
class Product:
    left: "RingExpr"
    right: "RingExpr"


@dataclass(frozen=True)
class Matrix:
    base: "RingExpr"
    k: int


@dataclass(frozen=True)
class Triangular:
    base: "RingExpr"
    k: int


@dataclass(frozen=True)
class GroupRingExpr:
    base: "RingExpr"
    group: "GroupExpr"


@dataclass(frozen=True)
class Table:
    path: str


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class GProduct:
    left: "GroupExpr"
    right: "GroupExpr"


@dataclass(frozen=True)
class S3:
    pass


RingExpr = Union[Zn, Bool, Product, Matrix, Triangular, GroupRingExpr, Table]
GroupExpr = Union[Cyclic, GProduct, S3]


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace("×", "x").replace("⊕", "x")
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ExprSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, word: str) -> bool:
        self.skip()
        return self.text.startswith(word, self.pos)

    def eat(self, word: str) -> None:
        if not self.peek(word):
            self.error(f"expected {word!r}")
        self.pos += len(word)

    def integer(self, low: int) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        value = int(self.text[start:self.pos])
        if not low <= value <= MAX_INT:
            self.error(f"integer {value} out of range [{low}, {MAX_INT}]", start)
        return value

    def done(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")

    def expr(self) -> RingExpr:
        node = self.term()
        while self.peek("x"):
            self.pos += 1
            node = Product(node, self.term())
        return node

    def term(self) -> RingExpr:
        self.skip()
        if self.peek("Bool("):
            self.pos += 5
            k = self.integer(0)
            self.eat(")")
            return Bool(k)
        if self.peek("GR("):
            self.pos += 3
            base = self.expr()
            self.eat(",")
            group = self.group()
            self.eat(")")
            return GroupRingExpr(base, group)
        if self.peek("Table("):
            self.pos += 6
            end = self.text.find(")", self.pos)
            if end < 0:
                self.error("unterminated Table(", len(self.text))
            path = self.text[self.pos:end].strip()
            if not path:
                self.error("empty table path")
            self.pos = end + 1
            return Table(path)
        for prefix, node in (("T", Triangular), ("M", Matrix)):
            if self.peek(prefix):
                self.pos += 1
                k = self.integer(1)
                self.eat("(")
                base = self.expr()
                self.eat(")")
                return node(base, k)
        if self.peek("Z"):
            self.pos += 1
            return Zn(self.integer(1))
        if self.peek("("):
            self.pos += 1
            node = self.expr()
            self.eat(")")
            return node
        self.error("expected a ring term")

    def group(self) -> GroupExpr:
        node = self.gterm()
        while self.peek("x"):
            self.pos += 1
            node = GProduct(node, self.gterm())
        return node

    def gterm(self) -> GroupExpr:
        if self.peek("S3"):
            self.pos += 2
            return S3()
        if self.peek("C"):
            self.pos += 1
            return Cyclic(self.integer(1))
        if self.peek("("):
            self.pos += 1
            node = self.group()
            self.eat(")")
            return node
        self.error("expected a group term")


def parse_expr(text: str) -> RingExpr:
    p = _Parser(text)
    node = p.expr()
    p.done()
    return node


def parse_group(text: str) -> GroupExpr:
    p = _Parser(text)
    node = p.group()
    p.done()
    return node


def render(node) -> str:
    """Canonical spelling; ``parse_expr(render(e)) == e``."""
    if isinstance(node, Zn):
        return f"Z{node.n}"
    if isinstance(node, Bool):
        return f"Bool({node.k})"
    if isinstance(node, Product):
        right = render(node.right)
        if isinstance(node.right, Product):
            right = f"({right})"
        return f"{render(node.left)} x {right}"
    if isinstance(node, Matrix):
        return f"M{node.k}({render(node.base)})"
    if isinstance(node, Triangular):
        return f"T{node.k}({render(node.base)})"
    if isinstance(node, GroupRingExpr):
        return f"GR({render(node.base)}, {render(node.group)})"
    if isinstance(node, Table):
        return f"Table({node.path})"
    if isinstance(node, Cyclic):
        return f"C{node.n}"
    if isinstance(node, S3):
        return "S3"
    if isinstance(node, GProduct):
        right = render(node.right)
        if isinstance(node.right, GProduct):
            right = f"({right})"
        return f"{render(node.left)} x {right}"
    raise TypeError(f"not an expression node: {node!r}")


def eval_group(node: GroupExpr) -> FiniteGroup:
    if isinstance(node, Cyclic):
        return cyclic_group(node.n)
    if isinstance(node, S3):
        return symmetric_group_s3()
    if isinstance(node, GProduct):
        return group_product(eval_group(node.left), eval_group(node.right))
    raise TypeError(f"not a group expression: {node!r}")


def _group_order(node: GroupExpr) -> int:
    if isinstance(node, Cyclic):
        return node.n
    if isinstance(node, S3):
        return 6
    return _group_order(node.left) * _group_order(node.right)


def _eval(node: RingExpr, cap: int) -> tuple[FiniteRing, GroupRing | None]:
    name = render(node)
    if isinstance(node, Zn):
        R = make_zn(node.n, cap)
    elif isinstance(node, Bool):
        if node.k >= 64 or 2 ** node.k > cap:
            raise CapExceeded(name, 2 ** min(node.k, 64), cap)
        R = boolean_ring(node.k, cap)
    elif isinstance(node, Product):
        left, _ = _eval(node.left, cap)
        right, _ = _eval(node.right, cap)
        if left.order * right.order > cap:
            raise CapExceeded(name, left.order * right.order, cap)
        R = direct_product(left, right, cap)
    elif isinstance(node, (Matrix, Triangular)):
        base, _ = _eval(node.base, cap)
        k = node.k
        cells = k * k if isinstance(node, Matrix) else k * (k + 1) // 2
        if base.order > 1 and (cells > 64 or base.order ** cells > cap):
            raise CapExceeded(name, base.order ** min(cells, 64), cap)
        R = matrix_ring(base, k, "full" if isinstance(node, Matrix) else "upper_triangular", cap)
    elif isinstance(node, GroupRingExpr):
        base, _ = _eval(node.base, cap)
        g_order = _group_order(node.group)
        if base.order > 1 and (g_order > 64 or base.order ** g_order > cap):
            raise CapExceeded(name, base.order ** min(g_order, 64), cap)
        gr = group_ring(base, eval_group(node.group), cap)
        return _named(gr.ring, name), gr
    elif isinstance(node, Table):
        R = load_table(node.path)
        if R.order > cap:
            raise CapExceeded(name, R.order, cap)
    else:
        raise TypeError(f"not a ring expression: {node!r}")
    return _named(R, name), None


def _named(R: FiniteRing, name: str) -> FiniteRing:
    R.provenance = name
    return R


def eval_expr(node: RingExpr | str, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Build the ring an expression denotes; its provenance is the canonical rendering."""
    if isinstance(node, str):
        node = parse_expr(node)
    return _eval(node, cap)[0]


def eval_with_group(node: RingExpr | str, cap: int = DEFAULT_CAP) -> tuple[FiniteRing, GroupRing | None]:
    """Like :func:`eval_expr`, also returning the group-ring structure for GR(...) roots."""
    if isinstance(node, str):
        node = parse_expr(node)
    return _eval(node, cap)
