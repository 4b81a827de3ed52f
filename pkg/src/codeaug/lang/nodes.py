"""Syntax tree for the supported mini-language.

Nodes are plain dataclasses. Structural equality intentionally ignores
source positions, inferred expression types and the brace-elision print
flag, so two parses of differently formatted but structurally identical
programs compare equal.

`children`/`node_at`/`set_child` give every node a stable child indexing
(dataclass field order, lists flattened in place) which transform sites
use to address nodes by index path from the tree root.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Node:
    pass


def _pos_field():
    # (line, col) of the first token; metadata only, never compared.
    return field(default=(0, 0), compare=False, repr=False)


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------


@dataclass
class Expr(Node):
    pass


@dataclass
class IntLit(Expr):
    value: int
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class FloatLit(Expr):
    value: float
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class CharLit(Expr):
    value: int  # code point, 0..255
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class StringLit(Expr):
    value: str  # decoded text
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class Ident(Expr):
    name: str
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class Index(Expr):
    base: Expr
    index: Expr
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class Call(Expr):
    name: str
    args: list[Expr]
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class Unary(Expr):
    op: str  # "-", "+", "!", "++", "--"
    operand: Expr
    postfix: bool = False
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class Binary(Expr):
    op: str  # arithmetic, comparison or logical operator
    lhs: Expr
    rhs: Expr
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


@dataclass
class Assign(Expr):
    target: Expr  # Ident or Index
    value: Expr
    pos: tuple = _pos_field()
    ty: str = field(default="", compare=False, repr=False)


# ---------------------------------------------------------------------------
# Statements
# ---------------------------------------------------------------------------


@dataclass
class Stmt(Node):
    pass


@dataclass
class Block(Stmt):
    stmts: list[Stmt]
    # True when the enclosing construct prints this single-statement body
    # without braces. Surface detail only: excluded from equality.
    elide_braces: bool = field(default=False, compare=False)
    pos: tuple = _pos_field()


@dataclass
class If(Stmt):
    cond: Expr
    then: Block
    orelse: Optional[Block] = None
    pos: tuple = _pos_field()


@dataclass
class While(Stmt):
    cond: Expr
    body: Block = None
    pos: tuple = _pos_field()


@dataclass
class For(Stmt):
    init: Optional[Stmt]  # DeclStmt or ExprStmt
    cond: Optional[Expr]
    step: Optional[Expr]
    body: Block = None
    pos: tuple = _pos_field()


@dataclass
class Return(Stmt):
    value: Optional[Expr] = None
    pos: tuple = _pos_field()


@dataclass
class Break(Stmt):
    pos: tuple = _pos_field()


@dataclass
class Continue(Stmt):
    pos: tuple = _pos_field()


@dataclass
class ExprStmt(Stmt):
    expr: Expr
    pos: tuple = _pos_field()


@dataclass
class Declarator(Node):
    name: str
    extent: Optional[int] = None  # array extent; positive when present
    init: Optional[Expr] = None
    pos: tuple = _pos_field()


@dataclass
class DeclStmt(Stmt):
    base: str  # "int" | "double" | "char"
    decls: list[Declarator] = None
    pos: tuple = _pos_field()


# I/O statements. Both printf/scanf and cout/cin chains parse into the same
# two node shapes; `style` records which surface syntax to print.

IO_C = "c"
IO_CPP = "cpp"


@dataclass
class TextItem(Node):
    text: str
    pos: tuple = _pos_field()


@dataclass
class ValueItem(Node):
    expr: Expr
    fmt: str = ""  # "d" | "f" | "c" | "s"
    pos: tuple = _pos_field()


@dataclass
class IOWrite(Stmt):
    style: str  # IO_C (printf) or IO_CPP (cout)
    items: list[Node] = None  # TextItem | ValueItem
    pos: tuple = _pos_field()


@dataclass
class ReadTarget(Node):
    lvalue: Expr  # Ident or Index
    fmt: str = ""  # "d" | "f" | "c"
    pos: tuple = _pos_field()


@dataclass
class IORead(Stmt):
    style: str  # IO_C (scanf) or IO_CPP (cin)
    targets: list[ReadTarget] = None
    pos: tuple = _pos_field()


# ---------------------------------------------------------------------------
# Top level
# ---------------------------------------------------------------------------


@dataclass
class Param(Node):
    type: str  # scalar types only
    name: str = ""
    pos: tuple = _pos_field()


@dataclass
class FunctionDecl(Node):
    ret: str  # "int" | "double" | "char" | "void"
    name: str = ""
    params: list[Param] = None
    body: Block = None
    pos: tuple = _pos_field()


@dataclass
class Ast(Node):
    globals: list[DeclStmt]
    functions: list[FunctionDecl]


# ---------------------------------------------------------------------------
# Generic tree navigation
# ---------------------------------------------------------------------------


def children(node: Node) -> list[Node]:
    """Node-valued children in stable (field declaration) order."""
    out: list[Node] = []
    for f in dataclasses.fields(node):
        v = getattr(node, f.name)
        if isinstance(v, Node):
            out.append(v)
        elif isinstance(v, list):
            out.extend(x for x in v if isinstance(x, Node))
    return out


def node_at(root: Node, path: list[int]) -> Node:
    """Follow a child-index path from `root`."""
    n = root
    for i in path:
        kids = children(n)
        if i < 0 or i >= len(kids):
            raise IndexError(f"path {path} does not address a node")
        n = kids[i]
    return n


def set_child(parent: Node, idx: int, new: Node) -> None:
    """Replace the idx-th child of `parent` in place."""
    k = 0
    for f in dataclasses.fields(parent):
        v = getattr(parent, f.name)
        if isinstance(v, Node):
            if k == idx:
                setattr(parent, f.name, new)
                return
            k += 1
        elif isinstance(v, list):
            for j, x in enumerate(v):
                if isinstance(x, Node):
                    if k == idx:
                        v[j] = new
                        return
                    k += 1
    raise IndexError(f"child index {idx} out of range")


def walk(node: Node, path: Optional[list[int]] = None):
    """Pre-order (node, path) pairs over the whole subtree."""
    if path is None:
        path = []
    yield node, path
    for i, c in enumerate(children(node)):
        yield from walk(c, path + [i])


def identifiers(node: Node) -> set[str]:
    """Every identifier-ish name appearing anywhere in the subtree."""
    names: set[str] = set()
    for n, _ in walk(node):
        if isinstance(n, Ident):
            names.add(n.name)
        elif isinstance(n, Declarator):
            names.add(n.name)
        elif isinstance(n, Param):
            names.add(n.name)
        elif isinstance(n, (Call, FunctionDecl)):
            names.add(n.name)
    return names
