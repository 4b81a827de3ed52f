"""Canonical source formatter.

One statement per line, four-space indents, explicit braces except where a
body block carries the elide flag (single simple statement printed on its
own indented line). Printing the same tree always yields the same bytes,
and printing then reparsing is a structural fixed point.
"""

from __future__ import annotations

from ..errors import CodeaugError
from . import nodes as N
from .lexer import escape_char, escape_string

INDENT = "    "

_PRECEDENCE = {
    "||": 1, "&&": 2,
    "==": 3, "!=": 3,
    "<": 4, "<=": 4, ">": 4, ">=": 4,
    "+": 5, "-": 5,
    "*": 6, "/": 6, "%": 6,
}
_UNARY_PREC = 7


def pretty_print(ast: N.Ast) -> str:
    lines: list[str] = []
    for g in ast.globals:
        lines.append(_decl_stmt(g))
    if ast.globals and ast.functions:
        lines.append("")
    for k, fn in enumerate(ast.functions):
        if k > 0:
            lines.append("")
        params = ", ".join(f"{p.type} {p.name}" for p in fn.params)
        lines.append(f"{fn.ret} {fn.name}({params}) {{")
        _emit_block_body(fn.body, lines, 1)
        lines.append("}")
    return "\n".join(lines) + "\n"


def _emit_block_body(block: N.Block, lines: list[str], depth: int):
    for s in block.stmts:
        _emit_stmt(s, lines, depth)


def _emit_body(body: N.Block, lines: list[str], depth: int, header: str, footer: str = "}"):
    """Emit a control-statement body, honoring the brace-elision flag."""
    if body.elide_braces and len(body.stmts) == 1:
        lines.append(header.rstrip())
        _emit_stmt(body.stmts[0], lines, depth + 1)
        return False  # no closing brace emitted
    lines.append(header + " {")
    _emit_block_body(body, lines, depth + 1)
    lines.append(INDENT * depth + footer)
    return True


def _emit_stmt(s: N.Stmt, lines: list[str], depth: int):
    pad = INDENT * depth
    if isinstance(s, N.Block):
        lines.append(pad + "{")
        _emit_block_body(s, lines, depth + 1)
        lines.append(pad + "}")
    elif isinstance(s, N.DeclStmt):
        lines.append(pad + _decl_stmt(s))
    elif isinstance(s, N.If):
        _emit_if(s, lines, depth)
    elif isinstance(s, N.While):
        _emit_body(s.body, lines, depth, f"{pad}while ({_expr(s.cond)})")
    elif isinstance(s, N.For):
        init = ""
        if isinstance(s.init, N.DeclStmt):
            init = _decl_stmt(s.init)[:-1]  # drop trailing ';'
        elif isinstance(s.init, N.ExprStmt):
            init = _expr(s.init.expr)
        cond = _expr(s.cond) if s.cond is not None else ""
        step = _expr(s.step) if s.step is not None else ""
        _emit_body(s.body, lines, depth, f"{pad}for ({init}; {cond}; {step})")
    elif isinstance(s, N.Return):
        if s.value is None:
            lines.append(pad + "return;")
        else:
            lines.append(pad + f"return {_expr(s.value)};")
    elif isinstance(s, N.Break):
        lines.append(pad + "break;")
    elif isinstance(s, N.Continue):
        lines.append(pad + "continue;")
    elif isinstance(s, N.ExprStmt):
        lines.append(pad + _expr(s.expr) + ";")
    elif isinstance(s, N.IOWrite):
        lines.append(pad + _io_write(s))
    elif isinstance(s, N.IORead):
        lines.append(pad + _io_read(s))
    else:
        raise CodeaugError(f"cannot print statement {type(s).__name__}")


def _emit_if(s: N.If, lines: list[str], depth: int):
    pad = INDENT * depth
    braced = _emit_body(s.then, lines, depth, f"{pad}if ({_expr(s.cond)})")
    if s.orelse is None:
        return
    lead = pad + "else"
    if braced:
        # fold the else onto the closing brace line
        lines[-1] = lines[-1] + " else"
        lead = lines.pop()
    # else-if chains print flat when the else body is a single elided If
    if (s.orelse.elide_braces and len(s.orelse.stmts) == 1
            and isinstance(s.orelse.stmts[0], N.If)):
        nested = s.orelse.stmts[0]
        sub: list[str] = []
        _emit_if(nested, sub, depth)
        sub[0] = lead + " " + sub[0].lstrip()
        lines.extend(sub)
        return
    if s.orelse.elide_braces and len(s.orelse.stmts) == 1:
        lines.append(lead)
        _emit_stmt(s.orelse.stmts[0], lines, depth + 1)
        return
    lines.append(lead + " {")
    _emit_block_body(s.orelse, lines, depth + 1)
    lines.append(pad + "}")


def _decl_stmt(s: N.DeclStmt) -> str:
    parts = []
    for d in s.decls:
        txt = d.name
        if d.extent is not None:
            txt += f"[{d.extent}]"
        if d.init is not None:
            txt += f" = {_expr(d.init)}"
        parts.append(txt)
    return f"{s.base} " + ", ".join(parts) + ";"


def _io_write(s: N.IOWrite) -> str:
    if s.style == N.IO_CPP:
        parts = []
        for item in s.items:
            if isinstance(item, N.TextItem):
                parts.append(f'"{escape_string(item.text)}"')
            else:
                parts.append(_expr(item.expr, _PRECEDENCE["+"]))
        return "cout << " + " << ".join(parts) + ";"
    fmt = []
    args = []
    for item in s.items:
        if isinstance(item, N.TextItem):
            fmt.append(escape_string(item.text).replace("%", "%%"))
        else:
            fmt.append("%" + item.fmt)
            if item.fmt == "s":
                args.append(f'"{escape_string(item.expr.value)}"')
            else:
                args.append(_expr(item.expr))
    joined = ", ".join(['"' + "".join(fmt) + '"'] + args)
    return f"printf({joined});"


def _io_read(s: N.IORead) -> str:
    if s.style == N.IO_CPP:
        parts = [_expr(t.lvalue) for t in s.targets]
        return "cin >> " + " >> ".join(parts) + ";"
    fmt = " ".join("%" + t.fmt for t in s.targets)
    args = ", ".join("&" + _expr(t.lvalue) for t in s.targets)
    return f'scanf("{fmt}", {args});'


def _float_lit(v: float) -> str:
    s = repr(v)
    if s.startswith("-"):
        raise CodeaugError("negative float literals print via unary minus")
    return s


def _expr(e: N.Expr, parent_prec: int = 0) -> str:
    if isinstance(e, N.IntLit):
        return str(e.value)
    if isinstance(e, N.FloatLit):
        return _float_lit(e.value)
    if isinstance(e, N.CharLit):
        return f"'{escape_char(e.value)}'"
    if isinstance(e, N.StringLit):
        return f'"{escape_string(e.value)}"'
    if isinstance(e, N.Ident):
        return e.name
    if isinstance(e, N.Index):
        return f"{_expr(e.base, _UNARY_PREC + 1)}[{_expr(e.index)}]"
    if isinstance(e, N.Call):
        return f"{e.name}(" + ", ".join(_expr(a) for a in e.args) + ")"
    if isinstance(e, N.Unary):
        if e.postfix:
            text = f"{_expr(e.operand, _UNARY_PREC + 1)}{e.op}"
        else:
            inner = _expr(e.operand, _UNARY_PREC)
            # avoid gluing '- -x' into '--x'
            sep = " " if e.op in ("-", "+") and inner.startswith(e.op[0]) else ""
            text = f"{e.op}{sep}{inner}"
        return text if parent_prec <= _UNARY_PREC else f"({text})"
    if isinstance(e, N.Binary):
        prec = _PRECEDENCE[e.op]
        lhs = _expr(e.lhs, prec)
        rhs = _expr(e.rhs, prec + 1)  # left-associative
        text = f"{lhs} {e.op} {rhs}"
        return text if prec >= parent_prec else f"({text})"
    if isinstance(e, N.Assign):
        text = f"{_expr(e.target, _UNARY_PREC)} = {_expr(e.value)}"
        return f"({text})" if parent_prec > 0 else text
    raise CodeaugError(f"cannot print expression {type(e).__name__}")
