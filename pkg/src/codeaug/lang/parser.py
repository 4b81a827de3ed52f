"""Recursive-descent parser and name/type resolver.

`parse` returns a fully resolved tree: every identifier is bound, every
expression carries an inferred type and all I/O statements are normalized
into the shared IOWrite/IORead representation regardless of whether the
source used printf/scanf or cout/cin.
"""

from __future__ import annotations

from typing import Optional

from ..errors import MiniSyntaxError, UnsupportedConstruct
from . import nodes as N
from .lexer import Token, tokenize

SCALAR_TYPES = ("int", "double", "char")
FMT_FOR_TYPE = {"int": "d", "double": "f", "char": "c"}
TYPE_FOR_FMT = {"d": "int", "f": "double", "c": "char", "s": "string"}


class _Parser:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.i = 0

    # -- token helpers ------------------------------------------------------

    def peek(self, k: int = 0) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, kind: str, text: Optional[str] = None, k: int = 0) -> bool:
        t = self.peek(k)
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        t = self.peek()
        if not self.at(kind, text):
            want = text if text is not None else kind
            self.err(f"expected {want!r}, found {t.text or t.kind!r}", t)
        return self.next()

    def err(self, msg: str, tok: Optional[Token] = None):
        t = tok or self.peek()
        raise MiniSyntaxError(msg, t.line, t.col)

    def unsupported(self, msg: str, tok: Optional[Token] = None):
        t = tok or self.peek()
        raise UnsupportedConstruct(msg, t.line, t.col)

    # -- top level ----------------------------------------------------------

    def parse_unit(self) -> N.Ast:
        globals_: list[N.DeclStmt] = []
        functions: list[N.FunctionDecl] = []
        while not self.at("eof"):
            if self.at("kw", "using"):
                self.skip_using()
                continue
            if not (self.peek().kind == "kw" and self.peek().text in SCALAR_TYPES + ("void",)):
                self.err(f"expected a declaration, found {self.peek().text!r}")
            if self.at("op", "(", 2) and self.peek(1).kind in ("ident", "kw"):
                functions.append(self.parse_function())
            else:
                globals_.append(self.parse_decl_stmt())
        return N.Ast(globals=globals_, functions=functions)

    def skip_using(self):
        self.expect("kw", "using")
        self.expect("kw", "namespace")
        self.expect("ident")  # std
        self.expect("op", ";")

    def parse_function(self) -> N.FunctionDecl:
        t0 = self.peek()
        ret = self.next().text
        name_tok = self.next()
        if name_tok.kind not in ("ident",):
            self.err("expected function name", name_tok)
        self.expect("op", "(")
        params: list[N.Param] = []
        if not self.at("op", ")"):
            while True:
                pt = self.peek()
                if not (pt.kind == "kw" and pt.text in SCALAR_TYPES):
                    if pt.kind == "kw" and pt.text == "void" and self.at("op", ")", 1):
                        self.next()  # f(void)
                        break
                    self.err("expected parameter type", pt)
                self.next()
                pn = self.expect("ident")
                if self.at("op", "["):
                    self.unsupported("array parameters are outside the subset")
                params.append(N.Param(type=pt.text, name=pn.text, pos=(pt.line, pt.col)))
                if self.at("op", ","):
                    self.next()
                    continue
                break
        self.expect("op", ")")
        if self.at("op", ";"):
            self.unsupported("function prototypes are outside the subset")
        body = self.parse_block()
        return N.FunctionDecl(ret=ret, name=name_tok.text, params=params, body=body,
                              pos=(t0.line, t0.col))

    # -- statements ---------------------------------------------------------

    def parse_block(self) -> N.Block:
        t0 = self.expect("op", "{")
        stmts: list[N.Stmt] = []
        while not self.at("op", "}"):
            if self.at("eof"):
                self.err("unterminated block", t0)
            stmts.append(self.parse_stmt())
        self.expect("op", "}")
        return N.Block(stmts=stmts, pos=(t0.line, t0.col))

    def parse_body(self) -> N.Block:
        """A construct body: either a braced block or a single statement
        (wrapped into a block flagged for brace-free printing)."""
        if self.at("op", "{"):
            return self.parse_block()
        t0 = self.peek()
        stmt = self.parse_stmt()
        if isinstance(stmt, N.DeclStmt):
            self.err("a declaration cannot be the sole body of a control statement", t0)
        return N.Block(stmts=[stmt], elide_braces=True, pos=(t0.line, t0.col))

    def parse_stmt(self) -> N.Stmt:
        t = self.peek()
        if t.kind == "op" and t.text == "{":
            return self.parse_block()
        if t.kind == "kw":
            if t.text in SCALAR_TYPES:
                return self.parse_decl_stmt()
            if t.text == "void":
                self.err("'void' is only valid as a function return type", t)
            if t.text == "if":
                return self.parse_if()
            if t.text == "while":
                return self.parse_while()
            if t.text == "for":
                return self.parse_for()
            if t.text == "return":
                self.next()
                value = None if self.at("op", ";") else self.parse_expr()
                self.expect("op", ";")
                return N.Return(value=value, pos=(t.line, t.col))
            if t.text == "break":
                self.next()
                self.expect("op", ";")
                return N.Break(pos=(t.line, t.col))
            if t.text == "continue":
                self.next()
                self.expect("op", ";")
                return N.Continue(pos=(t.line, t.col))
            self.err(f"unexpected keyword {t.text!r}", t)
        if t.kind == "ident" and t.text in ("printf", "scanf"):
            return self.parse_c_io(t.text)
        if t.kind == "ident" and t.text in ("cout", "cin"):
            return self.parse_cpp_io(t.text)
        if t.kind == "op" and t.text == ";":
            self.next()
            return N.Block(stmts=[], pos=(t.line, t.col))  # empty statement
        expr = self.parse_expr()
        self.expect("op", ";")
        return N.ExprStmt(expr=expr, pos=(t.line, t.col))

    def parse_if(self) -> N.If:
        t0 = self.expect("kw", "if")
        self.expect("op", "(")
        cond = self.parse_expr()
        self.expect("op", ")")
        then = self.parse_body()
        orelse = None
        if self.at("kw", "else"):
            self.next()
            orelse = self.parse_body()
        return N.If(cond=cond, then=then, orelse=orelse, pos=(t0.line, t0.col))

    def parse_while(self) -> N.While:
        t0 = self.expect("kw", "while")
        self.expect("op", "(")
        cond = self.parse_expr()
        self.expect("op", ")")
        body = self.parse_body()
        return N.While(cond=cond, body=body, pos=(t0.line, t0.col))

    def parse_for(self) -> N.For:
        t0 = self.expect("kw", "for")
        self.expect("op", "(")
        init: Optional[N.Stmt] = None
        if self.at("op", ";"):
            self.next()
        elif self.peek().kind == "kw" and self.peek().text in SCALAR_TYPES:
            init = self.parse_decl_stmt()
        else:
            e = self.parse_expr()
            self.expect("op", ";")
            init = N.ExprStmt(expr=e, pos=e.pos)
        cond = None if self.at("op", ";") else self.parse_expr()
        self.expect("op", ";")
        step = None if self.at("op", ")") else self.parse_expr()
        self.expect("op", ")")
        body = self.parse_body()
        return N.For(init=init, cond=cond, step=step, body=body, pos=(t0.line, t0.col))

    def parse_decl_stmt(self) -> N.DeclStmt:
        t0 = self.next()  # base type keyword
        if t0.text == "void":
            self.err("'void' is only valid as a function return type", t0)
        if self.at("op", "*"):
            self.unsupported("pointer declarations are outside the subset")
        decls: list[N.Declarator] = []
        while True:
            name_tok = self.expect("ident")
            extent = None
            init = None
            if self.at("op", "["):
                self.next()
                ext_tok = self.peek()
                if ext_tok.kind != "int":
                    self.err("array extent must be a positive integer literal", ext_tok)
                self.next()
                if ext_tok.value <= 0:
                    self.err("array extent must be positive", ext_tok)
                extent = ext_tok.value
                self.expect("op", "]")
                if self.at("op", "["):
                    self.unsupported("multi-dimensional arrays are outside the subset")
            if self.at("op", "="):
                self.next()
                if extent is not None:
                    self.unsupported("array initializers are outside the subset")
                init = self.parse_assign_expr()
            decls.append(N.Declarator(name=name_tok.text, extent=extent, init=init,
                                      pos=(name_tok.line, name_tok.col)))
            if self.at("op", ","):
                self.next()
                continue
            break
        self.expect("op", ";")
        return N.DeclStmt(base=t0.text, decls=decls, pos=(t0.line, t0.col))

    # -- I/O ----------------------------------------------------------------

    def parse_c_io(self, which: str) -> N.Stmt:
        t0 = self.next()
        self.expect("op", "(")
        fmt_tok = self.peek()
        if fmt_tok.kind != "string":
            self.err(f"{which} requires a string-literal format", fmt_tok)
        self.next()
        args: list[tuple[bool, N.Expr]] = []  # (had_ampersand, expr)
        while self.at("op", ","):
            self.next()
            amp = False
            if self.at("op", "&"):
                self.next()
                amp = True
            args.append((amp, self.parse_assign_expr()))
        self.expect("op", ")")
        self.expect("op", ";")
        pos = (t0.line, t0.col)
        if which == "printf":
            if any(a for a, _ in args):
                self.err("'&' is not valid in printf arguments", t0)
            items = self._split_printf_format(fmt_tok, [e for _, e in args])
            if not items:
                self.unsupported("empty printf format is outside the subset", fmt_tok)
            return N.IOWrite(style=N.IO_C, items=items, pos=pos)
        targets = self._split_scanf_format(fmt_tok, args)
        if not targets:
            self.unsupported("scanf without conversions is outside the subset", fmt_tok)
        return N.IORead(style=N.IO_C, targets=targets, pos=pos)

    def _split_printf_format(self, fmt_tok: Token, args: list[N.Expr]) -> list[N.Node]:
        items: list[N.Node] = []
        text: list[str] = []
        argq = list(args)
        s = fmt_tok.value
        i = 0
        while i < len(s):
            ch = s[i]
            if ch == "%":
                if i + 1 >= len(s):
                    self.err("dangling '%' in format string", fmt_tok)
                spec = s[i + 1]
                i += 2
                if spec == "%":
                    text.append("%")
                    continue
                if spec not in "dfcs":
                    self.unsupported(f"format specifier %{spec} is outside the subset", fmt_tok)
                if text:
                    items.append(N.TextItem(text="".join(text)))
                    text = []
                if not argq:
                    self.err("format string expects more arguments than given", fmt_tok)
                items.append(N.ValueItem(expr=argq.pop(0), fmt=spec))
            else:
                text.append(ch)
                i += 1
        if text:
            items.append(N.TextItem(text="".join(text)))
        if argq:
            self.err("more printf arguments than format specifiers", fmt_tok)
        return items

    def _split_scanf_format(self, fmt_tok: Token,
                            args: list[tuple[bool, N.Expr]]) -> list[N.ReadTarget]:
        specs: list[str] = []
        s = fmt_tok.value
        i = 0
        while i < len(s):
            if s[i] == "%":
                if i + 1 >= len(s):
                    self.err("dangling '%' in format string", fmt_tok)
                spec = s[i + 1]
                if spec not in "dfc":
                    self.unsupported(f"scanf specifier %{spec} is outside the subset", fmt_tok)
                specs.append(spec)
                i += 2
            elif s[i] in " \t\n":
                i += 1
            else:
                self.unsupported("literal matching in scanf formats is outside the subset",
                                 fmt_tok)
        if len(specs) != len(args):
            self.err("scanf argument count does not match its format", fmt_tok)
        targets = []
        for spec, (_, expr) in zip(specs, args):
            if not isinstance(expr, (N.Ident, N.Index)):
                self.err("scanf arguments must be variables or array elements", fmt_tok)
            targets.append(N.ReadTarget(lvalue=expr, fmt=spec))
        return targets

    def parse_cpp_io(self, which: str) -> N.Stmt:
        t0 = self.next()
        pos = (t0.line, t0.col)
        if which == "cout":
            items: list[N.Node] = []
            while self.at("op", "<<"):
                self.next()
                t = self.peek()
                if t.kind == "string":
                    self.next()
                    items.append(N.TextItem(text=t.value, pos=(t.line, t.col)))
                elif t.kind == "ident" and t.text == "endl":
                    self.next()
                    items.append(N.TextItem(text="\n", pos=(t.line, t.col)))
                else:
                    expr = self.parse_shift_operand()
                    items.append(N.ValueItem(expr=expr, fmt="", pos=(t.line, t.col)))
            if not items:
                self.err("empty cout statement", t0)
            self.expect("op", ";")
            return N.IOWrite(style=N.IO_CPP, items=items, pos=pos)
        targets: list[N.ReadTarget] = []
        while self.at("op", ">>"):
            self.next()
            t = self.peek()
            expr = self.parse_shift_operand()
            if not isinstance(expr, (N.Ident, N.Index)):
                self.err("cin targets must be variables or array elements", t)
            targets.append(N.ReadTarget(lvalue=expr, fmt="", pos=(t.line, t.col)))
        if not targets:
            self.err("empty cin statement", t0)
        self.expect("op", ";")
        return N.IORead(style=N.IO_CPP, targets=targets, pos=pos)

    def parse_shift_operand(self) -> N.Expr:
        # stream items bind tighter than << / >>, so stop at additive level
        return self.parse_additive()

    # -- expressions --------------------------------------------------------

    def parse_expr(self) -> N.Expr:
        return self.parse_assign_expr()

    def parse_assign_expr(self) -> N.Expr:
        lhs = self.parse_logical_or()
        t = self.peek()
        if self.at("op", "="):
            self.next()
            if not isinstance(lhs, (N.Ident, N.Index)):
                self.err("assignment target must be a variable or array element", t)
            rhs = self.parse_assign_expr()
            return N.Assign(target=lhs, value=rhs, pos=lhs.pos)
        return lhs

    def _binop_chain(self, sub, ops: tuple[str, ...]) -> N.Expr:
        lhs = sub()
        while self.peek().kind == "op" and self.peek().text in ops:
            op = self.next().text
            rhs = sub()
            lhs = N.Binary(op=op, lhs=lhs, rhs=rhs, pos=lhs.pos)
        return lhs

    def parse_logical_or(self) -> N.Expr:
        return self._binop_chain(self.parse_logical_and, ("||",))

    def parse_logical_and(self) -> N.Expr:
        return self._binop_chain(self.parse_equality, ("&&",))

    def parse_equality(self) -> N.Expr:
        return self._binop_chain(self.parse_relational, ("==", "!="))

    def parse_relational(self) -> N.Expr:
        return self._binop_chain(self.parse_additive, ("<", "<=", ">", ">="))

    def parse_additive(self) -> N.Expr:
        return self._binop_chain(self.parse_multiplicative, ("+", "-"))

    def parse_multiplicative(self) -> N.Expr:
        return self._binop_chain(self.parse_unary, ("*", "/", "%"))

    def parse_unary(self) -> N.Expr:
        t = self.peek()
        if t.kind == "op" and t.text in ("-", "+", "!"):
            self.next()
            operand = self.parse_unary()
            return N.Unary(op=t.text, operand=operand, pos=(t.line, t.col))
        if t.kind == "op" and t.text in ("++", "--"):
            self.next()
            operand = self.parse_unary()
            if not isinstance(operand, (N.Ident, N.Index)):
                self.err("increment/decrement needs a variable or array element", t)
            return N.Unary(op=t.text, operand=operand, pos=(t.line, t.col))
        if t.kind == "op" and t.text == "&":
            self.unsupported("address-of is outside the subset", t)
        return self.parse_postfix()

    def parse_postfix(self) -> N.Expr:
        expr = self.parse_primary()
        while True:
            t = self.peek()
            if self.at("op", "["):
                self.next()
                idx = self.parse_expr()
                self.expect("op", "]")
                expr = N.Index(base=expr, index=idx, pos=expr.pos)
            elif self.at("op", "++") or self.at("op", "--"):
                self.next()
                if not isinstance(expr, (N.Ident, N.Index)):
                    self.err("increment/decrement needs a variable or array element", t)
                expr = N.Unary(op=t.text, operand=expr, postfix=True, pos=expr.pos)
            else:
                return expr

    def parse_primary(self) -> N.Expr:
        t = self.peek()
        if t.kind == "int":
            self.next()
            return N.IntLit(value=t.value, pos=(t.line, t.col))
        if t.kind == "float":
            self.next()
            return N.FloatLit(value=t.value, pos=(t.line, t.col))
        if t.kind == "char":
            self.next()
            return N.CharLit(value=t.value, pos=(t.line, t.col))
        if t.kind == "string":
            self.next()
            return N.StringLit(value=t.value, pos=(t.line, t.col))
        if t.kind == "ident":
            if t.text in ("printf", "scanf", "cout", "cin"):
                self.unsupported(f"{t.text} may only be used as a statement", t)
            self.next()
            if self.at("op", "("):
                self.next()
                args = []
                if not self.at("op", ")"):
                    while True:
                        args.append(self.parse_assign_expr())
                        if self.at("op", ","):
                            self.next()
                            continue
                        break
                self.expect("op", ")")
                return N.Call(name=t.text, args=args, pos=(t.line, t.col))
            return N.Ident(name=t.text, pos=(t.line, t.col))
        if t.kind == "op" and t.text == "(":
            self.next()
            e = self.parse_expr()
            self.expect("op", ")")
            return e
        self.err(f"expected an expression, found {t.text or t.kind!r}", t)


# ---------------------------------------------------------------------------
# Resolution / type checking
# ---------------------------------------------------------------------------


class _VarInfo:
    __slots__ = ("base", "extent")

    def __init__(self, base: str, extent: Optional[int]):
        self.base = base
        self.extent = extent


class _Resolver:
    def __init__(self, ast: N.Ast):
        self.ast = ast
        self.functions = {f.name: f for f in ast.functions}
        self.scopes: list[dict[str, _VarInfo]] = []
        self.loop_depth = 0
        self.current_fn: Optional[N.FunctionDecl] = None

    def err(self, msg: str, node: N.Node):
        pos = getattr(node, "pos", (0, 0))
        raise MiniSyntaxError(msg, pos[0], pos[1])

    def run(self):
        if len(self.functions) != len(self.ast.functions):
            dupes = [f.name for f in self.ast.functions
                     if sum(g.name == f.name for g in self.ast.functions) > 1]
            self.err(f"duplicate function {dupes[0]!r}", self.ast.functions[0])
        mains = [f for f in self.ast.functions if f.name == "main"]
        if len(mains) != 1:
            raise MiniSyntaxError("program must define exactly one 'main' function")
        if mains[0].ret != "int":
            self.err("'main' must return int", mains[0])
        if mains[0].params:
            raise UnsupportedConstruct("'main' with parameters is outside the subset",
                                       *mains[0].pos)

        self.scopes = [{}]
        for g in self.ast.globals:
            self.declare(g, global_scope=True)
        for fn in self.ast.functions:
            self.current_fn = fn
            self.scopes.append({})
            for p in fn.params:
                if p.name in self.scopes[-1]:
                    self.err(f"duplicate parameter {p.name!r}", p)
                self.scopes[-1][p.name] = _VarInfo(p.type, None)
            self.visit_block(fn.body, new_scope=False)
            self.scopes.pop()
        self.current_fn = None

    # -- scope helpers ------------------------------------------------------

    def lookup(self, name: str) -> Optional[_VarInfo]:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def declare(self, stmt: N.DeclStmt, global_scope: bool = False):
        for d in stmt.decls:
            if d.name in self.scopes[-1]:
                self.err(f"redeclaration of {d.name!r}", d)
            if d.name in self.functions:
                self.err(f"{d.name!r} is already a function name", d)
            if d.init is not None:
                ty = self.visit_expr(d.init)
                self.check_scalar_convert(ty, stmt.base, d)
            self.scopes[-1][d.name] = _VarInfo(stmt.base, d.extent)

    # -- statements ---------------------------------------------------------

    def visit_block(self, block: N.Block, new_scope: bool = True):
        if new_scope:
            self.scopes.append({})
        for s in block.stmts:
            self.visit_stmt(s)
        if new_scope:
            self.scopes.pop()

    def visit_stmt(self, s: N.Stmt):
        if isinstance(s, N.Block):
            self.visit_block(s)
        elif isinstance(s, N.DeclStmt):
            self.declare(s)
        elif isinstance(s, N.If):
            self.require_numeric(self.visit_expr(s.cond), s.cond, "if condition")
            self.visit_block(s.then)
            if s.orelse is not None:
                self.visit_block(s.orelse)
        elif isinstance(s, N.While):
            self.require_numeric(self.visit_expr(s.cond), s.cond, "while condition")
            self.loop_depth += 1
            self.visit_block(s.body)
            self.loop_depth -= 1
        elif isinstance(s, N.For):
            self.scopes.append({})  # the init declarator scopes over the loop
            if s.init is not None:
                self.visit_stmt(s.init)
            if s.cond is not None:
                self.require_numeric(self.visit_expr(s.cond), s.cond, "for condition")
            if s.step is not None:
                self.visit_expr(s.step)
            self.loop_depth += 1
            self.visit_block(s.body)
            self.loop_depth -= 1
            self.scopes.pop()
        elif isinstance(s, N.Return):
            fn = self.current_fn
            if s.value is None:
                if fn.ret != "void" and fn.name != "main":
                    self.err(f"function {fn.name!r} must return a value", s)
            else:
                if fn.ret == "void":
                    self.err("void function cannot return a value", s)
                ty = self.visit_expr(s.value)
                self.check_scalar_convert(ty, fn.ret, s)
        elif isinstance(s, N.Break) or isinstance(s, N.Continue):
            if self.loop_depth == 0:
                kind = "break" if isinstance(s, N.Break) else "continue"
                self.err(f"{kind!r} outside a loop", s)
        elif isinstance(s, N.ExprStmt):
            self.visit_expr(s.expr)
        elif isinstance(s, N.IOWrite):
            for item in s.items:
                if isinstance(item, N.ValueItem):
                    ty = self.visit_expr(item.expr)
                    if item.fmt == "":
                        if ty == "string":
                            item.fmt = "s"
                        elif ty in FMT_FOR_TYPE:
                            item.fmt = FMT_FOR_TYPE[ty]
                        else:
                            self.err("expression cannot be written", item.expr)
                    else:
                        want = TYPE_FOR_FMT[item.fmt]
                        if item.fmt == "s":
                            if not isinstance(item.expr, N.StringLit):
                                self.err("%s accepts only string literals", item.expr)
                        elif ty != want:
                            self.err(f"%{item.fmt} expects a {want} expression, got {ty}",
                                     item.expr)
        elif isinstance(s, N.IORead):
            for tgt in s.targets:
                ty = self.visit_expr(tgt.lvalue)
                self.check_lvalue(tgt.lvalue)
                if ty not in FMT_FOR_TYPE:
                    self.err("read target must be a scalar int/double/char", tgt.lvalue)
                want = FMT_FOR_TYPE[ty]
                if tgt.fmt == "":
                    tgt.fmt = want
                elif tgt.fmt != want:
                    self.err(f"%{tgt.fmt} cannot read into a {ty} variable", tgt.lvalue)
        else:
            self.err(f"unhandled statement {type(s).__name__}", s)

    # -- expressions --------------------------------------------------------

    def visit_expr(self, e: N.Expr) -> str:
        ty = self._expr_type(e)
        e.ty = ty
        return ty

    def _expr_type(self, e: N.Expr) -> str:
        if isinstance(e, N.IntLit):
            return "int"
        if isinstance(e, N.FloatLit):
            return "double"
        if isinstance(e, N.CharLit):
            return "char"
        if isinstance(e, N.StringLit):
            return "string"
        if isinstance(e, N.Ident):
            info = self.lookup(e.name)
            if info is None:
                self.err(f"use of undeclared identifier {e.name!r}", e)
            if info.extent is not None:
                return f"array:{info.base}"
            return info.base
        if isinstance(e, N.Index):
            if not isinstance(e.base, N.Ident):
                self.err("only named arrays can be indexed", e)
            base_ty = self.visit_expr(e.base)
            if not base_ty.startswith("array:"):
                self.err(f"{e.base.name!r} is not an array", e)
            idx_ty = self.visit_expr(e.index)
            if idx_ty not in ("int", "char"):
                self.err("array index must be an integer", e.index)
            return base_ty.split(":", 1)[1]
        if isinstance(e, N.Call):
            fn = self.functions.get(e.name)
            if fn is None:
                self.err(f"call to undeclared function {e.name!r}", e)
            if len(e.args) != len(fn.params):
                self.err(f"{e.name!r} expects {len(fn.params)} argument(s)", e)
            for arg, p in zip(e.args, fn.params):
                ty = self.visit_expr(arg)
                self.check_scalar_convert(ty, p.type, arg)
            return fn.ret
        if isinstance(e, N.Unary):
            ty = self.visit_expr(e.operand)
            if e.op in ("++", "--"):
                self.check_lvalue(e.operand)
                if ty not in SCALAR_TYPES:
                    self.err("increment/decrement needs a numeric variable", e)
                return ty
            self.require_numeric(ty, e, f"operand of {e.op!r}")
            if e.op == "!":
                return "int"
            return "int" if ty == "char" else ty
        if isinstance(e, N.Binary):
            lt = self.visit_expr(e.lhs)
            rt = self.visit_expr(e.rhs)
            self.require_numeric(lt, e.lhs, f"operand of {e.op!r}")
            self.require_numeric(rt, e.rhs, f"operand of {e.op!r}")
            if e.op in ("<", "<=", ">", ">=", "==", "!=", "&&", "||"):
                return "int"
            if e.op == "%":
                if "double" in (lt, rt):
                    self.err("'%' needs integer operands", e)
                return "int"
            if "double" in (lt, rt):
                return "double"
            return "int"
        if isinstance(e, N.Assign):
            self.check_lvalue(e.target)
            tt = self.visit_expr(e.target)
            vt = self.visit_expr(e.value)
            self.check_scalar_convert(vt, tt, e)
            return tt
        self.err(f"unhandled expression {type(e).__name__}", e)

    # -- checks -------------------------------------------------------------

    def check_lvalue(self, e: N.Expr):
        if isinstance(e, N.Ident):
            info = self.lookup(e.name)
            if info is not None and info.extent is not None:
                self.err(f"array {e.name!r} cannot be assigned as a whole", e)
            return
        if isinstance(e, N.Index):
            return
        self.err("expected a variable or array element", e)

    def require_numeric(self, ty: str, node: N.Node, what: str):
        if ty not in SCALAR_TYPES:
            self.err(f"{what} must be numeric, got {ty}", node)

    def check_scalar_convert(self, src: str, dst: str, node: N.Node):
        if src not in SCALAR_TYPES or dst not in SCALAR_TYPES:
            self.err(f"cannot convert {src} to {dst}", node)


def parse(text: str) -> N.Ast:
    """Parse and resolve a full source unit."""
    toks = tokenize(text)
    ast = _Parser(toks).parse_unit()
    _Resolver(ast).run()
    return ast
