"""Deterministic reference executor for the mini-language.

This is the semantic-equivalence oracle: two programs are considered
behaviorally equal when `run` produces identical stdout bytes and status
for the same stdin. Rules that real C leaves open are pinned down so the
oracle is total and style-invariant:

- int arithmetic is exact (no overflow); division/modulo truncate toward
  zero and reject a zero divisor,
- doubles are binary64 and always print with 6 fractional digits in both
  printf and stream style,
- %c reads skip leading whitespace (stream-style) in both surface styles,
- uninitialized variables read as 0 / 0.0,
- out-of-bounds indexing, division by zero and reading past the end of
  stdin are runtime errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CodeaugError
from .lang import nodes as N

DEFAULT_STEP_LIMIT = 1_000_000
CALL_DEPTH_LIMIT = 200

STATUS_OK = "ok"
STATUS_STEP_LIMIT = "step_limit"
STATUS_RUNTIME_ERROR = "runtime_error"


@dataclass
class ExecResult:
    stdout: bytes
    status: str
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


class _RuntimeErr(Exception):
    def __init__(self, message: str):
        self.message = message


class _StepLimit(Exception):
    pass


class _BreakSignal(Exception):
    pass


class _ContinueSignal(Exception):
    pass


class _ReturnSignal(Exception):
    def __init__(self, value):
        self.value = value


def _zero(base: str):
    return 0.0 if base == "double" else 0


def _convert(value, base: str):
    if base == "double":
        return float(value)
    iv = math.trunc(value) if isinstance(value, float) else int(value)
    if base == "char":
        return iv % 256
    return iv


def _c_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b >= 0) else -q


def _c_mod(a: int, b: int) -> int:
    return a - b * _c_div(a, b)


class _Input:
    def __init__(self, data: bytes):
        self.text = data.decode("utf-8", errors="replace")
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def read_int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise _RuntimeErr("input exhausted while reading an integer")
        return int(self.text[start:self.pos])

    def read_double(self) -> float:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        if self.pos == digits:
            raise _RuntimeErr("input exhausted while reading a number")
        return float(self.text[start:self.pos])

    def read_char(self) -> int:
        self._skip_ws()
        if self.pos >= len(self.text):
            raise _RuntimeErr("input exhausted while reading a character")
        ch = self.text[self.pos]
        self.pos += 1
        return ord(ch) % 256


class _Interp:
    def __init__(self, ast: N.Ast, stdin: bytes, step_limit: int):
        self.ast = ast
        self.functions = {f.name: f for f in ast.functions}
        self.input = _Input(stdin)
        self.out: list[str] = []
        self.steps = 0
        self.step_limit = step_limit
        self.globals: dict = {}
        self.call_depth = 0

    def run_program(self) -> None:
        for g in self.ast.globals:
            self.exec_decl(g, [self.globals])
        self.call(self.functions["main"], [])

    def call(self, fn: N.FunctionDecl, args: list):
        if self.call_depth >= CALL_DEPTH_LIMIT:
            raise _RuntimeErr("call depth limit exceeded")
        self.call_depth += 1
        scope = {}
        for p, a in zip(fn.params, args):
            scope[p.name] = _convert(a, p.type)
        env = [self.globals, scope]
        try:
            self.exec_block(fn.body, env, new_scope=False)
        except _ReturnSignal as r:
            return r.value
        finally:
            self.call_depth -= 1
        return _zero(fn.ret) if fn.ret != "void" else None

    def find(self, env: list[dict], name: str) -> dict:
        for scope in reversed(env):
            if name in scope:
                return scope
        raise CodeaugError(f"unbound identifier {name!r} at runtime")

    # -- statements ---------------------------------------------------------

    def tick(self):
        self.steps += 1
        if self.steps > self.step_limit:
            raise _StepLimit()

    def exec_block(self, block: N.Block, env, new_scope: bool = True):
        if new_scope:
            env = env + [{}]
        for s in block.stmts:
            self.exec_stmt(s, env)

    def exec_stmt(self, s: N.Stmt, env):
        self.tick()
        if isinstance(s, N.Block):
            self.exec_block(s, env)
        elif isinstance(s, N.DeclStmt):
            self.exec_decl(s, env)
        elif isinstance(s, N.If):
            if self.truthy(self.eval(s.cond, env)):
                self.exec_block(s.then, env)
            elif s.orelse is not None:
                self.exec_block(s.orelse, env)
        elif isinstance(s, N.While):
            while True:
                self.tick()
                if not self.truthy(self.eval(s.cond, env)):
                    break
                try:
                    self.exec_block(s.body, env)
                except _BreakSignal:
                    break
                except _ContinueSignal:
                    continue
        elif isinstance(s, N.For):
            inner = env + [{}]
            if s.init is not None:
                self.exec_stmt(s.init, inner)
            while True:
                self.tick()
                if s.cond is not None and not self.truthy(self.eval(s.cond, inner)):
                    break
                try:
                    self.exec_block(s.body, inner)
                except _BreakSignal:
                    break
                except _ContinueSignal:
                    pass
                if s.step is not None:
                    self.eval(s.step, inner)
        elif isinstance(s, N.Return):
            value = self.eval(s.value, env) if s.value is not None else None
            raise _ReturnSignal(value)
        elif isinstance(s, N.Break):
            raise _BreakSignal()
        elif isinstance(s, N.Continue):
            raise _ContinueSignal()
        elif isinstance(s, N.ExprStmt):
            self.eval(s.expr, env)
        elif isinstance(s, N.IOWrite):
            self.exec_write(s, env)
        elif isinstance(s, N.IORead):
            self.exec_read(s, env)
        else:
            raise CodeaugError(f"cannot execute statement {type(s).__name__}")

    def exec_decl(self, s: N.DeclStmt, env):
        scope = env[-1]
        for d in s.decls:
            if d.extent is not None:
                scope[d.name] = [_zero(s.base)] * d.extent
            elif d.init is not None:
                scope[d.name] = _convert(self.eval(d.init, env), s.base)
            else:
                scope[d.name] = _zero(s.base)

    def exec_write(self, s: N.IOWrite, env):
        for item in s.items:
            if isinstance(item, N.TextItem):
                self.out.append(item.text)
            else:
                if item.fmt == "s":
                    self.out.append(item.expr.value)
                    continue
                v = self.eval(item.expr, env)
                if item.fmt == "d":
                    self.out.append(str(int(v)))
                elif item.fmt == "f":
                    self.out.append(f"{float(v):.6f}")
                elif item.fmt == "c":
                    self.out.append(chr(int(v) % 256))
                else:
                    raise CodeaugError(f"bad write format {item.fmt!r}")

    def exec_read(self, s: N.IORead, env):
        for tgt in s.targets:
            if tgt.fmt == "d":
                v = self.input.read_int()
            elif tgt.fmt == "f":
                v = self.input.read_double()
            elif tgt.fmt == "c":
                v = self.input.read_char()
            else:
                raise CodeaugError(f"bad read format {tgt.fmt!r}")
            self.assign(tgt.lvalue, v, env)

    # -- expressions --------------------------------------------------------

    def truthy(self, v) -> bool:
        return v != 0

    def assign(self, target: N.Expr, value, env):
        base = target.ty if target.ty in ("int", "double", "char") else "int"
        if isinstance(target, N.Ident):
            scope = self.find(env, target.name)
            scope[target.name] = _convert(value, base)
            return scope[target.name]
        if isinstance(target, N.Index):
            arr = self.find(env, target.base.name)[target.base.name]
            idx = int(self.eval(target.index, env))
            if not isinstance(arr, list):
                raise _RuntimeErr(f"{target.base.name!r} is not an array")
            if idx < 0 or idx >= len(arr):
                raise _RuntimeErr(
                    f"index {idx} out of bounds for {target.base.name!r}[{len(arr)}]")
            arr[idx] = _convert(value, base)
            return arr[idx]
        raise CodeaugError("invalid assignment target at runtime")

    def eval(self, e: N.Expr, env):
        if isinstance(e, N.IntLit):
            return e.value
        if isinstance(e, N.FloatLit):
            return e.value
        if isinstance(e, N.CharLit):
            return e.value
        if isinstance(e, N.StringLit):
            return e.value
        if isinstance(e, N.Ident):
            return self.find(env, e.name)[e.name]
        if isinstance(e, N.Index):
            arr = self.find(env, e.base.name)[e.base.name]
            idx = int(self.eval(e.index, env))
            if not isinstance(arr, list):
                raise _RuntimeErr(f"{e.base.name!r} is not an array")
            if idx < 0 or idx >= len(arr):
                raise _RuntimeErr(f"index {idx} out of bounds for {e.base.name!r}[{len(arr)}]")
            return arr[idx]
        if isinstance(e, N.Call):
            fn = self.functions[e.name]
            args = [self.eval(a, env) for a in e.args]
            return self.call(fn, args)
        if isinstance(e, N.Unary):
            if e.op in ("++", "--"):
                old = self.eval(e.operand, env)
                delta = 1 if e.op == "++" else -1
                new = self.assign(e.operand, old + delta, env)
                return old if e.postfix else new
            v = self.eval(e.operand, env)
            if e.op == "-":
                return -v
            if e.op == "+":
                return +v
            if e.op == "!":
                return 0 if self.truthy(v) else 1
            raise CodeaugError(f"bad unary op {e.op!r}")
        if isinstance(e, N.Binary):
            if e.op == "&&":
                if not self.truthy(self.eval(e.lhs, env)):
                    return 0
                return 1 if self.truthy(self.eval(e.rhs, env)) else 0
            if e.op == "||":
                if self.truthy(self.eval(e.lhs, env)):
                    return 1
                return 1 if self.truthy(self.eval(e.rhs, env)) else 0
            a = self.eval(e.lhs, env)
            b = self.eval(e.rhs, env)
            op = e.op
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if op == "/":
                if b == 0:
                    raise _RuntimeErr("division by zero")
                if isinstance(a, float) or isinstance(b, float):
                    return a / b
                return _c_div(a, b)
            if op == "%":
                if b == 0:
                    raise _RuntimeErr("modulo by zero")
                return _c_mod(int(a), int(b))
            if op == "<":
                return 1 if a < b else 0
            if op == "<=":
                return 1 if a <= b else 0
            if op == ">":
                return 1 if a > b else 0
            if op == ">=":
                return 1 if a >= b else 0
            if op == "==":
                return 1 if a == b else 0
            if op == "!=":
                return 1 if a != b else 0
            raise CodeaugError(f"bad binary op {op!r}")
        if isinstance(e, N.Assign):
            value = self.eval(e.value, env)
            return self.assign(e.target, value, env)
        raise CodeaugError(f"cannot evaluate {type(e).__name__}")


def run(ast: N.Ast, stdin: bytes = b"", step_limit: int = DEFAULT_STEP_LIMIT) -> ExecResult:
    """Execute a resolved tree; never raises for in-language failures."""
    if step_limit <= 0:
        raise ValueError("step_limit must be positive")
    interp = _Interp(ast, stdin, step_limit)
    try:
        interp.run_program()
    except _RuntimeErr as err:
        return ExecResult(stdout="".join(interp.out).encode("utf-8"),
                          status=STATUS_RUNTIME_ERROR, message=err.message)
    except _StepLimit:
        return ExecResult(stdout="".join(interp.out).encode("utf-8"),
                          status=STATUS_STEP_LIMIT)
    return ExecResult(stdout="".join(interp.out).encode("utf-8"), status=STATUS_OK)
