"""Tokenizer for the mini-language.

Comments (// and /* */) and preprocessor lines (leading #) are skipped so
that a fixed include prelude can be prepended without affecting the tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MiniSyntaxError, UnsupportedConstruct

KEYWORDS = {
    "int", "double", "char", "void",
    "if", "else", "for", "while", "return", "break", "continue",
    "using", "namespace",
}

# Recognized so we can reject them with a precise message instead of a
# generic syntax error: these are valid C/C++ outside the subset.
UNSUPPORTED_KEYWORDS = {
    "goto", "switch", "case", "default", "do", "struct", "union", "enum",
    "typedef", "static", "const", "unsigned", "signed", "long", "short",
    "float", "sizeof", "class", "template", "auto", "extern", "register",
    "volatile", "bool", "new", "delete",
}

TWO_CHAR_OPS = ["<<", ">>", "++", "--", "<=", ">=", "==", "!=", "&&", "||"]
ONE_CHAR_OPS = "+-*/%<>=!&(){}[];,"

ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "\\": "\\", "'": "'", '"': '"', "0": "\0"}
UNESCAPES = {v: "\\" + k for k, v in ESCAPES.items()}


@dataclass
class Token:
    kind: str  # "ident" | "kw" | "int" | "float" | "char" | "string" | "op" | "eof"
    text: str
    line: int
    col: int
    value: object = None


def tokenize(source: str) -> list[Token]:
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)

    def err(msg, l=None, c=None):
        raise MiniSyntaxError(msg, l if l is not None else line, c if c is not None else col)

    def advance(k=1):
        nonlocal i, line, col
        for _ in range(k):
            if i < n and source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            advance()
            continue
        if ch == "#":
            # preprocessor directive: skip to end of line
            while i < n and source[i] != "\n":
                advance()
            continue
        if source.startswith("//", i):
            while i < n and source[i] != "\n":
                advance()
            continue
        if source.startswith("/*", i):
            start_l, start_c = line, col
            advance(2)
            while i < n and not source.startswith("*/", i):
                advance()
            if i >= n:
                err("unterminated block comment", start_l, start_c)
            advance(2)
            continue

        tl, tc = line, col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            advance(j - i)
            if word in UNSUPPORTED_KEYWORDS:
                raise UnsupportedConstruct(f"'{word}' is outside the supported subset", tl, tc)
            kind = "kw" if word in KEYWORDS else "ident"
            toks.append(Token(kind, word, tl, tc))
            continue

        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            j = i
            while j < n and source[j].isdigit():
                j += 1
            is_float = False
            if j < n and source[j] == ".":
                is_float = True
                j += 1
                while j < n and source[j].isdigit():
                    j += 1
            if j < n and source[j] in "eE":
                k = j + 1
                if k < n and source[k] in "+-":
                    k += 1
                if k < n and source[k].isdigit():
                    is_float = True
                    j = k
                    while j < n and source[j].isdigit():
                        j += 1
            text = source[i:j]
            advance(j - i)
            if is_float:
                toks.append(Token("float", text, tl, tc, value=float(text)))
            else:
                toks.append(Token("int", text, tl, tc, value=int(text)))
            continue

        if ch == "'":
            advance()
            if i >= n:
                err("unterminated character literal", tl, tc)
            if source[i] == "\\":
                advance()
                if i >= n or source[i] not in ESCAPES:
                    err("unknown escape in character literal", tl, tc)
                val = ESCAPES[source[i]]
                advance()
            else:
                val = source[i]
                advance()
            if i >= n or source[i] != "'":
                err("unterminated character literal", tl, tc)
            advance()
            toks.append(Token("char", val, tl, tc, value=ord(val)))
            continue

        if ch == '"':
            advance()
            chunks: list[str] = []
            while i < n and source[i] != '"':
                if source[i] == "\n":
                    err("unterminated string literal", tl, tc)
                if source[i] == "\\":
                    advance()
                    if i >= n or source[i] not in ESCAPES:
                        err("unknown escape in string literal", tl, tc)
                    chunks.append(ESCAPES[source[i]])
                    advance()
                else:
                    chunks.append(source[i])
                    advance()
            if i >= n:
                err("unterminated string literal", tl, tc)
            advance()
            toks.append(Token("string", "".join(chunks), tl, tc, value="".join(chunks)))
            continue

        two = source[i:i + 2]
        if two in TWO_CHAR_OPS:
            advance(2)
            toks.append(Token("op", two, tl, tc))
            continue
        if ch in ONE_CHAR_OPS:
            advance()
            toks.append(Token("op", ch, tl, tc))
            continue

        err(f"unexpected character {ch!r}")

    toks.append(Token("eof", "", line, col))
    return toks


def escape_string(text: str) -> str:
    """Re-encode a decoded string for a double-quoted literal."""
    out = []
    for ch in text:
        if ch == '"':
            out.append('\\"')
        elif ch in UNESCAPES and ch != "'":
            out.append(UNESCAPES[ch])
        elif 32 <= ord(ch) < 127:
            out.append(ch)
        else:
            raise MiniSyntaxError(f"character {ch!r} is not printable in this subset")
    return "".join(out)


def escape_char(code: int) -> str:
    """Re-encode a character code for a single-quoted literal."""
    ch = chr(code)
    if ch == "'":
        return "\\'"
    if ch in UNESCAPES and ch != '"':
        return UNESCAPES[ch]
    if 32 <= ord(ch) < 127:
        return ch
    raise MiniSyntaxError(f"character code {code} is not printable in this subset")
