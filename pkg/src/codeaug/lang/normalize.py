"""Source normalization: fixed prelude + canonical formatting."""

from __future__ import annotations

from .parser import parse
from .printer import pretty_print

DEFAULT_PRELUDE = "#include <stdio.h>\n#include <iostream>\nusing namespace std;\n"


def normalize(text: str, prelude: str = DEFAULT_PRELUDE) -> str:
    """Prepend `prelude`, strip comments and canonicalize whitespace.

    The same prelude is used for every program so normalization cannot
    introduce label-correlated differences. Idempotent: the parser skips
    preprocessor lines and using-directives, so a present prelude is
    simply re-canonicalized.
    """
    if prelude and not prelude.endswith("\n"):
        prelude += "\n"
    body = pretty_print(parse(text))
    return prelude + body
