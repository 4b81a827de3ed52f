from . import nodes
from .normalize import DEFAULT_PRELUDE, normalize
from .parser import parse
from .printer import pretty_print

__all__ = ["nodes", "parse", "pretty_print", "normalize", "DEFAULT_PRELUDE"]
