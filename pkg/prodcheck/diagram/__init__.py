from .parser import parse
from .pretty import pretty
from .typecheck import is_closed, typecheck

__all__ = ["parse", "pretty", "typecheck", "is_closed"]
