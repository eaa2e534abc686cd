from ..models.helper import format_rational
from ..models.term_model import (
    Braid, BraidInv, Compose, Gen, Id, ObjType, ScalarMul, Sum, Tensor, Term, Zero,
)


def _labels(o: ObjType) -> str:
    return ",".join(o)


def _braid_args(x: ObjType, y: ObjType) -> str:
    if len(x) == 1 and len(y) == 1:
        return f"{x[0]},{y[0]}"
    return f"{_labels(x)};{_labels(y)}"


def pretty(t: Term) -> str:
    """Canonical DSL text; every compound node is parenthesized."""
    match t:
        case Id(o=o):
            return f"id[{_labels(o)}]"
        case Gen(name=name):
            return name
        case Compose(after=after, before=before):
            return f"({pretty(after)} * {pretty(before)})"
        case Tensor(left=left, right=right):
            return f"({pretty(left)} @ {pretty(right)})"
        case Braid(x=x, y=y):
            return f"braid[{_braid_args(x, y)}]"
        case BraidInv(x=x, y=y):
            return f"braidinv[{_braid_args(x, y)}]"
        case ScalarMul(c=c, t=inner):
            return f"({format_rational(c)} . {pretty(inner)})"
        case Sum(a=a, b=b):
            return f"({pretty(a)} + {pretty(b)})"
        case Zero(dom=dom, cod=cod):
            return f"zero[{_labels(dom)};{_labels(cod)}]"
    raise TypeError(f"not a term: {t!r}")
