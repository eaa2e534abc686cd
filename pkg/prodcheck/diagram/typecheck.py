from ..exceptions import TypeMismatch, UnknownGenerator, UnknownObject
from ..models.term_model import (
    Braid, BraidInv, Compose, Gen, Id, ObjType, ScalarMul, Signature, Sum, Tensor, Term, Zero,
)


def _check_labels(labels: ObjType, sig: Signature) -> None:
    for label in labels:
        if label not in sig.objects:
            raise UnknownObject(label)


def typecheck(t: Term, sig: Signature, path: tuple[str, ...] = ()) -> tuple[ObjType, ObjType]:
    """Return the unique ``(dom, cod)`` of ``t``.

    Raises:
        UnknownGenerator: a generator name is not declared in ``sig``.
        UnknownObject: an object label is not in the signature's alphabet.
        TypeMismatch: the first ill-typed subterm, located by its path.
    """
    match t:
        case Id(o=o):
            _check_labels(o, sig)
            return o, o
        case Gen(name=name):
            decl = sig.gens.get(name)
            if decl is None:
                raise UnknownGenerator(name)
            return decl.dom, decl.cod
        case Compose(after=after, before=before):
            b_dom, b_cod = typecheck(before, sig, path + ("before",))
            a_dom, a_cod = typecheck(after, sig, path + ("after",))
            if b_cod != a_dom:
                raise TypeMismatch(path, expected=list(a_dom), found=list(b_cod))
            return b_dom, a_cod
        case Tensor(left=left, right=right):
            l_dom, l_cod = typecheck(left, sig, path + ("left",))
            r_dom, r_cod = typecheck(right, sig, path + ("right",))
            return l_dom + r_dom, l_cod + r_cod
        case Braid(x=x, y=y):
            _check_labels(x + y, sig)
            return x + y, y + x
        case BraidInv(x=x, y=y):
            _check_labels(x + y, sig)
            return y + x, x + y
        case ScalarMul(t=inner):
            return typecheck(inner, sig, path + ("t",))
        case Sum(a=a, b=b):
            a_type = typecheck(a, sig, path + ("a",))
            b_type = typecheck(b, sig, path + ("b",))
            if a_type != b_type:
                raise TypeMismatch(path + ("b",), expected=_show(a_type), found=_show(b_type))
            return a_type
        case Zero(dom=dom, cod=cod):
            _check_labels(dom + cod, sig)
            return dom, cod
    raise TypeError(f"not a term: {t!r}")


def is_closed(t: Term, sig: Signature) -> bool:
    return typecheck(t, sig) == ((), ())


def _show(typing: tuple[ObjType, ObjType]) -> str:
    dom, cod = typing
    return f"[{','.join(dom)}] -> [{','.join(cod)}]"
