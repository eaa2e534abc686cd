from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
import opt_einsum

from ..diagram.typecheck import typecheck
from ..exceptions import MissingRole, ShapeMismatch
from ..logs.logger import setup_logger
from ..models.algebra_model import Model, Role
from ..models.term_model import (
    Braid, BraidInv, Compose, Gen, Id, ScalarMul, Sum, Tensor, Term, Zero,
)
from ..tensor import (
    RationalTensor, fraction_array, t_add, t_braid, t_compose, t_identity_multi,
    t_scale, t_tensor, t_zero, zeros,
)

logger = setup_logger("prodcheck: Evaluator")

# one einsum call can name at most 52 axes
MAX_BOUNDARY = 52


@dataclass
class _Fragment:
    nodes: list[tuple[np.ndarray, list[int]]]
    inputs: list[int]
    outputs: list[int]
    coeff: Fraction = Fraction(1)


@dataclass
class _NetworkCompiler:
    model: Model
    extent: list[int] = field(default_factory=list)
    parent: list[int] = field(default_factory=list)

    def fresh(self, dims: Sequence[int]) -> list[int]:
        wires = []
        for d in dims:
            wires.append(len(self.extent))
            self.extent.append(d)
            self.parent.append(len(self.parent))
        return wires

    def find(self, w: int) -> int:
        while self.parent[w] != w:
            self.parent[w] = self.parent[self.parent[w]]
            w = self.parent[w]
        return w

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def leaf(self, tensor: RationalTensor) -> _Fragment:
        ins, outs = self.fresh(tensor.dom), self.fresh(tensor.cod)
        coeff = Fraction(0) if not any(True for _ in tensor.nonzero()) else Fraction(1)
        return _Fragment([(tensor.data, ins + outs)], ins, outs, coeff)

    def compile(self, t: Term) -> _Fragment:
        model = self.model
        match t:
            case Id(o=o):
                wires = self.fresh(model.extents(o))
                return _Fragment([], wires, list(wires))
            case Braid(x=x, y=y):
                wx, wy = self.fresh(model.extents(x)), self.fresh(model.extents(y))
                return _Fragment([], wx + wy, wy + wx)
            case BraidInv(x=x, y=y):
                wx, wy = self.fresh(model.extents(x)), self.fresh(model.extents(y))
                return _Fragment([], wy + wx, wx + wy)
            case Gen(name=name):
                return self.leaf(model.tensors[name])
            case Compose(after=after, before=before):
                fb = self.compile(before)
                fa = self.compile(after)
                for a, b in zip(fa.inputs, fb.outputs):
                    self.union(a, b)
                return _Fragment(fb.nodes + fa.nodes, fb.inputs, fa.outputs, fa.coeff * fb.coeff)
            case Tensor(left=left, right=right):
                fl, fr = self.compile(left), self.compile(right)
                return _Fragment(fl.nodes + fr.nodes, fl.inputs + fr.inputs,
                                 fl.outputs + fr.outputs, fl.coeff * fr.coeff)
            case ScalarMul(c=c, t=inner):
                frag = self.compile(inner)
                frag.coeff *= c
                return frag
            case Sum(a=a, b=b):
                return self.leaf(t_add(evaluate(a, model), evaluate(b, model)))
            case Zero(dom=dom, cod=cod):
                return self.leaf(t_zero(model.extents(dom), model.extents(cod)))
        raise TypeError(f"not a term: {t!r}")


def _contract(compiler: _NetworkCompiler, frag: _Fragment, dom: tuple[int, ...],
              cod: tuple[int, ...]) -> RationalTensor:
    find = compiler.find
    inputs = [find(w) for w in frag.inputs]
    nodes = [(data, [find(w) for w in wires]) for data, wires in frag.nodes]
    outputs = []
    for w in (find(w) for w in frag.outputs):
        if w in inputs:
            # pass-through strand: route it through an explicit delta
            (fresh,) = compiler.fresh([compiler.extent[w]])
            nodes.append((t_identity_multi([compiler.extent[w]]).data, [w, fresh]))
            w = fresh
        outputs.append(w)

    if frag.coeff == 0:
        return t_zero(dom, cod)
    wires_used = {w for _, ws in nodes for w in ws} | set(inputs) | set(outputs)
    if any(compiler.extent[w] == 0 for w in wires_used):
        return t_zero(dom, cod)
    if not nodes:
        return RationalTensor(dom, cod, [frag.coeff])

    operands = []
    for data, ws in nodes:
        operands.extend([data, ws])
    # pairwise order from a dynamic-programming path search; wire ids are remapped per step
    result = opt_einsum.contract(*operands, inputs + outputs, optimize="auto-hq")
    data = fraction_array(result, dom + cod)
    if frag.coeff != 1:
        data = data * frag.coeff
    return RationalTensor(dom, cod, data)


def evaluate(t: Term, m: Model) -> RationalTensor:
    """Evaluate a term in a model.

    Structural parts of the diagram become a tensor network contracted
    pairwise along a searched path; sums and zeros are evaluated densely as
    leaves. Terms with more open strands than one einsum step can name go
    through the recursive evaluator.

    Raises:
        UnknownGenerator, TypeMismatch: if ``t`` does not typecheck against ``m``.
    """
    dom_labels, cod_labels = typecheck(t, m.signature())
    if len(dom_labels) + len(cod_labels) > MAX_BOUNDARY:
        return evaluate_recursive(t, m)
    compiler = _NetworkCompiler(model=m)
    frag = compiler.compile(t)
    return _contract(compiler, frag, m.extents(dom_labels), m.extents(cod_labels))


def evaluate_recursive(t: Term, m: Model) -> RationalTensor:
    """Innermost-first evaluation with the pairwise tensor primitives."""
    match t:
        case Id(o=o):
            return t_identity_multi(m.extents(o))
        case Gen(name=name):
            if name not in m.tensors:
                typecheck(t, m.signature())
            return m.tensors[name]
        case Compose(after=after, before=before):
            return t_compose(evaluate_recursive(after, m), evaluate_recursive(before, m))
        case Tensor(left=left, right=right):
            return t_tensor(evaluate_recursive(left, m), evaluate_recursive(right, m))
        case Braid(x=x, y=y):
            return t_braid(m.extents(x), m.extents(y))
        case BraidInv(x=x, y=y):
            # symmetric models: the inverse braiding is the swap back
            return t_braid(m.extents(y), m.extents(x))
        case ScalarMul(c=c, t=inner):
            return t_scale(c, evaluate_recursive(inner, m))
        case Sum(a=a, b=b):
            return t_add(evaluate_recursive(a, m), evaluate_recursive(b, m))
        case Zero(dom=dom, cod=cod):
            return t_zero(m.extents(dom), m.extents(cod))
    raise TypeError(f"not a term: {t!r}")


def dimension(m: Model, label: str | None = None) -> Fraction:
    """Closed loop cup ∘ cap on the self-dual object."""
    for role in (Role.cup, Role.cap):
        if role not in m.roles:
            raise MissingRole(role.value, m.name)
    own = m.self_dual_label()
    if label is not None and label != own:
        raise MissingRole(Role.cup.value, f"{m.name} (no cup on {label})")
    loop = Compose(after=Gen(name=m.roles[Role.cup]), before=Gen(name=m.roles[Role.cap]))
    return evaluate(loop, m).scalar()


def apply(f: RationalTensor, args: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Feed coordinate vectors into the domain of ``f``; returns flattened cod coordinates."""
    if len(args) != len(f.dom):
        raise ShapeMismatch(f"expected {len(f.dom)} arguments, got {len(args)}")
    result = f.data
    for extent, arg in zip(f.dom, args):
        if len(arg) != extent:
            raise ShapeMismatch(f"argument of length {len(arg)} for extent {extent}")
        vec = fraction_array(list(arg), (extent,))
        if extent == 0:
            return tuple(zeros(f.cod).flat)
        result = np.tensordot(vec, result, axes=([0], [0]))
    return tuple(Fraction(v) for v in np.asarray(result, dtype=object).reshape(-1))


def basis_vector(extent: int, k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(j == k)) for j in range(extent))
