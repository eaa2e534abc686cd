"""Splitting the unit off a composition algebra: A ≅ I ⊕ V."""
from fractions import Fraction

import sympy

from ..exceptions import NotIdempotent
from ..logs.logger import setup_logger
from ..models.algebra_model import DirectSumData, Model, Role
from ..models.term_model import GenDecl
from ..tensor import (
    RationalTensor, first_difference, t_add, t_compose, t_identity, t_scale, t_zero, zeros,
)

logger = setup_logger("prodcheck: Splitting")


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _assert_equal(what: str, lhs: RationalTensor, rhs: RationalTensor) -> None:
    where = first_difference(lhs, rhs)
    if where is not None:
        logger.error(f"Direct-sum law {what} fails at {where}")
        raise NotIdempotent(f"{what} fails at {where}: {lhs[where]} != {rhs[where]}")


def split_unit(ca: Model) -> DirectSumData:
    """Split the idempotent id - e∘p with an exact rank factorization.

    ``i`` is spanned by the pivot columns of the idempotent (deterministic
    column order) and ``q`` by the nonzero rows of its reduced echelon form.

    Raises:
        MissingRole: if cup, m or e is not designated.
        NotIdempotent: if cup(e, e) != 1 or a direct-sum law fails.
    """
    for role in (Role.cup, Role.m, Role.e):
        ca.role_gen(role)
    cup = ca.role_tensor(Role.cup)
    e = ca.role_tensor(Role.e)
    n = e.cod[0]

    p = RationalTensor((n,), (), [sum((cup[a, b] * e[b] for b in range(n)), Fraction(0)) for a in range(n)])
    unit = t_compose(p, e).scalar()
    if unit != 1:
        logger.error(f"cup(e, e) = {unit} in {ca.name}")
        raise NotIdempotent(f"cup(e, e) = {unit}, expected 1")

    ident = t_identity(n)
    idem = t_add(ident, t_scale(-1, t_compose(e, p)))
    _assert_equal("idem∘idem = idem", t_compose(idem, idem), idem)

    # columns of E are the images of the basis vectors
    E = sympy.Matrix(n, n, lambda r, c: sympy.Rational(idem[c, r].numerator, idem[c, r].denominator))
    _, pivots = E.rref(pivots=True)
    rank = len(pivots)
    i_data, q_data = zeros((rank, n)), zeros((n, rank))
    if rank:
        C, F = E.rank_decomposition()
        for k in range(rank):
            for a in range(n):
                i_data[k, a] = _to_fraction(C[a, k])
                q_data[a, k] = _to_fraction(F[k, a])
    i = RationalTensor((rank,), (n,), i_data)
    q = RationalTensor((n,), (rank,), q_data)

    _assert_equal("q∘i = id", t_compose(q, i), t_identity(rank))
    _assert_equal("p∘i = 0", t_compose(p, i), t_zero((rank,), ()))
    _assert_equal("q∘e = 0", t_compose(q, e), t_zero((), (rank,)))
    _assert_equal("e∘p + i∘q = id", t_add(t_compose(e, p), t_compose(i, q)), ident)
    logger.info(f"Split {ca.name}: rank {rank}, pivots {tuple(pivots)}")
    return DirectSumData(e=e, p=p, i=i, q=q, idem=idem, pivots=tuple(int(c) for c in pivots))


def wedge_of_ca(ca: Model) -> RationalTensor:
    m = ca.role_tensor(Role.m)
    swapped = m.data.transpose(1, 0, 2)
    return RationalTensor(m.dom, m.cod, (m.data - swapped) * Fraction(1, 2))


def _fresh(base: str, taken) -> str:
    name, k = base, 1
    while name in taken:
        name, k = f"{base}_{k}", k + 1
    return name


def augment(ca: Model, split: DirectSumData | None = None) -> Model:
    """``ca`` extended by the object V and generators p, q, i of its unit splitting."""
    split = split or split_unit(ca)
    label = ca.role_decl(Role.e).cod[0]
    v = _fresh("V", ca.objects)
    names = {}
    for role in ("p", "q", "i"):
        names[role] = _fresh(role, set(ca.gens) | set(names.values()))
    gens = dict(ca.gens) | {
        names["p"]: GenDecl(name=names["p"], dom=(label,), cod=()),
        names["q"]: GenDecl(name=names["q"], dom=(label,), cod=(v,)),
        names["i"]: GenDecl(name=names["i"], dom=(v,), cod=(label,)),
    }
    tensors = dict(ca.tensors) | {names["p"]: split.p, names["q"]: split.q, names["i"]: split.i}
    roles = dict(ca.roles) | {Role.p: names["p"], Role.q: names["q"], Role.i: names["i"]}
    return Model(name=ca.name, objects=dict(ca.objects) | {v: split.rank},
                 gens=gens, tensors=tensors, roles=roles)
