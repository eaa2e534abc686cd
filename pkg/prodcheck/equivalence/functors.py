"""Passing between composition algebras and vector product algebras.

``phi`` takes a composition algebra A ≅ I ⊕ V to the vector product algebra on
V; ``psi`` rebuilds I ⊕ V with the multiplication
(α, x)(β, y) = (αβ − x·y, αy + βx + x∧y). Coordinates on I ⊕ V are the unit
coordinate followed by the coordinates of V.
"""
from fractions import Fraction
from typing import Optional

import sympy

from ..exceptions import IsoCheckFailure, ShapeMismatch, SuiteFailure
from ..logs.logger import setup_logger
from ..models.algebra_model import DirectSumData, Model, Role
from ..models.catalog_model import Catalog
from ..models.cli_model import Suite
from ..models.term_model import GenDecl
from ..tensor import RationalTensor, first_difference, t_compose, t_tensor, zeros
from ..verify.runner import failed_ids, run_suite
from .splitting import split_unit, wedge_of_ca

logger = setup_logger("prodcheck: Equivalence")

ONE = Fraction(1)


def _self_dual_decls(label: str) -> dict[str, GenDecl]:
    return {
        "cup": GenDecl(name="cup", dom=(label, label), cod=()),
        "cap": GenDecl(name="cap", dom=(), cod=(label, label)),
    }


def phi(ca: Model, split: Optional[DirectSumData] = None) -> Model:
    """The vector product algebra on the complement V of the unit.

    cup_V = cup∘(i⊗i), cap_V = (q⊗q)∘cap and wedge_V = q∘∧∘(i⊗i), where ∧ is
    half the commutator of the multiplication.
    """
    split = split or split_unit(ca)
    i, q = split.i, split.q
    cup_v = t_compose(ca.role_tensor(Role.cup), t_tensor(i, i))
    cap_v = t_compose(t_tensor(q, q), ca.role_tensor(Role.cap))
    wedge_v = t_compose(q, t_compose(wedge_of_ca(ca), t_tensor(i, i)))

    gens = _self_dual_decls("V") | {"wedge": GenDecl(name="wedge", dom=("V", "V"), cod=("V",))}
    logger.info(f"phi({ca.name}): vector part of dimension {split.rank}")
    return Model(
        name=f"phi({ca.name})",
        objects={"V": split.rank},
        gens=gens,
        tensors={"cup": cup_v, "cap": cap_v, "wedge": wedge_v},
        roles={Role.cup: "cup", Role.cap: "cap", Role.wedge: "wedge"},
    )


def psi(vpa: Model, catalog: Optional[Catalog] = None, check: bool = False) -> Model:
    """The composition algebra I ⊕ V with ``e = (1, 0)``.

    Raises:
        SuiteFailure: when ``check`` is set and ``vpa`` fails the vpa suite.
    """
    if check:
        bad = failed_ids(run_suite(vpa, Suite.vpa, catalog))
        if bad:
            logger.error(f"psi({vpa.name}) refused: vpa axioms fail: {bad}")
            raise SuiteFailure("vpa", bad)

    cup, cap, wedge = (vpa.role_tensor(r) for r in (Role.cup, Role.cap, Role.wedge))
    d = wedge.cod[0]
    n = d + 1

    m = zeros((n, n, n))
    m[0, 0, 0] = ONE
    for j in range(d):
        m[0, j + 1, j + 1] = ONE
        m[j + 1, 0, j + 1] = ONE
        for k in range(d):
            m[j + 1, k + 1, 0] = -cup[j, k]
            for l in range(d):
                m[j + 1, k + 1, l + 1] = wedge[j, k, l]

    cup_a, cap_a = zeros((n, n)), zeros((n, n))
    cup_a[0, 0] = cap_a[0, 0] = ONE
    for j in range(d):
        for k in range(d):
            cup_a[j + 1, k + 1] = cup[j, k]
            cap_a[j + 1, k + 1] = cap[j, k]
    e = zeros((n,))
    e[0] = ONE

    gens = _self_dual_decls("A") | {
        "m": GenDecl(name="m", dom=("A", "A"), cod=("A",)),
        "e": GenDecl(name="e", dom=(), cod=("A",)),
    }
    tensors = {
        "cup": RationalTensor((n, n), (), cup_a),
        "cap": RationalTensor((), (n, n), cap_a),
        "m": RationalTensor((n, n), (n,), m),
        "e": RationalTensor((), (n,), e),
    }
    logger.info(f"psi({vpa.name}): algebra of dimension {n}")
    return Model(name=f"psi({vpa.name})", objects={"A": n}, gens=gens, tensors=tensors,
                 roles={Role.cup: "cup", Role.cap: "cap", Role.m: "m", Role.e: "e"})


def _mismatch(what: str, lhs: RationalTensor, rhs: RationalTensor) -> Optional[str]:
    if lhs.shape != rhs.shape:
        return f"{what}: shapes {lhs.shape} and {rhs.shape}"
    where = first_difference(lhs, rhs)
    if where is None:
        return None
    return f"{what} differs at {where}: {lhs[where]} != {rhs[where]}"


def _vpa_mismatch(h: RationalTensor, v: Model, w: Model) -> Optional[str]:
    hh = t_tensor(h, h)
    return (_mismatch("cup_W∘(h⊗h) = cup_V",
                      t_compose(w.role_tensor(Role.cup), hh), v.role_tensor(Role.cup))
            or _mismatch("h∘wedge_V = wedge_W∘(h⊗h)",
                         t_compose(h, v.role_tensor(Role.wedge)),
                         t_compose(w.role_tensor(Role.wedge), hh)))


def _ca_mismatch(f: RationalTensor, a: Model, b: Model) -> Optional[str]:
    ff = t_tensor(f, f)
    return (_mismatch("m_B∘(f⊗f) = f∘m_A",
                      t_compose(b.role_tensor(Role.m), ff), t_compose(f, a.role_tensor(Role.m)))
            or _mismatch("f∘e_A = e_B", t_compose(f, a.role_tensor(Role.e)), b.role_tensor(Role.e))
            or _mismatch("cup_B∘(f⊗f) = cup_A",
                         t_compose(b.role_tensor(Role.cup), ff), a.role_tensor(Role.cup)))


def is_vpa_morphism(h: RationalTensor, v: Model, w: Model) -> bool:
    return _vpa_mismatch(h, v, w) is None


def is_ca_morphism(f: RationalTensor, a: Model, b: Model) -> bool:
    return _ca_mismatch(f, a, b) is None


def check_vpa_morphism(h: RationalTensor, v: Model, w: Model) -> None:
    if problem := _vpa_mismatch(h, v, w):
        logger.error(f"{v.name} -> {w.name} is not a vpa morphism: {problem}")
        raise IsoCheckFailure(problem)


def check_ca_morphism(f: RationalTensor, a: Model, b: Model) -> None:
    if problem := _ca_mismatch(f, a, b):
        logger.error(f"{a.name} -> {b.name} is not a ca morphism: {problem}")
        raise IsoCheckFailure(problem)


def _check_invertible(t: RationalTensor, what: str) -> None:
    if len(t.dom) != 1 or len(t.cod) != 1 or t.dom != t.cod:
        raise IsoCheckFailure(f"{what} is not square: {t.dom} -> {t.cod}")
    if t.dom[0] and sympy.Matrix(t.matrix()).det() == 0:
        raise IsoCheckFailure(f"{what} is singular")


def round_trip(vpa: Model) -> RationalTensor:
    """The isomorphism V → phi(psi(V)) with its transport of cup and wedge checked.

    Raises:
        IsoCheckFailure: if the map is singular or fails to preserve cup or wedge.
    """
    rebuilt = psi(vpa)
    split = split_unit(rebuilt)
    image = phi(rebuilt, split)
    d = vpa.role_tensor(Role.wedge).cod[0]
    n = d + 1
    incl = zeros((d, n))
    for k in range(d):
        incl[k, k + 1] = ONE
    h = t_compose(split.q, RationalTensor((d,), (n,), incl))
    _check_invertible(h, f"{vpa.name} -> {image.name}")
    check_vpa_morphism(h, vpa, image)
    logger.info(f"Round trip for {vpa.name} verified")
    return h


def ca_round_trip(ca: Model) -> RationalTensor:
    """The isomorphism A → psi(phi(A)), a ↦ (p(a), q(a)), checked to preserve m, e and cup.

    Raises:
        IsoCheckFailure: if the map is singular or not a ca morphism.
    """
    split = split_unit(ca)
    rebuilt = psi(phi(ca, split))
    n, d = split.p.dom[0], split.rank
    if rebuilt.objects["A"] != n:
        raise ShapeMismatch(f"psi(phi({ca.name})) has dimension {rebuilt.objects['A']}, expected {n}")
    f = zeros((n, n))
    for a in range(n):
        f[a, 0] = split.p[a]
        for k in range(d):
            f[a, k + 1] = split.q[a, k]
    iso = RationalTensor((n,), (n,), f)
    _check_invertible(iso, f"{ca.name} -> {rebuilt.name}")
    check_ca_morphism(iso, ca, rebuilt)
    logger.info(f"CA round trip for {ca.name} verified")
    return iso
