"""Concrete witnesses: cross-product algebras, Cayley-Dickson algebras and controls."""
import re
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy
from sympy import LeviCivita

from ..exceptions import UnknownBuiltin, UnsupportedDimension
from ..logs.logger import setup_logger
from ..models.algebra_model import CDParams, Model, Role
from ..models.term_model import GenDecl
from ..tensor import RationalTensor, zeros

logger = setup_logger("prodcheck: Builtin Algebras")

CD_NAMES = {0: "real", 1: "complex", 2: "quaternion", 3: "octonion"}
CROSS_DIMS = (0, 1, 3, 7)

# Suites each built-in family is predicted to fail, used by the "builtin" profile.
EXPECTED_FAILURES = {
    "cross7": frozenset({"assoc"}),
}


def expected_failing_suites(name: str) -> frozenset[str]:
    match = re.fullmatch(r"zerowedge(\d+)", name)
    if match and int(match.group(1)) >= 2:
        return frozenset({"vpa", "assoc"})
    return EXPECTED_FAILURES.get(name, frozenset())


def _conj(x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return (x[0],) + tuple(-v for v in x[1:])


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def cd_multiply(x: Sequence[Fraction], y: Sequence[Fraction], gammas: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """(a,b)(c,d) = (ac + γ d̄b, da + bc̄), applied recursively."""
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    gamma, inner = gammas[-1], gammas[:-1]
    left = _add(cd_multiply(a, c, inner), tuple(gamma * v for v in cd_multiply(_conj(d), b, inner)))
    right = _add(cd_multiply(d, a, inner), cd_multiply(b, _conj(c), inner))
    return left + right


def _basis(n: int, k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(j == k)) for j in range(n))


def _inverse(matrix: RationalTensor) -> list[list[Fraction]]:
    inv = sympy.Matrix(matrix.matrix()).inv()
    n = inv.rows
    return [[Fraction(int(inv[r, c].p), int(inv[r, c].q)) for c in range(n)] for r in range(n)]


def _self_dual_gens(label: str) -> dict[str, GenDecl]:
    return {
        "cup": GenDecl(name="cup", dom=(label, label), cod=()),
        "cap": GenDecl(name="cap", dom=(), cod=(label, label)),
    }


def cd_name(params: CDParams) -> str:
    base = CD_NAMES.get(params.levels, f"cd{params.levels}")
    if all(g == -1 for g in params.gammas):
        return base
    return base + ":" + "".join("+" if g > 0 else "-" for g in params.gammas)


def cayley_dickson(params: CDParams, name: str | None = None) -> Model:
    n = 2 ** params.levels
    gammas = tuple(params.gammas)
    basis = [_basis(n, k) for k in range(n)]

    m = zeros((n, n, n))
    cup = zeros((n, n))
    for a in range(n):
        for b in range(n):
            m[a, b, :] = cd_multiply(basis[a], basis[b], gammas)
            cup[a, b] = cd_multiply(basis[a], _conj(basis[b]), gammas)[0]
    cup_t = RationalTensor((n, n), (), cup)
    e = zeros((n,))
    e[0] = Fraction(1)

    gens = _self_dual_gens("A") | {
        "m": GenDecl(name="m", dom=("A", "A"), cod=("A",)),
        "e": GenDecl(name="e", dom=(), cod=("A",)),
    }
    tensors = {
        "cup": cup_t,
        "cap": RationalTensor((), (n, n), _inverse(RationalTensor((n,), (n,), cup))),
        "m": RationalTensor((n, n), (n,), m),
        "e": RationalTensor((), (n,), e),
    }
    roles = {Role.cup: "cup", Role.cap: "cap", Role.m: "m", Role.e: "e"}
    return Model(name=name or cd_name(params), objects={"A": n}, gens=gens, tensors=tensors, roles=roles)


def _vpa_model(name: str, n: int, wedge) -> Model:
    delta = zeros((n, n))
    for k in range(n):
        delta[k, k] = Fraction(1)
    gens = _self_dual_gens("V") | {"wedge": GenDecl(name="wedge", dom=("V", "V"), cod=("V",))}
    tensors = {
        "cup": RationalTensor((n, n), (), delta),
        "cap": RationalTensor((), (n, n), delta),
        "wedge": RationalTensor((n, n), (n,), wedge),
    }
    roles = {Role.cup: "cup", Role.cap: "cap", Role.wedge: "wedge"}
    return Model(name=name, objects={"V": n}, gens=gens, tensors=tensors, roles=roles)


def cross_vpa(n: int) -> Model:
    """Cross-product algebra on the standard inner product space of dimension ``n``.

    Raises:
        UnsupportedDimension: unless ``n`` is 0, 1, 3 or 7.
    """
    if n not in CROSS_DIMS:
        raise UnsupportedDimension(n)
    wedge = zeros((n, n, n))
    if n == 3:
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    wedge[i, j, k] = Fraction(int(LeviCivita(i, j, k)))
    elif n == 7:
        octonion = cayley_dickson(CDParams(levels=3, gammas=(-1, -1, -1))).tensors["m"]
        # imaginary part of e_i e_j on the imaginary units e_1..e_7
        wedge[:, :, :] = octonion.data[1:, 1:, 1:]
    return _vpa_model(f"cross{n}", n, wedge)


def zero_wedge_control(n: int) -> Model:
    return _vpa_model(f"zerowedge{n}", n, zeros((n, n, n)))


def _parse_signs(name: str, signs: str, levels: int) -> CDParams:
    if len(signs) != levels or set(signs) - {"+", "-"}:
        raise UnknownBuiltin(f"{name} (need {levels} signs from '+-')")
    return CDParams(levels=levels, gammas=tuple(1 if s == "+" else -1 for s in signs))


@lru_cache(maxsize=None)
def resolve_builtin(name: str) -> Model:
    """Look up a built-in model by name.

    Raises:
        UnknownBuiltin: for names outside the built-in families.
        UnsupportedDimension: for ``cross<N>`` with N not in {0, 1, 3, 7}.
    """
    logger.info(f"Resolving built-in model {name}")
    if match := re.fullmatch(r"cross(\d+)", name):
        return cross_vpa(int(match.group(1)))
    if match := re.fullmatch(r"zerowedge(\d+)", name):
        return zero_wedge_control(int(match.group(1)))
    base, _, signs = name.partition(":")
    levels = {v: k for k, v in CD_NAMES.items()}.get(base)
    if levels is None:
        raise UnknownBuiltin(name)
    params = _parse_signs(name, signs, levels) if signs else CDParams(levels=levels, gammas=(-1,) * levels)
    return cayley_dickson(params, name=name if signs else None)


def list_builtins() -> list[str]:
    return [
        "cross0", "cross1", "cross3", "cross7",
        "real", "complex", "quaternion", "octonion",
        "zerowedge0", "zerowedge1", "zerowedge2",
        "complex:+", "quaternion:+-", "octonion:+--",
    ]
