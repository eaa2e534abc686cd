from fractions import Fraction
import time

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from prodcheck.algebras import resolve_builtin
from prodcheck.diagram import parse
from prodcheck.engine import apply, basis_vector, dimension, evaluate, evaluate_recursive
from prodcheck.exceptions import MissingRole
from prodcheck.models.cli_model import Suite
from prodcheck.tensor import t_compose, t_identity_multi, t_tensor
from prodcheck.verify.runner import role_view
from tests.strategies import SIG, fixed_model, models, terms


@settings(max_examples=200, deadline=None)
@given(models(), terms)
def test_network_evaluation_matches_recursive_evaluation(model, t):
    assert evaluate(t, model) == evaluate_recursive(t, model)


@settings(max_examples=50, deadline=None)
@given(models())
def test_composition_and_tensor_are_functorial(model):
    h, k, g, f = (model.tensors[n] for n in ("h", "k", "g", "f"))
    assert evaluate(parse("g * f", SIG), model) == t_compose(g, f)
    assert evaluate(parse("h @ f", SIG), model) == t_tensor(h, f)
    assert evaluate(parse("(g @ id[U]) * (f @ k)", SIG), model) == t_tensor(t_compose(g, f), k)


BRAID_LAWS = [
    ("braidinv[U,W] * braid[U,W]", "id[U,W]"),
    ("braid[U,W] * braidinv[U,W]", "id[W,U]"),
    ("braid[U;W,U]", "(id[W] @ braid[U,U]) * (braid[U,W] @ id[U])"),
    ("braid[U,W;U]", "(braid[U,U] @ id[W]) * (id[U] @ braid[W,U])"),
    ("(braid[U,W] @ id[U]) * (id[U] @ braid[U,W]) * (braid[U,U] @ id[W])",
     "(id[W] @ braid[U,U]) * (braid[U,W] @ id[U]) * (id[U] @ braid[U,W])"),
    ("braid[U,U] * (g @ k)", "(k @ g) * braid[W;]"),
    ("braid[;U]", "id[U]"),
]


@pytest.mark.parametrize("lhs, rhs", BRAID_LAWS)
@settings(max_examples=20, deadline=None)
@given(model=models())
def test_braiding_laws(model, lhs, rhs):
    assert evaluate(parse(lhs, SIG), model) == evaluate(parse(rhs, SIG), model)


def test_scalar_and_sum_nodes():
    model = fixed_model()
    two_f = evaluate(parse("f + f", SIG), model)
    assert two_f == evaluate(parse("2 . f", SIG), model)
    assert evaluate(parse("f - f", SIG), model) == evaluate(parse("zero[U;W]", SIG), model)
    assert evaluate(parse("0 . f", SIG), model) == evaluate(parse("zero[U;W]", SIG), model)


def test_identity_on_unit_is_one():
    model = fixed_model()
    assert evaluate(parse("id[]", SIG), model).scalar() == 1


def test_dimension_and_apply(cross3):
    assert dimension(cross3) == 3
    e1, e2 = basis_vector(3, 0), basis_vector(3, 1)
    assert apply(cross3.tensors["wedge"], [e1, e2]) == (0, 0, 1)
    assert apply(cross3.tensors["cup"], [e1, e1]) == (1,)


def test_dimension_needs_cup_and_cap():
    model = fixed_model()
    with pytest.raises(MissingRole):
        dimension(model)


def test_identity_on_several_objects(cross3):
    assert evaluate(parse("id[V,V]", cross3.signature()), cross3) == t_identity_multi((3, 3))


@given(st.integers(min_value=0, max_value=6))
def test_basis_vector(k):
    v = basis_vector(7, k)
    assert v[k] == Fraction(1) and sum(v) == 1


def _numpy_holds(ndim):
    try:
        np.zeros((1,) * ndim)
    except ValueError:
        return False
    return True


def test_many_closed_loops_evaluate(cross3):
    cross1 = resolve_builtin("cross1")
    term = parse(" @ ".join(["(cup * cap)"] * 27), cross1.signature())
    assert evaluate(term, cross1).scalar() == 1
    term = parse(" @ ".join(["(cup * cap)"] * 30), cross3.signature())
    assert evaluate(term, cross3).scalar() == 3 ** 30


@pytest.mark.skipif(not _numpy_holds(54), reason="numpy build limited to fewer axes")
def test_wide_identity_uses_the_recursive_evaluator():
    cross1 = resolve_builtin("cross1")
    labels = ",".join(["V"] * 27)
    assert evaluate(parse(f"id[{labels}]", cross1.signature()), cross1) == t_identity_multi((1,) * 27)


@pytest.mark.parametrize("name, expected", [("cross3", -6), ("cross7", -378)])
def test_mounted_diagram_evaluates_quickly(name, expected, catalog):
    view = role_view(resolve_builtin(name), Suite.vpa)
    term = parse("mounts", view.signature(), catalog.macros)
    start = time.perf_counter()
    value = evaluate(term, view).scalar()
    assert value == expected
    assert time.perf_counter() - start < 20
