from fractions import Fraction

import pytest
from hypothesis import given, settings

from prodcheck.diagram import is_closed, parse, pretty, typecheck
from prodcheck.exceptions import DslSyntaxError, TypeMismatch, UnknownGenerator, UnknownObject
from prodcheck.models.term_model import (
    Braid, BraidInv, Compose, Gen, Id, ScalarMul, Sum, Tensor, Zero,
)
from tests.strategies import SIG, terms


@settings(max_examples=1000, deadline=None)
@given(terms)
def test_pretty_then_parse_is_identity(t):
    assert parse(pretty(t), SIG) == t


def test_precedence_tensor_binds_tighter_than_compose():
    t = parse("h * k @ id[U]", SIG)
    assert t == Compose(after=Gen(name="h"), before=Tensor(left=Gen(name="k"), right=Id(o=("U",))))


def test_scalar_prefix_covers_the_whole_composite():
    t = parse("2 . g * f", SIG)
    assert t == ScalarMul(c=Fraction(2), t=Compose(after=Gen(name="g"), before=Gen(name="f")))


def test_scalar_prefix_after_an_operator_scales_one_atom():
    two_f = ScalarMul(c=Fraction(2), t=Gen(name="f"))
    assert parse("g * 2 . f", SIG) == Compose(after=Gen(name="g"), before=two_f)
    assert parse("g * 2 . f * k", SIG) == Compose(
        after=Compose(after=Gen(name="g"), before=two_f), before=Gen(name="k"))
    assert parse("id[U] @ -1/2 . k", SIG) == Tensor(
        left=Id(o=("U",)), right=ScalarMul(c=Fraction(-1, 2), t=Gen(name="k")))
    assert parse("h * (k @ 3 . 2 . k)", SIG) == Compose(
        after=Gen(name="h"),
        before=Tensor(left=Gen(name="k"),
                      right=ScalarMul(c=Fraction(3), t=ScalarMul(c=Fraction(2), t=Gen(name="k")))))


def test_difference_is_sum_with_negated_right_operand():
    t = parse("id[U] - g * f", SIG)
    assert t == Sum(a=Id(o=("U",)), b=ScalarMul(c=Fraction(-1), t=Compose(after=Gen(name="g"), before=Gen(name="f"))))


def test_sums_associate_to_the_left():
    t = parse("k + k + -1/2 . k", SIG)
    assert t == Sum(a=Sum(a=Gen(name="k"), b=Gen(name="k")), b=ScalarMul(c=Fraction(-1, 2), t=Gen(name="k")))


def test_braid_forms():
    assert parse("braid[U,W]", SIG) == Braid(x=("U",), y=("W",))
    assert parse("braid[U,U;W]", SIG) == Braid(x=("U", "U"), y=("W",))
    assert parse("braidinv[;U]", SIG) == BraidInv(x=(), y=("U",))
    assert typecheck(parse("braid[U;W,W]", SIG), SIG) == (("U", "W", "W"), ("W", "W", "U"))
    assert typecheck(BraidInv(x=("U",), y=("W",)), SIG) == (("W", "U"), ("U", "W"))


def test_zero_and_identity_on_unit():
    assert parse("zero[U;]", SIG) == Zero(dom=("U",), cod=())
    assert typecheck(parse("id[]", SIG), SIG) == ((), ())


def test_comments_and_newlines_are_ignored():
    assert parse("s *   # close it\n  k", SIG) == Compose(after=Gen(name="s"), before=Gen(name="k"))


def test_closed_terms():
    assert is_closed(parse("s * k", SIG), SIG)
    assert not is_closed(parse("k", SIG), SIG)


def test_macros_expand_as_atoms():
    macros = {"loop": "s * g * f * g * f * k"}
    t = parse("2 . loop @ loop", SIG, macros)
    assert isinstance(t, ScalarMul) and isinstance(t.t, Tensor)
    assert typecheck(t, SIG) == ((), ())


def test_generator_names_shadow_macros():
    assert parse("k", SIG, {"k": "id[U]"}) == Gen(name="k")


def test_recursive_macro_is_rejected():
    with pytest.raises(DslSyntaxError):
        parse("a", SIG, {"a": "b", "b": "a"})


@pytest.mark.parametrize("text, line, column", [
    ("h * (", 1, 6),
    ("h *\n  )", 2, 3),
    ("braid[U]", 1, 7),
    ("1/0 . k", 1, 3),
    ("k k", 1, 3),
])
def test_syntax_errors_carry_location(text, line, column):
    with pytest.raises(DslSyntaxError) as err:
        parse(text, SIG)
    assert (err.value.line, err.value.column) == (line, column)


def test_unknown_names():
    with pytest.raises(UnknownGenerator):
        parse("nope * k", SIG)
    with pytest.raises(UnknownObject):
        parse("id[Q]", SIG)


def test_type_mismatch_reports_path():
    with pytest.raises(TypeMismatch) as err:
        parse("f * f", SIG)
    assert err.value.path == ()
    with pytest.raises(TypeMismatch) as err:
        parse("id[U] @ (f + g)", SIG)
    assert err.value.path == ("right", "b")
