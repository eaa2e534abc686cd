import pytest

from prodcheck.algebras import list_builtins, resolve_builtin
from prodcheck.exceptions import DualityViolation, FormatError, ShapeMismatch
from prodcheck.store.model_store import emit_model, load_model, read_model_file

TINY = """\
model tiny   # a one-dimensional self-dual object
object X dim 1
gen cup : X X ->
gen cap : -> X X
role cup cup
role cap cap
entries cup
0 0 = 1
end
entries cap
0 0 = 1
end
"""


@pytest.mark.parametrize("name", list_builtins())
def test_emit_then_load_reproduces_builtins(name):
    model = resolve_builtin(name)
    assert load_model(emit_model(model)) == model


def test_emit_is_deterministic():
    model = resolve_builtin("cross3")
    assert emit_model(model) == emit_model(resolve_builtin("cross3"))


def test_load_small_model():
    model = load_model(TINY)
    assert model.name == "tiny"
    assert model.objects == {"X": 1}
    assert model.tensors["cup"][0, 0] == 1


def test_scalar_generators_round_trip():
    text = "model s\ngen k : ->\nentries k\n= -3/4\nend\n"
    model = load_model(text)
    assert model.tensors["k"].scalar() == load_model(emit_model(model)).tensors["k"].scalar()


def test_read_model_file(tmp_path):
    path = tmp_path / "tiny.model"
    path.write_text(TINY)
    assert read_model_file(path).name == "tiny"
    with pytest.raises(FormatError):
        read_model_file(tmp_path / "missing.model")


@pytest.mark.parametrize("text, line", [
    ("model m\nobject X dim two\n", 2),
    ("model m\nobject X dim 1\nobject X dim 2\n", 3),
    ("model m\nobject X dim 1\ngen f : X -> Y\n", 3),
    ("model m\nobject X dim 1\ngen f : X -> X\nentries f\n0 1 = 1\nend\n", 5),
    ("model m\nobject X dim 1\ngen f : X -> X\nentries f\n0 0 = 1/0\nend\n", 5),
    ("model m\nobject X dim 1\ngen f : X -> X\nentries f\n0 0 = 1\n", 4),
    ("model m\nwidget 3\n", 2),
    ("object X dim 1\n", 1),
])
def test_format_errors_name_the_line(text, line):
    with pytest.raises(FormatError) as err:
        load_model(text)
    assert err.value.line == line


def test_snake_violation_is_detected():
    broken = TINY.replace("entries cap\n0 0 = 1", "entries cap\n0 0 = 2")
    with pytest.raises(DualityViolation):
        load_model(broken)


def test_role_with_wrong_shape():
    text = TINY.replace("role cap cap", "role cap cup")
    with pytest.raises(DualityViolation):
        load_model(text)


def test_tensor_shape_is_checked():
    from prodcheck.models.algebra_model import Model
    from prodcheck.models.term_model import GenDecl
    from prodcheck.tensor import t_identity

    with pytest.raises(ShapeMismatch):
        Model(name="bad", objects={"X": 2}, gens={"f": GenDecl(name="f", dom=("X",), cod=("X",))},
              tensors={"f": t_identity(3)})
