from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from prodcheck.algebras import cd_multiply, expected_failing_suites, list_builtins, resolve_builtin
from prodcheck.engine import apply, basis_vector, dimension
from prodcheck.exceptions import UnknownBuiltin, UnsupportedDimension

coords = st.integers(min_value=-4, max_value=4).map(Fraction)
octonions = st.lists(coords, min_size=8, max_size=8)

OCTONION = (-1, -1, -1)


def norm(x):
    return sum(v * v for v in x)


def test_quaternion_units(quaternion):
    m = quaternion.tensors["m"]
    i, j, k = (basis_vector(4, n) for n in (1, 2, 3))
    assert apply(m, [i, j]) == k
    assert apply(m, [j, k]) == i
    assert apply(m, [k, i]) == j
    assert apply(m, [j, i]) == tuple(-v for v in k)
    assert apply(m, [i, i]) == (-1, 0, 0, 0)


@settings(max_examples=100, deadline=None)
@given(octonions, octonions)
def test_octonion_norm_is_multiplicative(x, y):
    assert norm(cd_multiply(x, y, OCTONION)) == norm(x) * norm(y)


def test_octonions_are_not_associative():
    e = [basis_vector(8, n) for n in range(8)]
    left = cd_multiply(cd_multiply(e[1], e[2], OCTONION), e[4], OCTONION)
    right = cd_multiply(e[1], cd_multiply(e[2], e[4], OCTONION), OCTONION)
    assert left == tuple(-v for v in right)


def test_cross3_is_the_cross_product(cross3):
    w = cross3.tensors["wedge"]
    e1, e2, e3 = (basis_vector(3, n) for n in range(3))
    assert apply(w, [e2, e3]) == e1
    assert apply(w, [e3, e1]) == e2
    assert apply(w, [e2, e1]) == (0, 0, -1)


def test_cross7_is_alternating(cross7):
    w = cross7.tensors["wedge"]
    for a in range(7):
        for b in range(7):
            assert w.data[a, b, :].tolist() == [-v for v in w.data[b, a, :].tolist()]


@pytest.mark.parametrize("name, d", [
    ("cross0", 0), ("cross1", 1), ("cross3", 3), ("cross7", 7),
    ("real", 1), ("complex", 2), ("quaternion", 4), ("octonion", 8),
    ("zerowedge2", 2),
])
def test_dimensions(name, d):
    assert dimension(resolve_builtin(name)) == d


def test_split_variants_use_indefinite_forms():
    split = resolve_builtin("quaternion:+-")
    assert split.name == "quaternion:+-"
    diagonal = [split.tensors["cup"][a, a] for a in range(4)]
    assert sorted(diagonal) == [-1, -1, 1, 1]
    assert resolve_builtin("complex:+").tensors["cup"][1, 1] == -1


def test_builtins_are_cached():
    assert resolve_builtin("octonion") is resolve_builtin("octonion")


@pytest.mark.parametrize("name", ["cross5", "cross2", "cross8"])
def test_unsupported_cross_dimension(name):
    with pytest.raises(UnsupportedDimension):
        resolve_builtin(name)


@pytest.mark.parametrize("name", ["sedenion", "quaternion:+", "complex:x", ""])
def test_unknown_builtin(name):
    with pytest.raises(UnknownBuiltin):
        resolve_builtin(name)


def test_expected_failures():
    assert expected_failing_suites("cross7") == {"assoc"}
    assert expected_failing_suites("zerowedge2") == {"vpa", "assoc"}
    assert expected_failing_suites("zerowedge1") == frozenset()
    assert expected_failing_suites("cross3") == frozenset()


def test_listing_covers_every_family():
    names = list_builtins()
    for name in ("cross0", "cross1", "cross3", "cross7", "real", "complex", "quaternion", "octonion"):
        assert name in names
