from fractions import Fraction

import pytest

from prodcheck.algebras import resolve_builtin
from prodcheck.diagram import parse
from prodcheck.engine import evaluate
from prodcheck.exceptions import DimensionCheckFailure, MissingRole
from prodcheck.models.algebra_model import Role
from prodcheck.models.cli_model import Suite
from prodcheck.store.model_store import load_model
from prodcheck.tensor import t_scale
from prodcheck.verify.dimension import CA_POLYNOMIAL, VPA_POLYNOMIAL, dimension_report, failed_checks
from prodcheck.verify.report import format_dimension
from prodcheck.verify.runner import role_view


def _closed(model, name, catalog):
    view = role_view(model, Suite.vpa)
    return evaluate(parse(name, view.signature(), catalog.macros), view)


@pytest.mark.parametrize("name, d, mickey, mounts, associative", [
    ("cross0", 0, 0, 0, True),
    ("cross1", 1, 0, 0, True),
    ("cross3", 3, 12, -6, True),
    ("cross7", 7, 252, -378, False),
])
def test_vpa_reports(name, d, mickey, mounts, associative, catalog):
    report = dimension_report(resolve_builtin(name), catalog, check=True)
    assert report.kind == "vpa"
    assert report.polynomial == VPA_POLYNOMIAL
    assert (report.d, report.polynomial_value) == (d, 0)
    assert (report.mickey, report.mounts) == (mickey, mounts)
    assert report.associative is associative
    assert failed_checks(report) == []


def test_associative_reports_carry_the_extra_constraints(cross3, cross7, catalog):
    quantities = [c.quantity for c in dimension_report(cross3, catalog).checks]
    assert "d(d-1)(d-3)" in quantities
    assert quantities.count("mickey") == 2
    assert "d(d-1)(d-3)" not in [c.quantity for c in dimension_report(cross7, catalog).checks]


@pytest.mark.parametrize("name, coefficient", [("cross3", -1), ("cross7", 3)])
def test_double_wedge_loop_is_a_multiple_of_the_wedge(name, coefficient, catalog):
    model = resolve_builtin(name)
    assert _closed(model, "triangle", catalog) == t_scale(coefficient, model.role_tensor(Role.wedge))


@pytest.mark.parametrize("name, value", [("cross3", -6), ("cross7", -42)])
def test_closed_wedge_loop(name, value, catalog):
    closed = _closed(resolve_builtin(name), "cup * (bent_wedge @ id[V]) * cap", catalog)
    assert closed.scalar() == value


@pytest.mark.parametrize("name, d, vector_d, associative", [
    ("real", 1, 0, True),
    ("complex", 2, 1, True),
    ("quaternion", 4, 3, True),
    ("octonion", 8, 7, False),
    ("quaternion:+-", 4, 3, True),
])
def test_ca_reports(name, d, vector_d, associative, catalog):
    report = dimension_report(resolve_builtin(name), catalog, check=True)
    assert report.kind == "ca"
    assert report.polynomial == CA_POLYNOMIAL
    assert (report.d, report.polynomial_value) == (d, 0)
    inner = report.vector_part
    assert inner.model == f"phi({name})"
    assert inner.d == vector_d
    assert inner.associative is associative


def test_zero_wedge_misses_the_polynomial(catalog):
    model = resolve_builtin("zerowedge2")
    report = dimension_report(model, catalog)
    assert report.polynomial_value == 10
    assert report.associative is False
    assert failed_checks(report)
    with pytest.raises(DimensionCheckFailure) as err:
        dimension_report(model, catalog, check=True)
    assert err.value.quantity == VPA_POLYNOMIAL
    assert err.value.computed == Fraction(10)


def test_report_needs_a_vpa_or_ca(catalog):
    pairing = load_model("model p\nobject X dim 1\ngen cup : X X ->\ngen cap : -> X X\n"
                         "role cup cup\nrole cap cap\nentries cup\n0 0 = 1\nend\nentries cap\n0 0 = 1\nend\n")
    with pytest.raises(MissingRole):
        dimension_report(pairing, catalog)


def test_report_lines(quaternion, cross7, catalog):
    lines = format_dimension(dimension_report(quaternion, catalog))
    assert lines[0] == "d=4  (d-1)(d-2)(d-4)(d-8)=0 OK"
    assert "d_V=3  d-1=3 OK" in lines
    assert "vector part phi(quaternion):" in lines
    assert "  d=3  d(d-1)(d-3)(d-7)=0 OK" in lines

    lines = format_dimension(dimension_report(cross7, catalog))
    assert "mounts=-378  (d-4)^2(1-d)d=-378 OK" in lines
    assert "mickey=252  d(d-1)^2=252 OK" in lines
    assert "associative=no" in lines


def test_report_serialises_rationals(cross3, catalog):
    dumped = dimension_report(cross3, catalog).model_dump(mode="json")
    assert dumped["d"] == "3"
    assert dumped["mounts"] == "-6"
