"""Dimension constraints read off closed diagrams."""
from fractions import Fraction
from typing import Optional

from ..diagram import parse
from ..engine import dimension, evaluate
from ..equivalence.functors import phi
from ..equivalence.splitting import split_unit
from ..exceptions import DimensionCheckFailure, MissingRole
from ..logs.logger import setup_logger
from ..models.algebra_model import Model, Role
from ..models.catalog_model import Catalog, DimensionCheck, DimensionReport, VerdictStatus
from ..models.cli_model import Suite
from .runner import default_catalog, role_view, run_suite

logger = setup_logger("prodcheck: Dimension Report")

VPA_POLYNOMIAL = "d(d-1)(d-3)(d-7)"
CA_POLYNOMIAL = "(d-1)(d-2)(d-4)(d-8)"


def _closed(name: str, view: Model, catalog: Catalog) -> Fraction:
    return evaluate(parse(name, view.signature(), catalog.macros), view).scalar()


def _vpa_report(model: Model, catalog: Catalog) -> DimensionReport:
    view = role_view(model, Suite.vpa)
    d = dimension(view)
    quartic = d * (d - 1) * (d - 3) * (d - 7)
    mickey = _closed("mickey", view, catalog)
    mounts = _closed("mounts", view, catalog)
    associative = all(v.status is VerdictStatus.passed for v in run_suite(model, Suite.assoc, catalog))

    checks = [
        DimensionCheck(quantity=VPA_POLYNOMIAL, computed=quartic, expected=0),
        DimensionCheck(quantity="mickey", computed=mickey, expected=d * (d - 1) ** 2, formula="d(d-1)^2"),
    ]
    if associative:
        checks += [
            DimensionCheck(quantity="mickey", computed=mickey, expected=2 * d * (d - 1), formula="2d(d-1)"),
            DimensionCheck(quantity="d(d-1)(d-3)", computed=d * (d - 1) * (d - 3), expected=0),
        ]
    checks += [
        DimensionCheck(quantity="mounts", computed=mounts, expected=(d - 4) ** 2 * (1 - d) * d,
                       formula="(d-4)^2(1-d)d"),
        DimensionCheck(quantity="mounts", computed=mounts, expected=(d - 4) * (1 - d) * d - d * (1 - d) ** 2,
                       formula="(d-4)(1-d)d-d(1-d)^2"),
    ]
    return DimensionReport(model=model.name, kind="vpa", d=d, polynomial=VPA_POLYNOMIAL,
                           polynomial_value=quartic, associative=associative,
                           mickey=mickey, mounts=mounts, checks=checks)


def _ca_report(model: Model, catalog: Catalog) -> DimensionReport:
    d = dimension(model)
    quartic = (d - 1) * (d - 2) * (d - 4) * (d - 8)
    split = split_unit(model)
    checks = [
        DimensionCheck(quantity=CA_POLYNOMIAL, computed=quartic, expected=0),
        DimensionCheck(quantity="d_V", computed=split.rank, expected=d - 1, formula="d-1"),
    ]
    return DimensionReport(model=model.name, kind="ca", d=d, polynomial=CA_POLYNOMIAL,
                           polynomial_value=quartic, checks=checks,
                           vector_part=_vpa_report(phi(model, split), catalog))


def failed_checks(report: DimensionReport) -> list[DimensionCheck]:
    failed = [c for c in report.checks if not c.ok]
    if report.vector_part is not None:
        failed += failed_checks(report.vector_part)
    return failed


def dimension_report(model: Model, catalog: Optional[Catalog] = None, check: bool = False) -> DimensionReport:
    """Dimension, dimension polynomial and closed-diagram values of a model.

    vpa models (a designated wedge) report the mickey and mounts diagrams; ca
    models (designated m and e) report the splitting and the vpa report of
    their vector part.

    Raises:
        MissingRole: if the model is neither a vpa nor a ca.
        DimensionCheckFailure: when ``check`` is set and a computed value misses its formula.
    """
    catalog = catalog or default_catalog()
    if model.has_roles(Role.wedge):
        report = _vpa_report(model, catalog)
    elif model.has_roles(Role.m, Role.e):
        report = _ca_report(model, catalog)
    else:
        raise MissingRole(Role.wedge.value, model.name)

    if check and (failed := failed_checks(report)):
        first = failed[0]
        logger.error(f"Dimension check {first.quantity} failed for {model.name}: "
                     f"{first.computed} != {first.expected}")
        raise DimensionCheckFailure(first.quantity, first.computed, first.expected)
    logger.info(f"Dimension report for {model.name}: d={report.d}")
    return report
