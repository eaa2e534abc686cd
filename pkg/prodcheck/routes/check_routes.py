from fastapi import APIRouter, Depends
from fastapi.concurrency import run_in_threadpool

from ..dependencies import get_catalog, http_error, load_source
from ..diagram import parse, typecheck
from ..engine import evaluate
from ..equivalence.functors import phi, psi
from ..exceptions import ProdcheckError, TypeMismatch
from ..logs.logger import setup_logger
from ..models.api_model import (
    AxiomsRequest, AxiomsResponse, CheckRequest, CheckResponse, DerivedModel, EvalRequest,
    EvalResponse, ModelSource, TensorEntry,
)
from ..models.catalog_model import Catalog, DimensionReport, Witness
from ..models.helper import format_rational
from ..store.model_store import emit_model
from ..tensor import first_difference
from ..verify.dimension import dimension_report
from ..verify.runner import run_suite, totals

check_router = APIRouter(
    tags=["check"],
    responses={404: {"description": "Not found"}, 422: {"description": "Malformed term or model"}},
)

logger = setup_logger("prodcheck: Check Route")


@check_router.post("/eval", response_model=EvalResponse)
async def eval_term(request: EvalRequest):
    try:
        model = load_source(request)
        term = parse(request.term, model.signature())
        value = await run_in_threadpool(evaluate, term, model)
    except ProdcheckError as e:
        logger.error(f"Error evaluating {request.term!r}: {e}")
        raise http_error(e) from None
    if value.is_scalar:
        return EvalResponse(dom=[], cod=[], scalar=value.scalar())
    entries = [TensorEntry(index=list(index), value=v) for index, v in value.nonzero()]
    return EvalResponse(dom=list(value.dom), cod=list(value.cod), entries=entries)


def _compare(request: CheckRequest) -> CheckResponse:
    model = load_source(request)
    sig = model.signature()
    lhs, rhs = parse(request.lhs, sig), parse(request.rhs, sig)
    if typecheck(lhs, sig) != typecheck(rhs, sig):
        raise TypeMismatch(("rhs",), typecheck(lhs, sig), typecheck(rhs, sig))
    left, right = evaluate(lhs, model), evaluate(rhs, model)
    where = first_difference(left, right)
    if where is None:
        return CheckResponse(equal=True)
    witness = Witness(index=where, lhs=format_rational(left[where]), rhs=format_rational(right[where]))
    return CheckResponse(equal=False, witness=witness)


@check_router.post("/check", response_model=CheckResponse)
async def check_terms(request: CheckRequest):
    try:
        return await run_in_threadpool(_compare, request)
    except ProdcheckError as e:
        logger.error(f"Error comparing terms: {e}")
        raise http_error(e) from None


@check_router.post("/axioms", response_model=AxiomsResponse)
async def run_axioms(request: AxiomsRequest, catalog: Catalog = Depends(get_catalog)):
    try:
        model = load_source(request)
        verdicts = await run_in_threadpool(run_suite, model, request.suite, catalog, request.profile)
    except ProdcheckError as e:
        logger.error(f"Error running {request.suite.value} suite: {e}")
        raise http_error(e) from None
    passed, total = totals(verdicts)
    return AxiomsResponse(model=model.name, verdicts=verdicts, passed=passed, total=total)


@check_router.post("/report", response_model=DimensionReport)
async def report(request: ModelSource, catalog: Catalog = Depends(get_catalog)):
    try:
        return await run_in_threadpool(dimension_report, load_source(request), catalog)
    except ProdcheckError as e:
        logger.error(f"Error building dimension report: {e}")
        raise http_error(e) from None


@check_router.post("/phi", response_model=DerivedModel)
async def derive_phi(request: ModelSource):
    try:
        derived = await run_in_threadpool(phi, load_source(request))
    except ProdcheckError as e:
        logger.error(f"Error deriving vector part: {e}")
        raise http_error(e) from None
    return DerivedModel(name=derived.name, model_text=emit_model(derived))


@check_router.post("/psi", response_model=DerivedModel)
async def derive_psi(request: ModelSource, catalog: Catalog = Depends(get_catalog)):
    try:
        derived = await run_in_threadpool(psi, load_source(request), catalog, check=True)
    except ProdcheckError as e:
        logger.error(f"Error building composition algebra: {e}")
        raise http_error(e) from None
    return DerivedModel(name=derived.name, model_text=emit_model(derived))
