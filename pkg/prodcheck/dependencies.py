from fastapi import HTTPException

from .exceptions import (
    DslSyntaxError, FormatError, ProdcheckError, ShapeMismatch, TypeMismatch, UnknownBuiltin,
    UnknownGenerator, UnknownObject, UnsupportedDimension,
)
from .models.catalog_model import Catalog
from .models.api_model import ModelSource
from .models.algebra_model import Model
from .algebras import resolve_builtin
from .store.model_store import load_model
from .verify.runner import default_catalog

NOT_FOUND = (UnknownBuiltin, UnsupportedDimension)
UNPROCESSABLE = (DslSyntaxError, UnknownGenerator, UnknownObject, TypeMismatch, FormatError, ShapeMismatch)


def get_catalog() -> Catalog:
    return default_catalog()


def load_source(source: ModelSource) -> Model:
    if source.builtin is not None:
        return resolve_builtin(source.builtin)
    return load_model(source.model_text)


def http_error(e: ProdcheckError) -> HTTPException:
    if isinstance(e, NOT_FOUND):
        return HTTPException(status_code=404, detail=str(e))
    if isinstance(e, UNPROCESSABLE):
        return HTTPException(status_code=422, detail=str(e))
    return HTTPException(status_code=400, detail=str(e))
