from fastapi import APIRouter
from fastapi.responses import PlainTextResponse

from ..algebras import list_builtins, resolve_builtin
from ..dependencies import http_error
from ..exceptions import ProdcheckError
from ..logs.logger import setup_logger
from ..store.model_store import emit_model

builtin_router = APIRouter(
    prefix="/builtins",
    tags=["builtins"],
    responses={404: {"description": "Not found"}},
)

logger = setup_logger("prodcheck: Builtin Route")


@builtin_router.get("")
async def get_builtins():
    logger.info("Listing built-in models")
    return {"builtins": list_builtins()}


@builtin_router.get("/{name}", response_class=PlainTextResponse)
async def get_builtin(name: str):
    try:
        logger.info(f"Emitting built-in model {name}")
        return emit_model(resolve_builtin(name))
    except ProdcheckError as e:
        logger.error(f"Error emitting built-in {name}: {e}")
        raise http_error(e) from None
