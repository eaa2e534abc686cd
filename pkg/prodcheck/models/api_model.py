from typing import Optional

from pydantic import BaseModel, model_validator

from .catalog_model import Verdict, Witness
from .cli_model import Profile, Suite
from .helper import Rational


class ModelSource(BaseModel):
    """Exactly one of a built-in name or the text of a model file."""
    builtin: Optional[str] = None
    model_text: Optional[str] = None

    @model_validator(mode="after")
    def one_source(self):
        if (self.builtin is None) == (self.model_text is None):
            raise ValueError("give exactly one of builtin or model_text")
        return self


class EvalRequest(ModelSource):
    term: str


class TensorEntry(BaseModel):
    index: list[int]
    value: Rational


class EvalResponse(BaseModel):
    dom: list[int]
    cod: list[int]
    scalar: Optional[Rational] = None
    entries: list[TensorEntry] = []


class CheckRequest(ModelSource):
    lhs: str
    rhs: str


class CheckResponse(BaseModel):
    equal: bool
    witness: Optional[Witness] = None


class AxiomsRequest(ModelSource):
    suite: Suite = Suite.all
    profile: Profile = Profile.strict


class AxiomsResponse(BaseModel):
    model: str
    verdicts: list[Verdict]
    passed: int
    total: int


class DerivedModel(BaseModel):
    name: str
    model_text: str
