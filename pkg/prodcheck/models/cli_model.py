from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, model_validator


class OutputMode(str, Enum):
    human = "human"
    tsv = "tsv"


class Profile(str, Enum):
    strict = "strict"
    builtin = "builtin"


class Suite(str, Enum):
    duality = "duality"
    vpa = "vpa"
    assoc = "assoc"
    ca = "ca"
    all = "all"


class CliConfig(BaseModel):
    command: str
    builtin: Optional[str] = None
    model_path: Optional[Path] = None
    term: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    suite: Suite = Suite.all
    catalog_path: Optional[Path] = None
    output: OutputMode = OutputMode.human
    profile: Profile = Profile.strict

    @model_validator(mode="after")
    def one_model_source(self):
        if self.builtin is not None and self.model_path is not None:
            raise ValueError("give either --builtin or --model, not both")
        return self

    @property
    def has_model(self) -> bool:
        return self.builtin is not None or self.model_path is not None
