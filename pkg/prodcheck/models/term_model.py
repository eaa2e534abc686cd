from typing import Union

from pydantic import BaseModel, ConfigDict

from .helper import Rational

ObjType = tuple[str, ...]
"""Ordered object labels; the empty tuple is the tensor unit I."""


class _Node(BaseModel):
    model_config = ConfigDict(frozen=True)


class Id(_Node):
    o: ObjType


class Gen(_Node):
    name: str


class Compose(_Node):
    """``after`` ∘ ``before``: ``before`` is applied first."""
    after: "Term"
    before: "Term"


class Tensor(_Node):
    left: "Term"
    right: "Term"


class Braid(_Node):
    x: ObjType
    y: ObjType


class BraidInv(_Node):
    x: ObjType
    y: ObjType


class ScalarMul(_Node):
    c: Rational
    t: "Term"


class Sum(_Node):
    a: "Term"
    b: "Term"


class Zero(_Node):
    dom: ObjType
    cod: ObjType


Term = Union[Id, Gen, Compose, Tensor, Braid, BraidInv, ScalarMul, Sum, Zero]

for _cls in (Compose, Tensor, ScalarMul, Sum):
    _cls.model_rebuild()


class GenDecl(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    dom: ObjType
    cod: ObjType


class Signature(BaseModel):
    model_config = ConfigDict(frozen=True)

    objects: tuple[str, ...]
    gens: dict[str, GenDecl]

    def with_gens(self, *decls: GenDecl, objects: tuple[str, ...] = ()) -> "Signature":
        gens = dict(self.gens)
        for decl in decls:
            gens[decl.name] = decl
        extra = tuple(o for o in objects if o not in self.objects)
        return Signature(objects=self.objects + extra, gens=gens)
