from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import MissingRole, ShapeMismatch, UnknownObject
from ..tensor import RationalTensor
from .helper import Rational
from .term_model import GenDecl, ObjType, Signature


class Role(str, Enum):
    cup = "cup"
    cap = "cap"
    wedge = "wedge"
    m = "m"
    e = "e"
    p = "p"
    q = "q"
    i = "i"


class Model(BaseModel):
    """Dimensions for object labels and exact tensors for generators."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    objects: dict[str, int]
    gens: dict[str, GenDecl]
    tensors: dict[str, RationalTensor]
    roles: dict[Role, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_shapes(self):
        for label, dim in self.objects.items():
            if dim < 0:
                raise ShapeMismatch(f"object {label} has negative dimension {dim}")
        if set(self.gens) != set(self.tensors):
            missing = sorted(set(self.gens) ^ set(self.tensors))
            raise ShapeMismatch(f"declarations and tensors disagree on {missing}")
        for name, decl in self.gens.items():
            tensor = self.tensors[name]
            dom, cod = self.extents(decl.dom), self.extents(decl.cod)
            if tensor.dom != dom or tensor.cod != cod:
                raise ShapeMismatch(f"{name}: declared {dom} -> {cod}, tensor is {tensor.dom} -> {tensor.cod}")
        for role, gen in self.roles.items():
            if gen not in self.gens:
                raise ShapeMismatch(f"role {role.value} names undeclared generator {gen!r}")
        return self

    def extents(self, labels: ObjType) -> tuple[int, ...]:
        try:
            return tuple(self.objects[label] for label in labels)
        except KeyError as e:
            raise UnknownObject(e.args[0]) from None

    def signature(self) -> Signature:
        return Signature(objects=tuple(self.objects), gens=dict(self.gens))

    def has_roles(self, *roles: Role) -> bool:
        return all(role in self.roles for role in roles)

    def role_gen(self, role: Role) -> str:
        if role not in self.roles:
            raise MissingRole(role.value, self.name)
        return self.roles[role]

    def role_tensor(self, role: Role) -> RationalTensor:
        return self.tensors[self.role_gen(role)]

    def role_decl(self, role: Role) -> GenDecl:
        return self.gens[self.role_gen(role)]

    def self_dual_label(self) -> str:
        """The object carrying the designated cup."""
        decl = self.role_decl(Role.cup)
        if len(decl.dom) != 2 or decl.dom[0] != decl.dom[1] or decl.cod:
            raise ShapeMismatch(f"cup must have type L L -> I, found {decl.dom} -> {decl.cod}")
        return decl.dom[0]


class CDParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    levels: int = Field(ge=0)
    gammas: tuple[Rational, ...]

    @model_validator(mode="after")
    def check_gammas(self):
        if len(self.gammas) != self.levels:
            raise ValueError(f"expected {self.levels} gammas, got {len(self.gammas)}")
        if any(g not in (Fraction(1), Fraction(-1)) for g in self.gammas):
            raise ValueError("each gamma must be +1 or -1")
        return self


class DirectSumData(BaseModel):
    """A ≅ I ⊕ V realised by ``e``, ``p``, ``i``, ``q`` and the idempotent ``idem``."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    e: RationalTensor
    p: RationalTensor
    i: RationalTensor
    q: RationalTensor
    idem: RationalTensor
    pivots: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return self.i.dom[0]
