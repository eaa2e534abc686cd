"""Error hierarchy shared by the CLI and the HTTP layer."""
from typing import Sequence


class ProdcheckError(Exception):
    """Base class for every error this package raises on purpose."""


class DslSyntaxError(ProdcheckError):
    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        got = f", found {found!r}" if found else ""
        super().__init__(f"syntax error at line {line}, column {column}: expected {expected}{got}")


class UnknownGenerator(ProdcheckError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown generator {name!r}")


class UnknownObject(ProdcheckError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"unknown object label {label!r}")


class TypeMismatch(ProdcheckError):
    def __init__(self, path: Sequence[str], expected, found):
        self.path = tuple(path)
        self.expected = expected
        self.found = found
        where = "/".join(self.path) or "<root>"
        super().__init__(f"type mismatch at {where}: expected {expected}, found {found}")


class ShapeMismatch(ProdcheckError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"shape mismatch: {detail}")


class FormatError(ProdcheckError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"format error at line {line}: {reason}")


class DualityViolation(ProdcheckError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"cup/cap do not satisfy the snake equations: {detail}")


class MissingRole(ProdcheckError):
    def __init__(self, role: str, model: str = ""):
        self.role = role
        self.model = model
        owner = f" in model {model!r}" if model else ""
        super().__init__(f"missing designated generator for role {role!r}{owner}")


class UnsupportedDimension(ProdcheckError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"no cross-product algebra of dimension {n}; choose one of 0, 1, 3, 7")


class UnknownBuiltin(ProdcheckError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown built-in model {name!r}")


class NotIdempotent(ProdcheckError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"unit splitting failed: {detail}")


class SuiteFailure(ProdcheckError):
    def __init__(self, suite: str, failed_ids: Sequence[str]):
        self.suite = suite
        self.failed_ids = list(failed_ids)
        super().__init__(f"{suite} suite failed: {', '.join(self.failed_ids)}")


class IsoCheckFailure(ProdcheckError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"isomorphism check failed: {detail}")


class DimensionCheckFailure(ProdcheckError):
    def __init__(self, quantity: str, computed, expected):
        self.quantity = quantity
        self.computed = computed
        self.expected = expected
        super().__init__(f"{quantity}: computed {computed}, expected {expected}")
