from fractions import Fraction
import re
from typing import Annotated

from pydantic import GetCoreSchemaHandler
from pydantic_core import core_schema

RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def format_rational(value) -> str:
    """Canonical text of an exact rational: reduced ``p/q`` with q > 0, or bare ``p``."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not RATIONAL_RE.match(text):
        raise ValueError(f"not a rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


class _RationalAnnotation:
    @classmethod
    def __get_pydantic_core_schema__(cls, source, handler: GetCoreSchemaHandler) -> core_schema.CoreSchema:
        return core_schema.json_or_python_schema(
            json_schema=core_schema.no_info_plain_validator_function(cls.validate),
            python_schema=core_schema.no_info_plain_validator_function(cls.validate),
            serialization=core_schema.plain_serializer_function_ser_schema(format_rational),
        )

    @classmethod
    def __get_pydantic_json_schema__(cls, schema, handler):
        return {"type": "string", "pattern": RATIONAL_RE.pattern, "examples": ["3", "-1/2"]}

    @classmethod
    def validate(cls, v):
        if isinstance(v, bool):
            raise ValueError("Invalid rational")
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return parse_rational(v)
        raise ValueError("Invalid rational")


Rational = Annotated[Fraction, _RationalAnnotation]
