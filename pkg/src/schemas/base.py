from fractions import Fraction
from typing import Annotated

from pydantic import BaseModel, BeforeValidator, ConfigDict

from src.engine.errors import InstanceError
from src.engine.model.rational import decimal_text, fraction_text, to_fraction


def _coerce_rational(value):
    """整数、小数字符串、"p/q" 字符串或 JSON 浮点数 -> 精确 Fraction"""
    try:
        return to_fraction(value)
    except InstanceError as e:
        raise ValueError(str(e)) from e


Rational = Annotated[Fraction, BeforeValidator(_coerce_rational)]


class Document(BaseModel):
    """所有输入/输出文档的基类：拒绝未知字段，允许 Fraction"""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


def rational_text(value: Fraction | None) -> str | None:
    """规范有理数文本；None 保持为 None"""
    return None if value is None else fraction_text(value)


def rational_decimal(value: Fraction | None, digits: int = 12) -> str | None:
    """十进制近似（有效数字 digits 位）"""
    return None if value is None else decimal_text(value, digits)


def rational_list(values) -> list[str]:
    return [fraction_text(v) for v in values]
