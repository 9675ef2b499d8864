"""
Parser 抽象基类 - 定义输入文档解析器的统一接口
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Generic, TypeVar

from pydantic import ValidationError

from src.engine.errors import DocumentError
from src.schemas import Document
from src.utils.core.logger import get_logger
from src.utils.io.file_ops import parse_json_text, read_json

DocT = TypeVar("DocT", bound=Document)
ResultT = TypeVar("ResultT")


def format_validation_error(error: ValidationError, source: str) -> str:
    """把 pydantic 校验错误压缩成单行可读信息"""
    parts = []
    for item in error.errors():
        loc = ".".join(str(x) for x in item.get("loc", ())) or "<root>"
        parts.append(f"{loc}: {item.get('msg', 'invalid')}")
    return f"{source}: " + "; ".join(parts)


class BaseParser(ABC, Generic[DocT, ResultT]):
    """输入文档解析器抽象基类

    子类声明 document_type 并实现 convert()；读取、JSON 解析与模式校验
    在这里统一完成，失败时抛出 DocumentError 或 pydantic ValidationError。
    """

    document_type: type[DocT]

    def __init__(self):
        self.logger = get_logger(self.__class__.__name__)

    @abstractmethod
    def convert(self, document: DocT) -> ResultT:
        """
        把校验后的文档转换为引擎对象

        Args:
            document: 已通过模式校验的文档

        Returns:
            引擎对象
        """
        raise NotImplementedError("Subclass must implement convert()")

    def validate(self, data: Any, source: str = "<inline>") -> DocT:
        """
        模式校验

        Raises:
            DocumentError: 文档不符合模式
        """
        if isinstance(data, self.document_type):
            return data
        try:
            return self.document_type.model_validate(data)
        except ValidationError as e:
            raise DocumentError(format_validation_error(e, source)) from e

    def parse_data(self, data: Any, source: str = "<inline>") -> ResultT:
        return self.convert(self.validate(data, source))

    def parse_text(self, text: str, source: str = "<inline>") -> ResultT:
        return self.parse_data(parse_json_text(text, source), source)

    def parse_file(self, path: Path | str) -> ResultT:
        self.logger.debug("reading %s", path)
        return self.parse_data(read_json(path), str(path))

    def load(self, source: str) -> ResultT:
        """
        文件路径或内联 JSON

        Args:
            source: 以 "{" 开头时按内联 JSON 处理，否则视为文件路径
        """
        if source.lstrip().startswith("{"):
            return self.parse_text(source)
        return self.parse_file(source)
