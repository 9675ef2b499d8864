"""
Instance parser - JSON 实例文档 -> Instance
"""
from typing import Any

from src.engine.model import Instance
from src.schemas import InstanceDocument

from .base import BaseParser


class InstanceParser(BaseParser[InstanceDocument, Instance]):
    """实例文档解析：精确转换、行和/非负校验、按成本与回报排序"""

    document_type = InstanceDocument

    def convert(self, document: InstanceDocument) -> Instance:
        inst = document.to_instance()
        self.logger.debug("instance with %d actions and %d outcomes", inst.n, inst.m)
        return inst


def parse_instance(data: Any) -> Instance:
    """dict / InstanceDocument -> Instance"""
    return InstanceParser().parse_data(data)


def emit_instance(inst: Instance) -> dict:
    """Instance -> 调用方顺序的 JSON 文档（parse_instance 的逆）"""
    return InstanceDocument.from_instance(inst).emit()
