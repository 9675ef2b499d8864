"""
Tau parser - 模糊合同文档
"""
from src.engine.model import AmbiguousContract, Instance
from src.schemas import TauDocument

from .base import BaseParser


class TauParser(BaseParser[TauDocument, TauDocument]):
    """模糊合同文档解析；付款顺序需对照实例才能映射，故保留文档"""

    document_type = TauDocument

    def convert(self, document: TauDocument) -> TauDocument:
        return document

    def load_for(self, source: str, inst: Instance) -> AmbiguousContract:
        return self.load(source).to_ambiguous(inst)
