"""
Class spec parser - 合同类规格文档
"""
from src.schemas import ClassSpecDocument

from .base import BaseParser


class ClassSpecParser(BaseParser[ClassSpecDocument, ClassSpecDocument]):
    document_type = ClassSpecDocument

    def convert(self, document: ClassSpecDocument) -> ClassSpecDocument:
        return document
