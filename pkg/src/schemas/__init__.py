"""
数据模型包 - 输入文档与结果文档的 Pydantic 定义
"""

from .base import Document, Rational, rational_decimal, rational_list, rational_text
from .documents import ClassSpecDocument, InstanceDocument, TauDocument
from .reports import (
    CertificateItemReport,
    CheckClassReport,
    ClassRowReport,
    GapDocument,
    GenDocument,
    ProbeSummary,
    SolveReport,
    action_number,
    certificate_items,
    ratio_fields,
)

__all__ = [
    "CertificateItemReport",
    "CheckClassReport",
    "ClassRowReport",
    "ClassSpecDocument",
    "Document",
    "GapDocument",
    "GenDocument",
    "InstanceDocument",
    "ProbeSummary",
    "Rational",
    "SolveReport",
    "TauDocument",
    "action_number",
    "certificate_items",
    "ratio_fields",
    "rational_decimal",
    "rational_list",
    "rational_text",
]
