from fractions import Fraction

from pydantic import Field

from src.engine.model import Certificate, Instance, SolveResult, maxmin_best_response
from .base import Document, rational_decimal, rational_text
from .documents import TauDocument


class CertificateItemReport(Document):
    name: str
    status: str
    detail: str = ""


def certificate_items(certificate: Certificate | None) -> list[CertificateItemReport]:
    if certificate is None:
        return []
    return [CertificateItemReport(name=it.name, status=it.status.value, detail=it.detail) for it in certificate.items]


def action_number(inst: Instance, i: int | None) -> int | None:
    """内部动作下标 -> 调用方的 1 起始编号"""
    return None if i is None else inst.action_origin[i] + 1


class SolveReport(Document):
    """solve / validate 的结果文档"""

    status: str
    mode: str
    monotone: bool = False
    action: int | None = None
    action_label: str | None = None
    payment: str | None = None
    payment_decimal: str | None = None
    principal_utility: str | None = None
    principal_utility_decimal: str | None = None
    agent_utility: str | None = None
    agent_utility_decimal: str | None = None
    contracts: list[list[str]] = Field(default_factory=list)
    certified: bool | None = None
    tie_break_ok: bool | None = None
    agent_choice: int | None = None
    certificate: list[CertificateItemReport] = Field(default_factory=list)
    water_level: str | None = None
    binding_action: int | None = None

    @classmethod
    def from_result(
        cls, inst: Instance, result: SolveResult, mode: str, monotone: bool = False, digits: int = 12
    ) -> "SolveReport":
        if not result.ok:
            return cls(
                status=result.status.value, mode=mode, monotone=monotone,
                action=action_number(inst, result.action),
                action_label=inst.label(result.action) if result.action is not None else None,
            )
        level = result.water_level
        return cls(
            status=result.status.value,
            mode=mode,
            monotone=monotone,
            action=action_number(inst, result.action),
            action_label=inst.label(result.action),
            payment=rational_text(result.expected_payment),
            payment_decimal=rational_decimal(result.expected_payment, digits),
            principal_utility=rational_text(result.principal_utility),
            principal_utility_decimal=rational_decimal(result.principal_utility, digits),
            agent_utility=rational_text(result.agent_utility),
            agent_utility_decimal=rational_decimal(result.agent_utility, digits),
            contracts=TauDocument.emit(inst, result.contracts),
            certified=result.certificate.passed if result.certificate is not None else None,
            tie_break_ok=result.certificate.tie_break_ok if result.certificate is not None else None,
            agent_choice=action_number(inst, maxmin_best_response(inst, result.contracts)),
            certificate=certificate_items(result.certificate),
            water_level=rational_text(level.theta) if level is not None else None,
            binding_action=action_number(inst, level.binding_action) if level is not None else None,
        )


class GapDocument(Document):
    status: str
    rho: str | None = None
    rho_decimal: str | None = None
    rho_hat: str | None = None
    rho_hat_decimal: str | None = None
    best_single: str | None = None
    best_ambiguous: str | None = None
    single_action: int | None = None
    ambiguous_action: int | None = None
    first_best_action: int | None = None
    first_best: str | None = None


class ClassRowReport(Document):
    name: str
    verdict: str
    manipulable: bool
    ratio: str | None = None
    note: str = ""
    witness: dict | None = None


class CheckClassReport(Document):
    kind: str
    verdict: str | None = None
    pair: list[int] | None = None
    points: list[str] | None = None
    witness: dict | None = None
    classes: list[ClassRowReport] = Field(default_factory=list)


class GenDocument(Document):
    generator: str
    instance: dict
    params: dict = Field(default_factory=dict)
    reference: dict = Field(default_factory=dict)


class ProbeSummary(Document):
    trials: int
    seed: int
    max_rho_hat: str
    max_rho_hat_decimal: str
    max_rho: str
    max_rho_decimal: str
    bound: str = "2"
    records_file: str | None = None


def ratio_fields(name: str, value: Fraction | None, digits: int = 12) -> dict:
    return {name: rational_text(value), f"{name}_decimal": rational_decimal(value, digits)}
