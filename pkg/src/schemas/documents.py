from fractions import Fraction
from typing import Literal

from pydantic import Field, model_validator

from src.engine.errors import ContractError
from src.engine.manipulability import ContractCurve, CurveFamily
from src.engine.model import AmbiguousContract, Contract, Instance
from .base import Document, Rational, rational_list


class InstanceDocument(Document):
    """委托代理实例：动作成本、结果回报与结果分布（调用方的原始顺序）"""

    costs: list[Rational] = Field(..., min_length=1)
    rewards: list[Rational] = Field(..., min_length=1)
    probs: list[list[Rational]]
    action_labels: list[str] | None = None
    outcome_labels: list[str] | None = None

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.probs) != len(self.costs):
            raise ValueError(f"probs has {len(self.probs)} rows for {len(self.costs)} actions")
        for i, row in enumerate(self.probs):
            if len(row) != len(self.rewards):
                raise ValueError(f"probs row {i + 1} has {len(row)} entries, expected {len(self.rewards)}")
        if self.action_labels is not None and len(self.action_labels) != len(self.costs):
            raise ValueError("action_labels does not match the number of actions")
        if self.outcome_labels is not None and len(self.outcome_labels) != len(self.rewards):
            raise ValueError("outcome_labels does not match the number of outcomes")
        return self

    def to_instance(self) -> Instance:
        return Instance.build(
            self.costs, self.rewards, self.probs,
            action_labels=self.action_labels, outcome_labels=self.outcome_labels,
        )

    @classmethod
    def from_instance(cls, inst: Instance) -> "InstanceDocument":
        costs, rewards, probs, a_labels, o_labels = inst.original_order()
        return cls(
            costs=costs, rewards=rewards, probs=probs,
            action_labels=a_labels, outcome_labels=o_labels,
        )

    def emit(self) -> dict:
        """JSON 形式：所有数值为规范 "p/q" 文本"""
        return {
            "costs": rational_list(self.costs),
            "rewards": rational_list(self.rewards),
            "probs": [rational_list(row) for row in self.probs],
            "action_labels": list(self.action_labels or []),
            "outcome_labels": list(self.outcome_labels or []),
        }


class TauDocument(Document):
    """模糊合同：一组合同，付款按调用方的结果顺序给出"""

    contracts: list[list[Rational]] = Field(..., min_length=1)

    def to_ambiguous(self, inst: Instance) -> AmbiguousContract:
        """映射到实例内部（按回报排序）的结果顺序"""
        contracts = []
        for k, payments in enumerate(self.contracts):
            if len(payments) != inst.m:
                raise ContractError(f"contract {k + 1} has {len(payments)} payments, instance has {inst.m} outcomes")
            contracts.append(Contract.of(payments[origin] for origin in inst.outcome_origin))
        return AmbiguousContract.of(contracts)

    @staticmethod
    def emit(inst: Instance, tau: AmbiguousContract) -> list[list[str]]:
        """内部顺序 -> 调用方顺序的规范文本"""
        rows = []
        for t in tau:
            original: list[Fraction] = [Fraction(0)] * inst.m
            for k, origin in enumerate(inst.outcome_origin):
                original[origin] = t[k]
            rows.append(rational_list(original))
        return rows


CurveKindName = Literal["linear", "power", "polynomial", "table", "builtin"]


class ClassSpecDocument(Document):
    """
    合同类规格：
    - linear / power: 可选 alphas（缺省时按整个参数族解析判断）
    - polynomial: curves 为升幂系数列表
    - table: tables 为 [x, y] 点列表
    - builtin: 内置类别汇总表
    """

    kind: CurveKindName
    grid: list[Rational] = Field(default_factory=list)
    alphas: list[Rational] | None = None
    degree: int | None = Field(default=None, ge=0)
    curves: list[list[Rational]] | None = None
    tables: list[list[tuple[Rational, Rational]]] | None = None
    rewards: list[Rational] | None = None

    @model_validator(mode="after")
    def _check_params(self):
        if self.kind == "power" and self.degree is None:
            raise ValueError("power classes need a degree")
        if self.kind == "polynomial" and not self.curves:
            raise ValueError("polynomial classes need curves")
        if self.kind == "table" and not self.tables:
            raise ValueError("table classes need tables")
        return self

    def to_curves(self) -> CurveFamily | list[ContractCurve]:
        if self.kind == "linear":
            if self.alphas is None:
                return CurveFamily.linear()
            return [ContractCurve.linear(a) for a in self.alphas]
        if self.kind == "power":
            if self.alphas is None:
                return CurveFamily.power(self.degree)
            return [ContractCurve.power(a, self.degree) for a in self.alphas]
        if self.kind == "polynomial":
            return [ContractCurve.polynomial(c) for c in self.curves]
        if self.kind == "table":
            return [ContractCurve.table(points) for points in self.tables]
        raise ValueError("builtin classes have no curves")
