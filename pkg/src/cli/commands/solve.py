"""
solve: optimal single or ambiguous contract
"""
from src.cli.base_command import EXIT_OK, BaseCommand, CommandOutcome
from src.cli.helpers import action_rows, resolve_action
from src.engine.ambiguous import optimal_ambiguous, solve_for_action, validate
from src.engine.lp import min_payment, optimal_single
from src.engine.model import AmbiguousContract, SolveResult, SolveStatus
from src.parser import InstanceParser
from src.schemas import SolveReport


class SolveCommand(BaseCommand):
    """Cheapest way to incentivize the best action (or a given one)."""

    @property
    def name(self) -> str:
        return "solve"

    @property
    def display_name(self) -> str:
        return f"Solve ({self.args.mode}{', monotone' if self.args.monotone else ''})"

    def _single(self, inst, action):
        monotone = self.args.monotone
        if action is None:
            return optimal_single(inst, monotone=monotone, threads=self.threads)
        best = min_payment(inst, action, monotone)
        if not best.feasible:
            return SolveResult.unavailable(SolveStatus.INFEASIBLE, action)
        tau = AmbiguousContract.single(best.contract)
        return SolveResult.from_contracts(inst, action, tau, validate(inst, tau, action))

    def _ambiguous(self, inst, action):
        if action is None:
            return optimal_ambiguous(
                inst, monotone=self.args.monotone, mlrp_fast=self.args.mlrp_fast, threads=self.threads
            )
        return solve_for_action(inst, action, monotone=self.args.monotone, mlrp_fast=self.args.mlrp_fast)

    def execute(self) -> CommandOutcome:
        inst = InstanceParser().load(self.args.file)
        action = resolve_action(inst, self.args.action) if self.args.action is not None else None
        if self.args.mode == "single":
            if self.args.mlrp_fast:
                self.logger.warning("--mlrp-fast only applies to ambiguous mode; ignored")
            result = self._single(inst, action)
        else:
            result = self._ambiguous(inst, action)

        report = SolveReport.from_result(inst, result, self.args.mode, self.args.monotone, self.digits)
        self.logger.info("status=%s action=%s utility=%s", report.status, report.action, report.principal_utility)
        if report.tie_break_ok is False:
            self.logger.warning("agent tie-break picks action %s over %s", report.agent_choice, report.action)
        table = None
        if self.context.wants_table:
            table = action_rows(inst, self.args.monotone, self.args.mlrp_fast, self.threads)
        return CommandOutcome(EXIT_OK, report.model_dump(), table)
