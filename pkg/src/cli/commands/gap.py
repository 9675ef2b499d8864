"""
gap: how much ambiguity (and full surplus extraction) gains over a single contract
"""
from src.cli.base_command import EXIT_OK, BaseCommand, CommandOutcome
from src.cli.helpers import action_rows
from src.engine.gap import ambiguity_gap
from src.parser import InstanceParser
from src.schemas import GapDocument, action_number, rational_decimal, rational_text


class GapCommand(BaseCommand):

    @property
    def name(self) -> str:
        return "gap"

    @property
    def display_name(self) -> str:
        return "Ambiguity Gap"

    def execute(self) -> CommandOutcome:
        inst = InstanceParser().load(self.args.file)
        report = ambiguity_gap(inst, monotone=self.args.monotone, threads=self.threads)
        single, amb = report.best_single, report.best_ambiguous
        document = GapDocument(
            status=report.status.value,
            rho=rational_text(report.rho),
            rho_decimal=rational_decimal(report.rho, self.digits),
            rho_hat=rational_text(report.rho_hat),
            rho_hat_decimal=rational_decimal(report.rho_hat, self.digits),
            best_single=rational_text(single.principal_utility),
            best_ambiguous=rational_text(amb.principal_utility),
            single_action=action_number(inst, single.action),
            ambiguous_action=action_number(inst, amb.action),
        )
        if self.args.first_best:
            document.first_best_action = action_number(inst, report.first_best_action)
            document.first_best = rational_text(report.first_best)
        dumped = document.model_dump()
        if not self.args.first_best:
            dumped.pop("first_best_action")
            dumped.pop("first_best")
        table = action_rows(inst, self.args.monotone, False, self.threads) if self.context.wants_table else None
        return CommandOutcome(EXIT_OK, dumped, table)
