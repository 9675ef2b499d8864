"""
probe: seeded random two-effort instances against the factor-two bound
"""
from dataclasses import replace

from src.cli.base_command import EXIT_OK, BaseCommand, CommandOutcome
from src.engine.gap import probe_rows, two_effort_upper_bound_probe
from src.schemas import ProbeSummary, rational_decimal, rational_text
from src.utils.core.config_helpers import parse_probe_settings
from src.utils.io.exporters import export_records_jsonl


class ProbeCommand(BaseCommand):

    @property
    def name(self) -> str:
        return "probe"

    @property
    def display_name(self) -> str:
        return "Two-Effort Probe"

    def execute(self) -> CommandOutcome:
        settings = parse_probe_settings(self.context.config)
        if self.args.trials is not None:
            settings = replace(settings, trials=self.args.trials)
        if self.args.seed is not None:
            settings = replace(settings, seed=self.args.seed)

        report = two_effort_upper_bound_probe(
            settings, threads=self.threads, show_progress=self.args.progress
        )
        rows = probe_rows(report)
        if self.args.out:
            count = export_records_jsonl(rows, self.args.out)
            self.logger.info("wrote %d records to %s", count, self.args.out)

        summary = ProbeSummary(
            trials=report.trials,
            seed=report.seed,
            max_rho_hat=rational_text(report.max_rho_hat),
            max_rho_hat_decimal=rational_decimal(report.max_rho_hat, self.digits),
            max_rho=rational_text(report.max_rho),
            max_rho_decimal=rational_decimal(report.max_rho, self.digits),
            records_file=self.args.out,
        )
        return CommandOutcome(EXIT_OK, summary.model_dump(), rows)
