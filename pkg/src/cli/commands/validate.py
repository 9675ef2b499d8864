"""
validate: certificate for a given ambiguous contract and target action
"""
from src.cli.base_command import EXIT_OK, BaseCommand, CommandOutcome
from src.cli.helpers import resolve_action
from src.engine.ambiguous import validate
from src.engine.model import SolveResult
from src.parser import InstanceParser, TauParser
from src.schemas import SolveReport


class ValidateCommand(BaseCommand):

    @property
    def name(self) -> str:
        return "validate"

    @property
    def display_name(self) -> str:
        return "Validate Ambiguous Contract"

    def execute(self) -> CommandOutcome:
        inst = InstanceParser().load(self.args.file)
        tau = TauParser().load_for(self.args.tau, inst)
        action = resolve_action(inst, self.args.action)
        certificate = validate(inst, tau, action)
        result = SolveResult.from_contracts(inst, action, tau, certificate)
        report = SolveReport.from_result(inst, result, "validate", digits=self.digits)
        document = report.model_dump()
        document["status"] = "pass" if certificate.passed else "fail"
        self.logger.info("certificate %s (%d items)", document["status"], len(certificate.items))
        table = [item.model_dump() for item in report.certificate] if self.context.wants_table else None
        return CommandOutcome(EXIT_OK, document, table)
