"""
check-class: no-proper-crossing check and manipulability witness for a contract class
"""
from src.cli.base_command import EXIT_OK, BaseCommand, CommandOutcome
from src.engine.manipulability import NpcVerdict, Witness, analyze_builtin_classes, npc_check, witness_from_crossing
from src.engine.model import to_fraction
from src.parser import ClassSpecParser, emit_instance
from src.schemas import CheckClassReport, ClassRowReport, TauDocument, action_number, rational_list, rational_text
from src.utils.core.config_helpers import parse_manipulability_settings


def witness_document(witness: Witness) -> dict:
    inst = witness.instance
    return {
        "instance": emit_instance(inst),
        "tau": TauDocument.emit(inst, witness.tau),
        "target": action_number(inst, witness.target),
        "target_cost": rational_text(witness.target_cost),
        "q": rational_list(witness.q),
        "rewards": rational_list(witness.rewards),
        "crossing": rational_list(witness.crossing) if witness.crossing else None,
    }


class CheckClassCommand(BaseCommand):

    @property
    def name(self) -> str:
        return "check-class"

    @property
    def display_name(self) -> str:
        return "Contract Class Check"

    def _grid(self, spec) -> list:
        grid = list(spec.grid) or [
            to_fraction(x) for x in parse_manipulability_settings(self.context.config).default_grid
        ]
        return sorted(set(grid) | set(spec.rewards or []))

    def execute(self) -> CommandOutcome:
        spec = ClassSpecParser().load(self.args.spec)
        grid = self._grid(spec)

        if spec.kind == "builtin":
            rows = [
                ClassRowReport(
                    name=row.name,
                    verdict=row.verdict.value,
                    manipulable=row.manipulable,
                    ratio=rational_text(row.ratio),
                    note=row.note,
                    witness=witness_document(row.witness) if row.witness else None,
                )
                for row in analyze_builtin_classes(grid)
            ]
            report = CheckClassReport(kind="builtin", classes=rows)
            table = [r.model_dump(exclude={"witness"}) for r in rows]
            return CommandOutcome(EXIT_OK, report.model_dump(), table)

        curves = spec.to_curves()
        result = npc_check(curves, grid)
        report = CheckClassReport(kind=spec.kind, verdict=result.verdict.value)
        if result.verdict == NpcVerdict.VIOLATED:
            a, b = result.pair
            report.pair = [a + 1, b + 1]
            report.points = rational_list(result.points)
            witness = witness_from_crossing(curves[a], curves[b], spec.rewards or grid, spec.rewards)
            if witness is not None:
                report.witness = witness_document(witness)
        self.logger.info("%s class: %s", spec.kind, result.verdict.value)
        return CommandOutcome(EXIT_OK, report.model_dump())
