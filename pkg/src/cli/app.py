"""
Command-line front end: builds the parser, loads config, dispatches a subcommand
and renders its document to stdout.
"""
import argparse
import sys
from typing import TextIO

from src.cli.base_command import EXIT_INPUT, CommandContext
from src.cli.commands import COMMANDS, GENERATORS
from src.utils.core.config import Config
from src.utils.core.config_helpers import parse_solver_settings
from src.utils.core.logger import get_logger, reconfigure_logging
from src.utils.io.exporters import FORMATS, render

logger = get_logger(__name__)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=str, default=None, help="Path to configuration file")
    parser.add_argument(
        "--format", dest="output_format", choices=FORMATS, default=None,
        help="Output format (default from output.format)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ambicon",
        description="Exact solvers for single and ambiguous contracts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Optimal single or ambiguous contract")
    solve.add_argument("--mode", choices=("single", "ambiguous"), default="ambiguous")
    solve.add_argument("--monotone", action="store_true", help="Restrict to monotone contracts")
    solve.add_argument("--mlrp-fast", dest="mlrp_fast", action="store_true",
                       help="Use the two-contract construction when the instance has MLRP")
    solve.add_argument("--action", type=int, default=None, help="1-based action to incentivize")
    solve.add_argument("file", help="Instance JSON file or inline JSON")
    _common(solve)

    gap = sub.add_parser("gap", help="Ambiguity gap of an instance")
    gap.add_argument("--first-best", dest="first_best", action="store_true",
                     help="Also report the first-best welfare")
    gap.add_argument("--monotone", action="store_true", help="Restrict both sides to monotone contracts")
    gap.add_argument("file", help="Instance JSON file or inline JSON")
    _common(gap)

    check = sub.add_parser("check-class", help="No-proper-crossing check for a contract class")
    check.add_argument("spec", help="Class spec JSON file or inline JSON")
    _common(check)

    gen = sub.add_parser("gen", help="Emit a generated or named instance")
    gen.add_argument("generator", choices=GENERATORS)
    gen.add_argument("params", nargs="*", help="key=value generator parameters")
    _common(gen)

    validate = sub.add_parser("validate", help="Certificate for a given ambiguous contract")
    validate.add_argument("file", help="Instance JSON file or inline JSON")
    validate.add_argument("--tau", required=True, help="Contracts JSON file or inline JSON")
    validate.add_argument("--action", type=int, required=True, help="1-based target action")
    _common(validate)

    probe = sub.add_parser("probe", help="Random two-effort instances against the factor-two bound")
    probe.add_argument("--trials", type=int, default=None)
    probe.add_argument("--seed", type=int, default=None)
    probe.add_argument("--out", type=str, default=None, help="JSONL file for per-trial records")
    probe.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    _common(probe)

    return parser


def main(argv: list[str] | None = None, stdout: TextIO | None = None) -> int:
    """
    Run one subcommand.

    Returns:
        Exit code: 0 ok, 1 domain error, 2 input error
    """
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)

    config = Config()
    try:
        config.reload(args.config)
    except FileNotFoundError as e:
        logger.error(str(e))
        stdout.write(render({"status": "failed", "error": str(e), "kind": "input"}))
        return EXIT_INPUT
    reconfigure_logging()

    settings = parse_solver_settings(config)
    output_format = args.output_format or settings.output_format
    if output_format not in FORMATS:
        logger.warning("output.format=%r is unknown; using json", output_format)
        output_format = "json"

    context = CommandContext(config=config, settings=settings, output_format=output_format)
    command = COMMANDS[args.command](context, args)
    outcome = command.run()

    if outcome.exit_code != 0:
        stdout.write(render(outcome.document))
    else:
        stdout.write(render(outcome.document, output_format, outcome.table))
    return outcome.exit_code
