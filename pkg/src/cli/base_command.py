"""
Base class for CLI commands.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from pydantic import ValidationError

from src.engine.errors import (
    AmbiconError,
    ContractError,
    DocumentError,
    InstanceError,
    InternalInconsistency,
)
from src.utils.core.config_helpers import SolverSettings
from src.utils.core.logger import get_logger

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2

# bad documents, bad instance data or bad contracts supplied by the caller
INPUT_ERRORS = (DocumentError, InstanceError, ContractError, ValidationError, FileNotFoundError)


@dataclass
class CommandOutcome:
    exit_code: int
    document: dict
    table: list[dict] | None = None


@dataclass
class CommandContext:
    config: Any
    settings: SolverSettings
    output_format: str = "json"
    extra: dict = field(default_factory=dict)

    @property
    def wants_table(self) -> bool:
        return self.output_format in ("csv", "pretty")


class BaseCommand(ABC):
    """Base class for all subcommands."""

    def __init__(self, context: CommandContext, args: Any):
        """
        Initialize command.

        Args:
            context: Loaded configuration and output settings
            args: Parsed command line arguments
        """
        self.context = context
        self.args = args
        self.logger = get_logger(self.__class__.__name__)

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name."""

    @property
    @abstractmethod
    def display_name(self) -> str:
        """Banner text for the log."""

    @property
    def threads(self) -> int:
        return self.context.settings.threads

    @property
    def digits(self) -> int:
        return self.context.settings.decimal_digits

    @abstractmethod
    def execute(self) -> CommandOutcome:
        """
        Execute the command.

        Returns:
            Outcome holding the document to emit
        """

    def run(self) -> CommandOutcome:
        """
        Run the command with error handling.

        Returns:
            Outcome; failures become {"status": "failed", ...} documents
        """
        self.logger.info("=" * 70)
        self.logger.info(" %s", self.display_name)
        self.logger.info("=" * 70)

        try:
            outcome = self.execute()
            outcome.document.setdefault("status", "ok")
            return outcome
        except INPUT_ERRORS as e:
            self.logger.error("%s: invalid input: %s", self.name, e)
            return CommandOutcome(EXIT_INPUT, {"status": "failed", "error": str(e), "kind": "input"})
        except InternalInconsistency as e:
            self.logger.error("%s: internal check failed: %s", self.name, e, exc_info=True)
            document = {"status": "failed", "error": str(e), "kind": "internal", "diagnostics": e.diagnostics}
            return CommandOutcome(EXIT_DOMAIN, document)
        except AmbiconError as e:
            self.logger.error("%s failed: %s", self.name, e)
            return CommandOutcome(EXIT_DOMAIN, {"status": "failed", "error": str(e), "kind": "domain"})
