"""
Subcommand modules.
"""
from .check_class import CheckClassCommand
from .gap import GapCommand
from .gen import GENERATORS, GenCommand
from .probe import ProbeCommand
from .solve import SolveCommand
from .validate import ValidateCommand

COMMANDS = {
    "solve": SolveCommand,
    "gap": GapCommand,
    "check-class": CheckClassCommand,
    "gen": GenCommand,
    "validate": ValidateCommand,
    "probe": ProbeCommand,
}

__all__ = [
    "COMMANDS",
    "GENERATORS",
    "CheckClassCommand",
    "GapCommand",
    "GenCommand",
    "ProbeCommand",
    "SolveCommand",
    "ValidateCommand",
]
