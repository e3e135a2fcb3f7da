"""Command implementations behind the multihntf CLI"""

from multihntf.commands.compare import cmd_compare
from multihntf.commands.export import cmd_export
from multihntf.commands.fit import cmd_fit
from multihntf.commands.synth import cmd_synth

__all__ = [
    "cmd_compare",
    "cmd_export",
    "cmd_fit",
    "cmd_synth",
]
