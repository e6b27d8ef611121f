"""
Handlers package
"""
from .commands import CommandResult, cmd_derive, cmd_forced, cmd_hasse
from .realize_handler import cmd_realize
from .verify_handler import cmd_verify

__all__ = ['CommandResult', 'cmd_derive', 'cmd_forced', 'cmd_hasse', 'cmd_realize', 'cmd_verify']
