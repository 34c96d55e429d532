"""
Application layer: configuration, output, export and the CLI commands.
"""

from .config import FillConfig
from .message_log import Message, MessageLog

__all__ = ['FillConfig', 'Message', 'MessageLog']
