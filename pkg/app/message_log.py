"""
Message log for command output, coloured with blessed when writing to a
terminal.
"""

import sys
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, TextIO, Tuple

from blessed import Terminal

from .config import FillConfig


LEVEL_COLORS = {
    'info': None,
    'warning': 'yellow',
    'error': 'red',
    'system': 'cyan',
    'success': 'green',
}


@dataclass(frozen=True)
class Message:
    """A single message and its level."""
    text: str
    level: str = 'info'
    wrap: bool = True


class MessageLog:
    """
    Collects messages and writes them out. Wrapping and colour come from the
    blessed terminal; with stdout piped blessed emits no escape codes, so the
    text is the same on every run.
    """

    def __init__(self, width: Optional[int] = None, max_messages: Optional[int] = None,
                 term: Optional[Terminal] = None):
        self.width = width or FillConfig.MESSAGE_LOG_WIDTH
        self.messages: deque = deque(maxlen=max_messages or FillConfig.MESSAGE_LOG_SIZE)
        self.term = term if term is not None else Terminal()
        self.error_count = 0
        self.warning_count = 0

    def add_message(self, text: str, level: str = 'info', wrap: bool = True) -> None:
        """Add a new message to the log."""
        if level not in LEVEL_COLORS:
            raise ValueError(f"unknown message level '{level}'")
        if level == 'error':
            self.error_count += 1
        elif level == 'warning':
            self.warning_count += 1
        self.messages.append(Message(text, level, wrap))

    def add_info(self, text: str) -> None:
        self.add_message(text, 'info')

    def add_warning(self, text: str) -> None:
        self.add_message(text, 'warning')

    def add_error(self, text: str) -> None:
        self.add_message(text, 'error')

    def add_system(self, text: str) -> None:
        self.add_message(text, 'system')

    def add_success(self, text: str) -> None:
        self.add_message(text, 'success')

    def add_block(self, text: str, level: str = 'info') -> None:
        """Add preformatted text (tables, gluing tables) line by line, unwrapped."""
        for line in text.splitlines():
            self.add_message(line, level, wrap=False)

    def lines(self) -> List[Tuple[str, str]]:
        """(line, level) pairs after wrapping to the log width."""
        result = []
        for message in self.messages:
            if not message.wrap or len(message.text) <= self.width:
                result.append((message.text, message.level))
                continue
            for line in self.term.wrap(message.text, self.width) or ['']:
                result.append((line, message.level))
        return result

    def render(self) -> List[str]:
        rendered = []
        for line, level in self.lines():
            color = LEVEL_COLORS[level]
            if color and FillConfig.USE_COLOR:
                line = getattr(self.term, color)(line)
            rendered.append(line)
        return rendered

    def flush(self, stream: Optional[TextIO] = None) -> None:
        """Write every message out and empty the log."""
        stream = stream or sys.stdout
        for line in self.render():
            stream.write(line + '\n')
        stream.flush()
        self.clear()

    def clear(self) -> None:
        self.messages.clear()
