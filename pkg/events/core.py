"""
Progress notifications for long verification runs.

Verification code emits events; the command layer subscribes reporters.
"""

from typing import Callable, Dict, List, Optional


class Event:
    """Base class for all events. Subclasses set `event_type`."""
    event_type = 'event'


Listener = Callable[[Event], None]


class EventManager:
    """Routes events to the listeners registered for their type."""

    def __init__(self):
        self._listeners: Dict[str, List[Listener]] = {}
        self.errors: List[str] = []

    def subscribe(self, event_type: str, listener: Listener) -> None:
        self._listeners.setdefault(event_type, []).append(listener)

    def emit(self, event: Event, event_type: Optional[str] = None) -> None:
        """
        Deliver `event` to its listeners in subscription order. A listener
        that raises is recorded in `errors` and the rest still run, so a
        broken reporter never aborts a census check.
        """
        kind = event_type or event.event_type
        for listener in tuple(self._listeners.get(kind, ())):
            try:
                listener(event)
            except Exception as e:
                text = f"{kind} listener failed: {e}"
                self.errors.append(text)
                print(text)
