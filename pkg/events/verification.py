"""
Progress events published by the census harness.
"""

from .core import Event


class RowVerified(Event):
    """A census row has been checked."""
    event_type = 'row_verified'

    def __init__(self, report, index: int, total: int):
        self.report = report
        self.index = index
        self.total = total

    @property
    def ok(self) -> bool:
        return self.report.ok

    def __repr__(self):
        return f"RowVerified(knot={self.report.name}, ok={self.ok}, {self.index + 1}/{self.total})"


class FamilyVerified(Event):
    """A family and its extension indices have been checked."""
    event_type = 'family_verified'

    def __init__(self, report):
        self.report = report

    @property
    def ok(self) -> bool:
        return self.report.ok

    def __repr__(self):
        return f"FamilyVerified(family={self.report.name}, ok={self.ok})"


class VerificationFinished(Event):
    """A whole verification run is over."""
    event_type = 'verification_finished'

    def __init__(self, passed: int, total: int, what: str = 'census'):
        self.passed = passed
        self.total = total
        self.what = what

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def __repr__(self):
        return f"VerificationFinished({self.what}, {self.passed}/{self.total})"
