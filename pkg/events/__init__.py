"""
Event system for verification progress reporting.
"""

from .core import Event, EventManager
from .verification import FamilyVerified, RowVerified, VerificationFinished

__all__ = ['Event', 'EventManager', 'FamilyVerified', 'RowVerified', 'VerificationFinished']
