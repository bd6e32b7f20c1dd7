"""Exception hierarchy shared by every package."""
from typing import List, Optional


class BPDLError(Exception):
    """Base class for all errors raised by the toolkit."""


class ParseError(BPDLError, ValueError):
    def __init__(self, message: str, span, expected: Optional[List[str]] = None):
        self.span = span
        self.expected = sorted(set(expected or []))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at {span.start}-{span.end}{detail}")


class FormatError(BPDLError, ValueError):
    def __init__(self, message: str, key: Optional[str] = None):
        self.key = key
        super().__init__(message if key is None else f"{message} [{key}]")


class GuardExceeded(BPDLError, RuntimeError):
    pass


class ResourceLimit(BPDLError, RuntimeError):
    pass


class MalformedJustification(BPDLError, ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CertificateError(BPDLError, RuntimeError):
    """A satisfiability witness failed re-checking."""
