"""
Error Types
Exceptions shared by every module; the CLI maps them to exit codes
"""
from typing import Optional


class MinorGraphError(Exception):
    """Root of all toolkit errors"""
    pass


class InputError(MinorGraphError):
    """Raised when an operation's precondition is violated"""
    pass


class ParseError(InputError):
    """Raised when a text or JSON input is malformed"""
    def __init__(self, message: str, line: Optional[int] = None, text: str = ""):
        location = f"line {line}: " if line is not None else ""
        super().__init__(f"{location}{message}")
        self.line = line
        self.text = text


class ResourceGuardError(MinorGraphError):
    """Raised before a computation whose estimated size exceeds a cap"""
    def __init__(self, what: str, estimated: int, cap: int):
        super().__init__(
            f"{what}: estimated size {estimated} exceeds cap {cap}"
        )
        self.what = what
        self.estimated = estimated
        self.cap = cap


class CertificateError(MinorGraphError):
    """Raised when a certificate fails independent replay"""
    def __init__(self, message: str, kind: str = ""):
        super().__init__(message)
        self.kind = kind


def guard(what: str, estimated: int, cap: int) -> None:
    """Raise ResourceGuardError when estimated exceeds cap"""
    if estimated > cap:
        raise ResourceGuardError(what, estimated, cap)
