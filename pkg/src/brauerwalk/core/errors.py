# src/brauerwalk/core/errors.py

from typing import List, Optional


class BrauerWalkError(Exception):
    pass


class InputError(BrauerWalkError):
    pass


class ConfigurationError(BrauerWalkError):

    def __init__(self, message: str, diagnostics: Optional[List] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class BcfParseError(BrauerWalkError):

    def __init__(self, message: str, line: Optional[int] = None, related: Optional[int] = None):
        location = f"line {line}: " if line is not None else ""
        if related is not None:
            location = f"line {line} (see line {related}): "
        super().__init__(f"{location}{message}")
        self.line = line
        self.related = related


class StringError(BrauerWalkError):
    pass


class TheoryViolation(BrauerWalkError):
    """A structural statement about walks or W-strings did not hold."""


class OracleError(BrauerWalkError):
    pass


class ClanWordOrderError(BrauerWalkError):
    pass
