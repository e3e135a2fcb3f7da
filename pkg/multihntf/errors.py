"""Exception types raised by multihntf"""

from typing import Optional


class MultiHntfError(Exception):
    """Base class for all library errors"""


class ArgumentError(MultiHntfError, ValueError):
    """Invalid argument to an operation (shape, rank, mode, ...)"""


class UnsupportedFeatureError(MultiHntfError):
    """Requested combination is not implemented (e.g. supervision on tensors)"""


class LoadError(MultiHntfError):
    """Input file could not be parsed"""

    def __init__(self, path: str, line: int, message: str):
        self.path = str(path)
        self.line = line
        self.message = message
        super().__init__(f"{self.path}:{line}: {message}")


class ConfigError(MultiHntfError):
    """Run configuration is invalid"""

    def __init__(self, message: str, problems: Optional[list] = None):
        self.problems = problems or []
        if self.problems:
            message = message + "\n" + "\n".join(f"  {p}" for p in self.problems)
        super().__init__(message)

    @classmethod
    def from_validation_error(cls, source: str, exc) -> "ConfigError":
        """Build from a pydantic ValidationError, keeping dotted field paths"""
        problems = []
        for err in exc.errors():
            loc = ".".join(str(part) for part in err.get("loc", ())) or "<root>"
            problems.append(f"{loc}: {err.get('msg', 'invalid value')}")
        return cls(f"Invalid configuration in {source}", problems)
