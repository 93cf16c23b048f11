"""Exception types shared across the package."""


class QGamesError(Exception):
    """Base class for every error this package raises deliberately."""


class DomainError(QGamesError, ValueError):
    """A numeric argument lies outside its documented domain."""


class DimensionError(QGamesError, ValueError):
    """Mismatched player counts, vector lengths, or operator shapes."""


class ValidationError(QGamesError, ValueError):
    """A value violates a structural requirement (non-unitary, non-finite)."""


class NormalizationError(QGamesError, ValueError):
    """A state vector's norm is too far from 1 for the requested operation."""


class GameFormatError(QGamesError, ValueError):
    """Game-spec text that does not follow the file format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GameCompletenessError(GameFormatError):
    """An outcome line is missing or duplicated in a game-spec file."""


class StrategySyntaxError(QGamesError, ValueError):
    """A strategy token that does not parse."""
