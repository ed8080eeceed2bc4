from __future__ import annotations


class ValidationError(ValueError):
    """A parameter is outside the range an operation accepts."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


def require(condition: bool, field: str, message: str) -> None:
    if not condition:
        raise ValidationError(field, message)
