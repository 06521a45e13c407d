from __future__ import annotations

from enum import Enum

from errors import UsageError


class BaseEnum(Enum):

    def __eq__(self, other: object) -> bool:
        """
        Modules may be imported from two locations (worker processes,
        the test runner), so members of a same-named enum class compare
        by value. Anything that is not a BaseEnum is unequal.
        """
        if isinstance(other, type(self)):
            return self.value == other.value
        if isinstance(other, BaseEnum) and type(other).__name__ == type(self).__name__:
            return self.value == other.value
        return False

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self.value))

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def from_label(cls, text: str) -> BaseEnum:
        """
        Look up a member by its lower case command line label.

        :raises UsageError: if no member carries that label.
        """
        for member in cls:
            if member.label == text.strip().lower():
                return member
        choices = ", ".join(member.label for member in cls)
        raise UsageError(f"unknown {cls.__name__.lower()} '{text}' (choose from {choices})")

    @classmethod
    def labels(cls) -> list[str]:
        return [member.label for member in cls]
