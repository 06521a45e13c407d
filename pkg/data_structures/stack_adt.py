"""
    Stack ADT. The search routines only rely on push, pop, peek and the
    emptiness test, so any frontier implementation can be swapped in.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

T = TypeVar('T')


class Stack(ABC, Generic[T]):
    """ Abstract LIFO frontier. """

    def __init__(self) -> None:
        self.length = 0

    @abstractmethod
    def push(self, item: T) -> None:
        """ Push an item on top. """

    @abstractmethod
    def pop(self) -> T:
        """ Remove and return the top item. """

    @abstractmethod
    def peek(self) -> T:
        """ Return the top item without removing it. """

    def __len__(self) -> int:
        return self.length

    def is_empty(self) -> bool:
        return len(self) == 0

    def push_all(self, items) -> None:
        """ Push items so that the first one given ends up on top. """
        for item in reversed(list(items)):
            self.push(item)
