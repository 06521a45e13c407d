""" LIFO frontier on linked nodes, used by the depth-first enumerators. """
from __future__ import annotations

__docformat__ = 'reStructuredText'

from typing import Generic, Optional

from data_structures.stack_adt import Stack, T


class Node(Generic[T]):
    """ A frontier entry.

        Attributes:
            item (T): the pending search state
            link (Node[T]): the entry below
    """

    __slots__ = ("item", "link")

    def __init__(self, item: T, link: Optional[Node[T]] = None) -> None:
        self.item = item
        self.link = link


class LinkedStack(Stack[T]):
    """ Unbounded stack; search states are pushed and popped in O(1).

        Attributes:
            length (int): number of pending states (inherited)
            top (Node[T]): the most recently pushed entry
    """

    def __init__(self) -> None:
        Stack.__init__(self)
        self.top: Optional[Node[T]] = None

    def is_empty(self) -> bool:
        """ :complexity: O(1) """
        return self.top is None

    def push(self, item: T) -> None:
        """ :complexity: O(1) """
        self.top = Node(item, self.top)
        self.length += 1

    def pop(self) -> T:
        """ Remove the top state.
            :complexity: O(1)
            :raises IndexError: if nothing is pending
        """
        if self.top is None:
            raise IndexError('pop from an empty frontier')
        item = self.top.item
        self.top = self.top.link
        self.length -= 1
        return item

    def peek(self) -> T:
        """ :raises IndexError: if nothing is pending """
        if self.top is None:
            raise IndexError('peek at an empty frontier')
        return self.top.item
