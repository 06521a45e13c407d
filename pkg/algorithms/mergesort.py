from __future__ import annotations
from typing import Sequence, TypeVar

T = TypeVar("T")


def merge(l1: list[T], l2: list[T], key=lambda x: x) -> list[T]:
    """
    Merges two sorted lists into one sorted list. Ties keep elements of
    l1 ahead of l2, so merging worker results is deterministic.

    :pre: Both l1 and l2 are sorted by `key`.
    :complexity: O(n * comp(T)), n = len(l1)+len(l2)
    """
    new_list = []
    cur_left = 0
    cur_right = 0
    while cur_left < len(l1) and cur_right < len(l2):
        if key(l1[cur_left]) <= key(l2[cur_right]):
            new_list.append(l1[cur_left])
            cur_left += 1
        else:
            new_list.append(l2[cur_right])
            cur_right += 1
    new_list += l1[cur_left:]
    new_list += l2[cur_right:]
    return new_list


def merge_all(lists: Sequence[list[T]], key=lambda x: x) -> list[T]:
    """
    Merge any number of sorted lists by halving, as in mergesort.
    :complexity: O(N log k * comp(T)) for k lists holding N elements
    """
    if not lists:
        return []
    if len(lists) == 1:
        return list(lists[0])
    middle = (len(lists) + 1) // 2
    return merge(merge_all(lists[:middle], key=key), merge_all(lists[middle:], key=key), key=key)
