from __future__ import annotations
from typing import Callable, TypeVar

T = TypeVar("T")


def count_at_most(l: list[T], item: T) -> int:
    """
    Number of entries of the sorted list `l` that are <= item, e.g. pi(x)
    when `l` is the list of primes.

    :complexity: O(log(N)), where N is the length of l.
    """
    return _count_at_most_aux(l, item, 0, len(l))


def _count_at_most_aux(l: list[T], item: T, lo: int, hi: int) -> int:
    """
    lo: every index below lo holds a value <= item.
    hi: every index from hi onwards holds a value > item.
    """
    if lo == hi:
        return lo
    mid = (hi + lo) // 2
    if l[mid] <= item:
        return _count_at_most_aux(l, item, mid + 1, hi)
    return _count_at_most_aux(l, item, lo, mid)


def first_true(predicate: Callable[[int], bool], lo: int, hi: int) -> int:
    """
    Smallest m in [lo, hi] with predicate(m) true, for a predicate that is
    monotone (false ... false true ... true) on the range. Returns hi + 1
    when the predicate is false everywhere.

    :complexity: O(log(hi - lo)) predicate calls.
    """
    if lo > hi:
        return lo
    if not predicate(hi):
        return hi + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if predicate(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo
