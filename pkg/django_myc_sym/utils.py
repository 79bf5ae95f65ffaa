from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, TypeVar

from django.conf import settings
from django.core.management.base import CommandError


__all__ = ['MycSymError', 'InputError', 'ScopeError', 'ResourceError', 'ConfigurationError', 'UsageError',
           'SearchLimits', 'get_setting', 'iter_bits', 'mask_of', 'bits_of', 'popcount', 'ordered_map', ]

T = TypeVar('T')
R = TypeVar('R')


class MycSymError(Exception):
    """Base class of every django-myc-sym error"""
    pass


class InputError(MycSymError, ValueError):
    """Raised on malformed graphs, permutations, colorings or parameters"""
    pass


class ScopeError(MycSymError):
    """Raised when an input lies outside the hypotheses of a construction or theorem (e.g. isolated vertices)"""
    pass


class ResourceError(MycSymError):
    """
    Raised when a search exceeds its configured cap or budget.
    :param limit: the configured cap
    :param partial: how far the search got before it stopped (elements, nodes or subsets)
    """
    def __init__(self, message: str, limit: int = 0, partial: int = 0):
        super().__init__(message)
        self.limit = limit
        self.partial = partial


class ConfigurationError(MycSymError):
    """Raised on django-myc-sym configuration errors"""
    pass


class UsageError(CommandError):
    """Raised on command-line usage errors; exits with status 2"""
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('returncode', 2)
        super().__init__(*args, **kwargs)


def get_setting(name, default=None):
    """Get setting from settings.py. Return a default value if not defined or if Django is not configured"""
    if not settings.configured:
        return default
    return getattr(settings, name, default)


@dataclass(frozen=True)
class SearchLimits:
    """
    Per-call caps handed to the searches. A field left as None falls back to its MYC_SYM_* setting.
    :param aut_cap: maximum automorphism group order
    :param subset_budget: maximum subsets or colorings visited by one search
    :param threads: worker threads
    :param max_colors: largest color count tried by dist
    """
    aut_cap: Optional[int] = None
    subset_budget: Optional[int] = None
    threads: Optional[int] = None
    max_colors: Optional[int] = None


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> List[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Apply fn to every item and return the results in item order.
    With more than one worker the calls are spread over a thread pool; completion order never leaks into the result.
    """
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
