"""
Growth Schedule
Strictly increasing g with sum of k^(g(i)|H_i|) below 3^ceil(sqrt k) from k_n on
"""
import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import List, Optional, Sequence

from ..config import settings
from ..errors import InputError, ResourceGuardError

logger = logging.getLogger(__name__)

# ln 3 > 10986 / 10000
LN3_NUM = 10986
LN3_DEN = 10000


def ceil_sqrt(k: int) -> int:
    r = isqrt(k)
    return r if r * r == k else r + 1


def growth_inequality_holds(k: int, exponents: Sequence[int]) -> bool:
    """sum_i k^e_i < 3^ceil(sqrt k), in exact integers"""
    return sum(k ** e for e in exponents) < 3 ** ceil_sqrt(k)


def _tail_bound(s: int, count: int, top: int) -> bool:
    return count * s ** (2 * top) < 3 ** s


def _certified_root(exponents: Sequence[int], k_max: int) -> int:
    """
    Least s such that every k >= s^2 satisfies the inequality, found where
    s * ln 3 > 2E (so sqrt(k) ln 3 - E ln k grows) and N * s^(2E) < 3^s
    """
    top, count = max(exponents), len(exponents)
    s_max = isqrt(k_max)
    lo = (2 * top * LN3_DEN) // LN3_NUM + 1
    if lo > s_max:
        raise ResourceGuardError("growth certificate k", lo * lo, k_max)
    hi = lo
    while not _tail_bound(hi, count, top):
        if hi >= s_max:
            raise ResourceGuardError("growth certificate k", (hi + 1) ** 2, k_max)
        lo = hi + 1
        hi = min(2 * hi, s_max)
    # The bound is monotone in s from lo on
    while lo < hi:
        mid = (lo + hi) // 2
        if _tail_bound(mid, count, top):
            hi = mid
        else:
            lo = mid + 1
    return hi


def _least_k(exponents: Sequence[int], root: int, floor: int) -> int:
    """Walk down the intervals ((t-1)^2, t^2] while the inequality holds at t^2"""
    k = root * root
    t = root
    while t >= 1 and growth_inequality_holds(t * t, exponents):
        k = (t - 1) ** 2 + 1
        if k <= floor + 1:
            return floor + 1
        t -= 1
    return max(k, floor + 1)


@dataclass
class GrowthSchedule:
    g: List[int] = field(default_factory=list)
    k: List[int] = field(default_factory=list)

    def exponents(self, sizes: Sequence[int], n: int) -> List[int]:
        return [self.g[i] * sizes[i] for i in range(n)]


def growth_g(sizes: Sequence[int], k_max: Optional[int] = None) -> GrowthSchedule:
    """g(1) = 1, k_n the least certified k > g(n), g(n+1) = k_n + 1"""
    if not sizes:
        raise InputError("growth schedule needs at least one size")
    if any(s < 1 for s in sizes):
        raise InputError("graph sizes must be positive")
    cap = settings.cap("growth_k_max", k_max)
    schedule = GrowthSchedule(g=[1])
    for n in range(1, len(sizes) + 1):
        exponents = schedule.exponents(sizes, n)
        root = _certified_root(exponents, cap)
        k_n = _least_k(exponents, root, schedule.g[-1])
        if k_n > cap:
            raise ResourceGuardError("growth k", k_n, cap)
        schedule.k.append(k_n)
        schedule.g.append(k_n + 1)
        logger.debug("growth step %d: k=%d", n, k_n)
    return schedule
