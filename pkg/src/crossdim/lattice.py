"""Divisibility lattices on positive integers (MD-1) and shape pairs (MD-2)."""
from __future__ import annotations

import math
from typing import NamedTuple

from .errors import LatticeOverflow

LCM_LIMIT = 2**62


class Shape(NamedTuple):
    rows: int
    cols: int


def _check_positive(*values: int) -> None:
    for v in values:
        if int(v) != v or v < 1:
            raise ValueError(f"expected a positive integer, got {v!r}")


def lcm(a: int, b: int) -> int:
    _check_positive(a, b)
    out = math.lcm(int(a), int(b))
    if out > LCM_LIMIT:
        raise LatticeOverflow(f"lcm({a}, {b}) = {out} exceeds 2**62")
    return out


def lcm_gcd(a: int, b: int) -> tuple[int, int]:
    """Return ``(lcm(a, b), gcd(a, b))``."""
    return lcm(a, b), math.gcd(int(a), int(b))


def md1_precedes(a: int, b: int, strict: bool = True) -> bool:
    """Divisibility order: ``a | b`` (and ``a != b`` when ``strict``)."""
    _check_positive(a, b)
    if b % a:
        return False
    return a != b if strict else True


def md2_join_meet(s: tuple[int, int], t: tuple[int, int]) -> tuple[Shape, Shape]:
    """Componentwise lcm / gcd of two shapes."""
    (l1, g1), (l2, g2) = lcm_gcd(s[0], t[0]), lcm_gcd(s[1], t[1])
    return Shape(l1, l2), Shape(g1, g2)


def divisors_ascending(n: int) -> list[int]:
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
