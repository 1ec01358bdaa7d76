"""Path and cycle quadratic forms over positive integer compositions.

``path_form(x) = x1*x2 + x2*x3 + ... + x_{k-1}*x_k``
``cycle_form(x) = path_form(x) + x_k*x1``

Closed-form extremal bounds with attaining witnesses, and an exhaustive
optimiser that serves as the independent oracle for them.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Literal, Optional

ORACLE_LIMIT = 10**7


class InvalidRange(ValueError):
    pass


class SearchTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 1:
            raise InvalidRange("a composition needs at least one part")
        if any(x < 1 for x in self.parts):
            raise InvalidRange(f"parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class QFormBounds:
    n: int
    k: int
    lower: int
    lower_witness: Composition
    upper: Optional[int] = None
    upper_witness: Optional[Composition] = None

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")


def _parts(c) -> tuple[int, ...]:
    return c.parts if isinstance(c, Composition) else tuple(c)


def path_form(c) -> int:
    x = _parts(c)
    return sum(a * b for a, b in zip(x, x[1:]))


def cycle_form(c) -> int:
    x = _parts(c)
    return path_form(x) + x[-1] * x[0]


def _check(n: int, k: int) -> None:
    if k < 2 or n < k:
        raise InvalidRange(f"need n >= k >= 2, got n={n}, k={k}")


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` into ``k`` positive parts, lexicographically."""
    if k < 1 or n < k:
        raise InvalidRange(f"need n >= k >= 1, got n={n}, k={k}")

    def rec(rest: int, slots: int, prefix: tuple[int, ...]):
        if slots == 1:
            yield prefix + (rest,)
            return
        for x in range(1, rest - slots + 2):
            yield from rec(rest - x, slots - 1, prefix + (x,))

    yield from rec(n, k, ())


def lemma3_bounds(n: int, k: int) -> QFormBounds:
    """Sharp bounds ``n - 1 <= path_form <= upper`` over compositions of n into k parts."""
    _check(n, k)
    lower_w = (n - k + 1,) + (1,) * (k - 1)
    h, c = n // 2, (n + 1) // 2
    if k == 2:
        upper, upper_w = h * c, (h, c)
    elif k == 3:
        # x2 = floor(n/2), x1 + x3 = ceil(n/2); any split attains, fix x3 = 1
        upper, upper_w = h * c, (c - 1, h, 1)
    else:
        m = n - k + 4
        upper = (m // 2) * ((m + 1) // 2) + k - 5
        r = n - k + 2
        upper_w = (1,) * (k - 3) + (r // 2, (r + 1) // 2, 1)
    return QFormBounds(n, k, n - 1, Composition(lower_w), upper, Composition(upper_w))


def lemma4_lower(n: int, k: int) -> QFormBounds:
    """``cycle_form >= 2n - k``; the witness comes from exhaustive search."""
    _check(n, k)
    lo, arg, _, _ = brute_force_extrema(n, k, "cycle")
    return QFormBounds(n, k, 2 * n - k, Composition(arg))


def brute_force_extrema(
    n: int, k: int, form: Literal["path", "cycle"]
) -> tuple[int, tuple[int, ...], int, tuple[int, ...]]:
    """(min, argmin, max, argmax) by full enumeration; ties keep the lexicographically least."""
    _check(n, k)
    if comb(n - 1, k - 1) > ORACLE_LIMIT:
        raise SearchTooLarge(f"C({n - 1},{k - 1}) compositions exceeds {ORACLE_LIMIT}")
    f = {"path": path_form, "cycle": cycle_form}[form]
    lo = hi = None
    arg_lo = arg_hi = ()
    for x in compositions(n, k):
        v = f(x)
        if lo is None or v < lo:
            lo, arg_lo = v, x
        if hi is None or v > hi:
            hi, arg_hi = v, x
    return lo, arg_lo, hi, arg_hi
