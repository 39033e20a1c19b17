"""Exact rational arithmetic: least common multiples, prime factor
multisets, and Stern-Brocot approximation of reals by small fractions.

The approximation routine is a binary search on the Stern-Brocot tree: it
repeatedly forms the mediant ``(a_l + a_r) / (b_l + b_r)`` of the current
left/right bounds and narrows toward the target until the mediant falls in
the requested interval.  Runs of same-direction steps are taken in a single
jump, so the search is fast even for tight precisions, while the recorded
trace still lists every intermediate mediant (each one is the component-wise
sum of its two parent fractions).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import UsageError

__all__ = [
    "ApproximationTrace",
    "approximate",
    "lcm_many",
    "mediant_sequence",
    "prime_factor_multiset",
]

Real = Union[int, float, Fraction]

#: Fail-safe bound on recorded mediants; unreachable for any precision a
#: caller can meaningfully ask for (even p = 1e-9 needs only ~1e9 *plain*
#: steps, and the accelerated walk records far fewer than it skips).
_MAX_MEDIANTS = 1_000_000


def lcm_many(values: Iterable[int]) -> int:
    """Return the least common multiple of one or more positive integers.

    >>> lcm_many([1, 5, 3])
    15
    >>> lcm_many([1, 2, 4])
    4
    """
    items = list(values)
    if not items:
        raise UsageError("lcm_many() needs at least one integer")
    for item in items:
        if not isinstance(item, int) or item < 1:
            raise UsageError(f"lcm_many() needs positive integers, got {item!r}")
    return math.lcm(*items)


def prime_factor_multiset(n: int) -> dict[int, int]:
    """Return the prime factorization of ``n`` as a prime -> multiplicity map.

    ``1`` factors into the empty map.

    >>> prime_factor_multiset(120)
    {2: 3, 3: 1, 5: 1}
    """
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"prime_factor_multiset() needs a positive integer, got {n!r}")
    factors: dict[int, int] = {}
    remaining = n
    divisor = 2
    while divisor * divisor <= remaining:
        while remaining % divisor == 0:
            factors[divisor] = factors.get(divisor, 0) + 1
            remaining //= divisor
        divisor += 1 if divisor == 2 else 2
    if remaining > 1:
        factors[remaining] = factors.get(remaining, 0) + 1
    return factors


@dataclass(frozen=True)
class ApproximationTrace:
    """Full record of one mediant search.

    ``mediants`` lists every mediant the plain binary search would visit, in
    order; ``result`` is the accepted fraction (the last mediant, or an
    integer bound accepted before the walk started).
    """

    target: Real
    precision: Real
    mediants: tuple[Fraction, ...]
    result: Fraction


def _mediant(left: Fraction, right: Fraction) -> Fraction:
    return Fraction(
        left.numerator + right.numerator, left.denominator + right.denominator
    )


def approximate(x: Real, p: Real) -> ApproximationTrace:
    """Find the fraction with the smallest denominator within ``p`` of ``x``.

    The result ``a/b`` satisfies ``(1-p)*x <= a/b <= (1+p)*x`` (closed
    interval) and no fraction with a smaller denominator does.  The search
    starts from the two integers bracketing ``x`` and walks mediants between
    them; same-direction runs are jumped in one step of size ``k``.

    When ``x`` is an int or :class:`~fractions.Fraction` all comparisons are
    exact; for float input, double precision is used throughout.

    >>> approximate(2 ** (7 / 12), 0.01).result
    Fraction(3, 2)
    >>> approximate(5.0, 0.01).result
    Fraction(5, 1)
    """
    if isinstance(x, float) and not math.isfinite(x):
        raise UsageError(f"approximate() needs a finite x, got {x!r}")
    if x <= 0:
        raise UsageError(f"approximate() needs x > 0, got {x!r}")
    if not 0 < p < 1:
        raise UsageError(f"approximate() needs a precision in (0, 1), got {p!r}")

    if isinstance(x, float):
        x_min: Real = (1.0 - p) * x
        x_max: Real = (1.0 + p) * x

        def value(f: Fraction) -> Real:
            return f.numerator / f.denominator

    else:
        exact_x, exact_p = Fraction(x), Fraction(p)
        x_min = (1 - exact_p) * exact_x
        x_max = (1 + exact_p) * exact_x

        def value(f: Fraction) -> Real:
            return f

    def accepted(f: Fraction) -> bool:
        return x_min <= value(f) <= x_max

    left = Fraction(math.floor(x))
    right = left + 1
    for bound in (left, right):
        if accepted(bound):
            return ApproximationTrace(x, p, (), bound)

    mediants: list[Fraction] = []
    while len(mediants) < _MAX_MEDIANTS:
        step = _mediant(left, right)
        mediants.append(step)
        if accepted(step):
            return ApproximationTrace(x, p, tuple(mediants), step)
        if value(step) > x_max:
            # The next k plain steps all move toward `left`; take them at once.
            k = _run_length(
                right.numerator - x_max * right.denominator,
                x_max * left.denominator - left.numerator,
            )
            node = step
            for _ in range(k - 1):
                node = _mediant(node, left)
                mediants.append(node)
            right = node
        else:
            k = _run_length(
                x_min * left.denominator - left.numerator,
                right.numerator - x_min * right.denominator,
            )
            node = step
            for _ in range(k - 1):
                node = _mediant(node, right)
                mediants.append(node)
            left = node
        # A run can end exactly on the interval edge; accept it there.
        if accepted(node):
            return ApproximationTrace(x, p, tuple(mediants), node)
    raise RuntimeError("approximate() exceeded its mediant budget")


def _run_length(numerator: Real, denominator: Real) -> int:
    """Number of same-direction mediant steps to take in one jump."""
    if denominator <= 0:  # bound touching the interval edge in float rounding
        return 1
    return max(1, math.floor(numerator / denominator))


def mediant_sequence(x: Real, steps: int = 12) -> list[Fraction]:
    """Walk the mediant binary search between 0/1 and 1/1 toward ``x``,
    recording each mediant that strictly improves on the closest
    approximation found so far.

    The walk stops after ``steps`` recorded mediants, or as soon as a
    mediant hits ``x`` exactly.

    >>> [str(f) for f in mediant_sequence(Fraction(1, 3), steps=2)]
    ['1/2', '1/3']
    """
    if not 0 < x < 1:
        raise UsageError(f"mediant_sequence() needs x strictly between 0 and 1, got {x!r}")
    if not isinstance(steps, int) or steps < 1:
        raise UsageError(f"mediant_sequence() needs a positive step count, got {steps!r}")

    exact = not isinstance(x, float)
    target: Real = Fraction(x) if exact else x

    def error_of(f: Fraction) -> Real:
        return abs(target - f) if exact else abs(target - f.numerator / f.denominator)

    left, right = Fraction(0), Fraction(1)
    recorded: list[Fraction] = []
    best: Real | None = None
    for _ in range(_MAX_MEDIANTS):
        if len(recorded) >= steps:
            break
        step = _mediant(left, right)
        error = error_of(step)
        if best is None or error < best:
            recorded.append(step)
            best = error
        if error == 0:
            break
        if _below(step, target, exact):
            left = step
        else:
            right = step
    else:
        raise RuntimeError("mediant_sequence() exceeded its step budget")
    return recorded


def _below(f: Fraction, target: Real, exact: bool) -> bool:
    """True when ``f`` lies strictly below the walk target."""
    if exact:
        return f < target
    return f.numerator / f.denominator < target
