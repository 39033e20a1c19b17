"""Rival consonance measures computed from the same frequency ratios.

Four number-theoretic measures plus one parametric curve:

* ``gradus_suavitatis`` — Euler's degree of softness of the product
  ``lcm(numerators) * lcm(denominators)`` of the lowest-tone ratios.
* ``omega_measure`` — number of prime factors, with multiplicity, of the
  same product.
* ``brefeld_value`` — geometric mean of all numerators and denominators
  over the pairwise intervals of the harmony.
* ``percentage_similarity`` — mean per-interval similarity
  ``(a + b - 1) / (a * b)`` over the pairwise intervals, in percent.
* ``roughness_curve`` — the standard parametric roughness shape
  ``(x/a * exp(1 - x/a)) ** b``.

Pairwise intervals are mapped through the tuning by semitone *distance*
(``ratio_for_semitone(t, n_j - n_i)``), not by dividing the two tones'
ratios; in unequal tunings the two differ, and only the distance reading
reproduces the reference similarity tables.  Ratio-level variants
(``*_of_ratios`` / ``*_of_intervals``) are exposed for callers that work
with explicit tone rows, including degenerate ones such as a doubled
unison, which a :class:`~harmonicity.periodicity.Harmony` cannot represent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import UndefinedMeasureError, UsageError
from .periodicity import Harmony, analyze, ratios_for
from .rationals import lcm_many, prime_factor_multiset
from .tuning import TuningTable, ratio_for_semitone

__all__ = [
    "MEASURE_NAMES",
    "MeasureVector",
    "brefeld_of_intervals",
    "brefeld_value",
    "evaluate_measure",
    "gradus_of_ratios",
    "gradus_suavitatis",
    "measure_vector",
    "omega_measure",
    "omega_of_ratios",
    "pairwise_intervals",
    "percentage_similarity",
    "roughness_curve",
    "similarity_of_intervals",
]


@dataclass(frozen=True)
class MeasureVector:
    """All scalar measures of one harmony under one tuning."""

    gradus: int
    omega: int
    brefeld: float
    similarity: float


def _ratio_product(ratios: Sequence[Fraction]) -> int:
    return lcm_many([r.numerator for r in ratios]) * lcm_many(
        [r.denominator for r in ratios]
    )


def gradus_of_ratios(ratios: Sequence[Fraction]) -> int:
    """Euler's degree of softness of a list of lowest-tone ratios:
    ``1 + sum(m_i * (p_i - 1))`` over the prime factorization
    ``prod(p_i ** m_i)`` of ``lcm(numerators) * lcm(denominators)``."""
    factors = prime_factor_multiset(_ratio_product(ratios))
    return 1 + sum(m * (p - 1) for p, m in factors.items())


def omega_of_ratios(ratios: Sequence[Fraction]) -> int:
    """Number of prime factors, counted with multiplicity, of
    ``lcm(numerators) * lcm(denominators)`` of the given ratios."""
    factors = prime_factor_multiset(_ratio_product(ratios))
    return sum(factors.values())


def gradus_suavitatis(h: Harmony, t: TuningTable) -> int:
    """Euler's degree of softness of the harmony's lowest-tone ratios.

    >>> from .tuning import builtin_tuning
    >>> gradus_suavitatis(Harmony((0, 7)), builtin_tuning("just"))
    4
    """
    return gradus_of_ratios(ratios_for(h, t))


def omega_measure(h: Harmony, t: TuningTable) -> int:
    """Prime-factor count (with multiplicity) of the harmony's ratio product.

    >>> from .tuning import builtin_tuning
    >>> omega_measure(Harmony((0, 4)), builtin_tuning("just"))
    3
    """
    return omega_of_ratios(ratios_for(h, t))


def pairwise_intervals(tones: Sequence[int], t: TuningTable) -> list[Fraction]:
    """Frequency ratios of all unordered tone pairs, one per pair, mapped by
    semitone distance.  ``tones`` may contain duplicates (distance 0 maps to
    the unison ratio 1/1); order does not matter."""
    if len(tones) < 2:
        raise UndefinedMeasureError(
            "pairwise-interval measures need at least two tones"
        )
    ordered = sorted(tones)
    return [
        ratio_for_semitone(t, high - low)
        for low, high in combinations(ordered, 2)
    ]


def brefeld_of_intervals(intervals: Sequence[Fraction]) -> float:
    """Geometric mean of all numerators and denominators of the given
    interval ratios: the 2k-th root of their full product."""
    if not intervals:
        raise UndefinedMeasureError("brefeld value needs at least one interval")
    product = math.prod(r.numerator * r.denominator for r in intervals)
    return float(product) ** (1.0 / (2 * len(intervals)))


def similarity_of_intervals(intervals: Sequence[Fraction]) -> float:
    """Mean per-interval similarity ``(a + b - 1) / (a * b)`` in percent."""
    if not intervals:
        raise UndefinedMeasureError("percentage similarity needs at least one interval")
    total = sum(
        (Fraction(r.numerator + r.denominator - 1, r.numerator * r.denominator)
         for r in intervals),
        Fraction(0),
    )
    return float(total / len(intervals) * 100)


def brefeld_value(h: Harmony, t: TuningTable) -> float:
    """Brefeld's consonance value of the harmony's pairwise intervals.

    >>> from .tuning import builtin_tuning
    >>> round(brefeld_value(Harmony((0, 7)), builtin_tuning("just")), 3)
    2.449
    """
    return brefeld_of_intervals(pairwise_intervals(h.semitones, t))


def percentage_similarity(h: Harmony, t: TuningTable) -> float:
    """Mean pairwise similarity of the harmony, in percent.

    >>> from .tuning import builtin_tuning
    >>> round(percentage_similarity(Harmony((0, 4, 7)), builtin_tuning("just")), 2)
    46.67
    """
    return similarity_of_intervals(pairwise_intervals(h.semitones, t))


def roughness_curve(x: float, a: float, b: float = 2.0) -> float:
    """Parametric roughness shape ``(x/a * exp(1 - x/a)) ** b``.

    Zero at ``x = 0``, maximum 1 at ``x = a``, decaying beyond; ``b``
    controls the width of the peak (2 gives the standard curve).
    """
    if a <= 0:
        raise UsageError(f"roughness_curve() needs a > 0, got {a!r}")
    if b <= 0:
        raise UsageError(f"roughness_curve() needs b > 0, got {b!r}")
    if x < 0:
        raise UsageError(f"roughness_curve() needs x >= 0, got {x!r}")
    scaled = x / a
    return (scaled * math.exp(1.0 - scaled)) ** b


def measure_vector(h: Harmony, t: TuningTable) -> MeasureVector:
    """All scalar measures of ``h`` at once (for report columns)."""
    return MeasureVector(
        gradus=gradus_suavitatis(h, t),
        omega=omega_measure(h, t),
        brefeld=brefeld_value(h, t),
        similarity=percentage_similarity(h, t),
    )


#: Names accepted by :func:`evaluate_measure` (smaller = more consonant for
#: all of them except ``similarity``, where larger is more consonant).
MEASURE_NAMES = (
    "rel_periodicity",
    "log_periodicity",
    "similarity",
    "gradus",
    "omega",
    "brefeld",
)


def evaluate_measure(tones: Sequence[int], measure: str, t: TuningTable) -> float:
    """Value of one named measure for raw tone offsets under tuning ``t``.

    ``tones`` may contain duplicates (a doubled unison contributes a 1/1
    pairwise interval and collapses for the periodicity measures).
    """
    if measure in ("rel_periodicity", "log_periodicity"):
        result = analyze(Harmony(tuple(sorted(set(tones)))), t)
        return result.mean_h if measure == "rel_periodicity" else result.mean_log_h
    if measure == "similarity":
        return similarity_of_intervals(pairwise_intervals(tones, t))
    if measure == "brefeld":
        return brefeld_of_intervals(pairwise_intervals(tones, t))
    if measure == "gradus":
        return float(gradus_of_ratios([ratio_for_semitone(t, n) for n in tones]))
    if measure == "omega":
        return float(omega_of_ratios([ratio_for_semitone(t, n) for n in tones]))
    valid = ", ".join(MEASURE_NAMES)
    raise UsageError(f"unknown measure {measure!r}; computable measures: {valid}")
