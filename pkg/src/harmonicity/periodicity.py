"""Relative periodicity of harmonies.

A harmony whose tones stand in exact frequency ratios ``F_i = a_i / b_i``
(lowest terms, relative to the lowest tone) repeats after ``h = lcm(b_1, ...,
b_k)`` periods of its lowest tone.  Smaller ``h`` means the compound wave
repeats sooner — the harmony is heard as more consonant.

Beyond that raw value, :func:`analyze` can average over *inversions*:
re-reference the harmony to each of its tones in turn, compute each view's
``h``, rescale it by the view's lowest ratio so all views share one time
base, and average.  Both the arithmetic mean and the mean of ``log2`` (the
log of the geometric mean) are reported; values stay exact rationals until
the final averaging step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import UsageError
from .rationals import lcm_many
from .tuning import TuningTable, ratio_for_semitone

__all__ = [
    "AnalysisResult",
    "Harmony",
    "analyze",
    "csv_header",
    "fundamental_frequency",
    "inversion_offsets",
    "ratios_for",
    "raw_periodicity",
    "reduce_to_octave",
]


@dataclass(frozen=True)
class Harmony:
    """A set of tones given as semitone offsets above the lowest tone.

    ``semitones`` is strictly increasing and starts at 0 (the lowest tone is
    the reference point for all frequency ratios).
    """

    semitones: tuple[int, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        if len(self.semitones) < 1:
            raise UsageError("a harmony needs at least one tone")
        if self.semitones[0] != 0:
            raise UsageError(
                f"harmony offsets must start at 0, got {self.semitones[0]} "
                "(use Harmony.from_offsets() to normalize arbitrary pitch sets)"
            )
        if any(b >= a for a, b in zip(self.semitones[1:], self.semitones)):
            raise UsageError(
                f"harmony offsets must be strictly increasing, got {self.semitones}"
            )
        if any(not isinstance(n, int) for n in self.semitones):
            raise UsageError(f"harmony offsets must be integers, got {self.semitones}")

    @classmethod
    def from_offsets(cls, offsets: Iterable[int], label: str | None = None) -> "Harmony":
        """Build a harmony from arbitrary integer pitches, shifting them so
        the lowest becomes 0.  Duplicate pitches are rejected."""
        pitches = list(offsets)
        if not pitches:
            raise UsageError("a harmony needs at least one tone")
        if len(set(pitches)) != len(pitches):
            raise UsageError(f"duplicate tones in {pitches}")
        low = min(pitches)
        return cls(tuple(sorted(p - low for p in pitches)), label=label)

    def __len__(self) -> int:
        return len(self.semitones)

    def __str__(self) -> str:
        body = ",".join(str(n) for n in self.semitones)
        return f"{{{body}}}"


def reduce_to_octave(h: Harmony) -> Harmony:
    """Project all tones into one octave (offsets mod 12, deduplicated).

    Octave reduction changes periodicity in general, so it is never applied
    implicitly; call this first when a reduced reading is wanted.
    """
    return Harmony(tuple(sorted({n % 12 for n in h.semitones})), label=h.label)


def ratios_for(h: Harmony, t: TuningTable) -> tuple[Fraction, ...]:
    """Frequency ratios of all tones relative to the lowest tone."""
    return tuple(ratio_for_semitone(t, n) for n in h.semitones)


def raw_periodicity(h: Harmony, t: TuningTable) -> int:
    """Periods of the lowest tone until the whole harmony repeats:
    lcm of the denominators of the tones' frequency ratios.

    >>> from .tuning import builtin_tuning
    >>> raw_periodicity(Harmony((0, 4, 7)), builtin_tuning("just"))
    4
    """
    return lcm_many([r.denominator for r in ratios_for(h, t)])


def inversion_offsets(h: Harmony, i: int) -> tuple[int, ...]:
    """Semitone offsets of the harmony re-referenced to its ``i``-th tone
    (element ``i`` becomes 0, earlier elements negative)."""
    if not 0 <= i < len(h):
        raise UsageError(f"inversion index {i} out of range for {h}")
    anchor = h.semitones[i]
    return tuple(n - anchor for n in h.semitones)


def _inversion_value(offsets: tuple[int, ...], t: TuningTable) -> Fraction:
    """Rescaled periodicity h' of one re-referenced view: the view's lcm of
    ratio denominators times its lowest frequency ratio, exact."""
    ratios = [ratio_for_semitone(t, n) for n in offsets]
    h_view = lcm_many([r.denominator for r in ratios])
    return h_view * min(ratios)


@dataclass(frozen=True)
class AnalysisResult:
    """Periodicity summary of one harmony under one tuning.

    ``inversion_h`` lists the rescaled values h'_j, one per reference tone
    (only j = 0 when inversion averaging is off); ``raw_h`` always equals
    ``inversion_h[0]``.  ``mean_h`` is their arithmetic mean and
    ``mean_log_h`` the mean of their base-2 logs.  ``extras`` carries
    optional named side measures filled in by callers.
    """

    harmony: Harmony
    tuning: str
    raw_h: int
    inversion_h: tuple[Fraction, ...]
    mean_h: float
    mean_log_h: float
    extras: dict[str, float] = field(default_factory=dict)

    @property
    def exact_mean_h(self) -> Fraction:
        """The arithmetic mean of ``inversion_h`` as an exact fraction."""
        return sum(self.inversion_h, Fraction(0)) / len(self.inversion_h)

    def to_json_dict(self) -> dict:
        """JSON-ready mapping mirroring the result fields."""
        payload = {
            "harmony": {
                "semitones": list(self.harmony.semitones),
                "label": self.harmony.label,
            },
            "tuning": self.tuning,
            "raw_h": self.raw_h,
            "inversion_h": [str(v) for v in self.inversion_h],
            "mean_h": self.mean_h,
            "mean_log_h": self.mean_log_h,
        }
        if self.extras:
            payload["extras"] = dict(self.extras)
        return payload

    def to_csv_row(self) -> str:
        """One CSV row matching :func:`csv_header`."""
        semis = ",".join(str(n) for n in self.harmony.semitones)
        return (
            f"{semis};{self.tuning};{self.raw_h};"
            f"{self.mean_h:.1f};{self.mean_log_h:.3f}"
        )


def csv_header() -> str:
    """Header row for :meth:`AnalysisResult.to_csv_row`."""
    return "semitones;tuning;raw_h;mean_h;mean_log_h"


def analyze(h: Harmony, t: TuningTable, average_inversions: bool = True) -> AnalysisResult:
    """Compute raw and (optionally) inversion-averaged relative periodicity.

    With ``average_inversions`` the harmony is re-referenced to each tone in
    turn; each view's periodicity is rescaled onto the root view's time base
    by its lowest frequency ratio, and the mean and mean-log are taken over
    these exact values.

    >>> from .tuning import builtin_tuning
    >>> analyze(Harmony((0, 3, 9)), builtin_tuning("just")).inversion_h
    (Fraction(15, 1), Fraction(25, 1), Fraction(6, 1))
    """
    indices = range(len(h)) if average_inversions else range(1)
    values = tuple(_inversion_value(inversion_offsets(h, i), t) for i in indices)
    raw = values[0]
    if raw.denominator != 1:
        raise AssertionError(f"root view of {h} produced non-integer h {raw}")
    mean = sum(values, Fraction(0)) / len(values)
    mean_log = math.fsum(math.log2(v) for v in values) / len(values)
    return AnalysisResult(
        harmony=h,
        tuning=t.name,
        raw_h=raw.numerator,
        inversion_h=values,
        mean_h=float(mean),
        mean_log_h=mean_log,
    )


def fundamental_frequency(h: Harmony, t: TuningTable, f1: float) -> float:
    """Repetition rate of the whole harmony when the lowest tone has
    frequency ``f1``: the missing fundamental ``f1 / h``."""
    if f1 <= 0:
        raise UsageError(f"fundamental_frequency() needs f1 > 0, got {f1!r}")
    return f1 / raw_periodicity(h, t)
