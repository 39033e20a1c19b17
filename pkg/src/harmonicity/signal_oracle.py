"""Independent verification channel for period computations.

A stack of pure tones ``s(t) = sum(sin(w_i t))`` has the normalized
autocorrelation ``rho(tau) = 1/2 * sum(cos(w_i tau))`` in the limit of an
infinite window — phases drop out entirely.  ``rho`` attains its global
maximum ``k/2`` exactly at the lags where every tone completes a whole
number of cycles, so the first such lag is the period of the compound
signal.  :func:`detect_period` finds that lag numerically, from the signal
alone, without consulting any ratio arithmetic — which makes it an
independent check of the lcm-based period: for exact frequency ratios
``a_i/b_i`` the detected lag must be ``lcm(b_i)`` periods of the lowest
tone (equivalently, the stack's least common overtone is ``lcm(a_i)``
times the lowest frequency).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import UsageError
from .periodicity import Harmony, ratios_for
from .tuning import TuningTable

__all__ = [
    "ToneStack",
    "autocorrelation",
    "autocorrelation_grid",
    "detect_period",
]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ToneStack:
    """Pure tones given by their frequencies in Hz, strictly ascending."""

    frequencies: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.frequencies) < 1:
            raise UsageError("a tone stack needs at least one frequency")
        if self.frequencies[0] <= 0:
            raise UsageError(f"frequencies must be positive, got {self.frequencies[0]!r}")
        if any(b >= a for a, b in zip(self.frequencies[1:], self.frequencies)):
            raise UsageError(
                f"frequencies must be strictly ascending, got {self.frequencies}"
            )

    @classmethod
    def from_harmony(cls, h: Harmony, t: TuningTable, f1: float) -> "ToneStack":
        """Realize a harmony as pure tones with lowest frequency ``f1``."""
        if f1 <= 0:
            raise UsageError(f"reference frequency must be positive, got {f1!r}")
        return cls(tuple(f1 * float(r) for r in ratios_for(h, t)))

    @property
    def angular_frequencies(self) -> tuple[float, ...]:
        return tuple(2.0 * math.pi * f for f in self.frequencies)

    @property
    def lowest_period(self) -> float:
        return 1.0 / self.frequencies[0]


def autocorrelation(s: ToneStack, tau: float) -> float:
    """Infinite-window autocorrelation of the stack at lag ``tau``:
    the analytic limit ``1/2 * sum(cos(w_i * tau))``, not a numerical
    integral.  Equals ``k/2`` at ``tau = 0``.

    >>> autocorrelation(ToneStack((440.0, 550.0, 660.0)), 4 / 440)
    1.5
    """
    if tau < 0:
        raise UsageError(f"autocorrelation() needs tau >= 0, got {tau!r}")
    return 0.5 * math.fsum(math.cos(w * tau) for w in s.angular_frequencies)


def autocorrelation_grid(s: ToneStack, taus: np.ndarray) -> np.ndarray:
    """Vectorized :func:`autocorrelation` over an array of lags."""
    omegas = np.asarray(s.angular_frequencies)
    return 0.5 * np.cos(np.outer(np.asarray(taus, dtype=float), omegas)).sum(axis=1)


def detect_period(
    s: ToneStack,
    search_horizon: float = 130.0,
    grid_step: float | None = None,
) -> float | None:
    """Find the period of the stack from its autocorrelation alone.

    Scans lags up to ``search_horizon`` periods of the lowest tone on a
    regular grid, polishes each promising local maximum by golden-section
    search, and returns the smallest polished lag whose autocorrelation
    comes within ``1e-9 * k`` of the zero-lag value — the first full-height
    recurrence.  Returns ``None`` when no lag qualifies, which signals
    irrational frequency ratios or a horizon shorter than the true period.
    """
    if search_horizon < 1:
        raise UsageError(
            f"detect_period() needs a horizon of at least 1 lowest-tone period, "
            f"got {search_horizon!r}"
        )
    shortest_period = 1.0 / s.frequencies[-1]
    if grid_step is None:
        grid_step = min(s.lowest_period / 1000.0, shortest_period / 20.0)
    elif grid_step <= 0 or grid_step > shortest_period / 20.0:
        raise UsageError(
            f"grid_step must be in (0, {shortest_period / 20.0:.3e}] "
            f"(a twentieth of the shortest period), got {grid_step!r}"
        )

    peak = 0.5 * len(s.frequencies)
    epsilon = 1e-9 * len(s.frequencies)
    taus = np.arange(grid_step, search_horizon * s.lowest_period + grid_step, grid_step)
    rho = autocorrelation_grid(s, taus)

    # A grid point within half a step of a full-height peak can fall short of
    # it by up to the quadratic sag below; only such points need polishing.
    omega_sq = math.fsum(w * w for w in s.angular_frequencies)
    sag = 0.25 * omega_sq * (0.5 * grid_step) ** 2
    threshold = peak - epsilon

    candidates = np.flatnonzero(rho >= threshold - sag)
    for i in candidates:
        lo = taus[i] - grid_step
        hi = taus[i] + grid_step
        polished = _golden_section_max(lambda t: autocorrelation(s, t), max(lo, 0.0), hi)
        if autocorrelation(s, polished) >= threshold:
            return polished
    return None


def _golden_section_max(
    f: Callable[[float], float], lo: float, hi: float, iterations: int = 90
) -> float:
    """Locate the maximum of a unimodal function on [lo, hi]."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iterations):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        if b - a <= 1e-15 * max(1.0, b):
            break
    return 0.5 * (a + b)
