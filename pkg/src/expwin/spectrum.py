"""Frequency-domain analysis of windows.

The transform convention is Fhat(f) = integral_0^1 exp(2*pi*i*f*t) W(t) dt
with frequencies in Hz.  Two independent evaluation paths are provided:
a zero-padded FFT of the sampled window, and direct composite-Simpson
quadrature of the defining integral (the oracle for the FFT path).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .windows import SampledWindow, WindowDef, sample, window_eval


class NoNullsFoundError(RuntimeError):
    """No local minimum of the spectrum exists below the scan limit."""


@dataclass
class Spectrum:
    """Complex spectrum on a non-negative frequency grid (Hz)."""

    frequencies: np.ndarray
    amplitudes: np.ndarray
    db: np.ndarray = field(init=False)

    def __post_init__(self):
        mag = np.abs(self.amplitudes)
        with np.errstate(divide="ignore"):
            self.db = 20.0 * np.log10(mag / mag[0])
        self.db[0] = 0.0

    @property
    def df(self) -> float:
        return float(self.frequencies[1] - self.frequencies[0])

    @property
    def magnitudes(self) -> np.ndarray:
        return np.abs(self.amplitudes)


@dataclass
class LobeSegmentation:
    """Nulls and sidelobe peaks of the positive-frequency spectrum."""

    nulls: np.ndarray              # Hz, strictly increasing
    peak_freqs: np.ndarray         # Hz, peak i lies between nulls i and i+1
    peak_db: np.ndarray            # dB relative to the f=0 amplitude

    @property
    def main_lobe_edge(self) -> float:
        return float(self.nulls[0])


def _next_pow2(n: int) -> int:
    return 1 << (int(n - 1)).bit_length()


def spectrum_fft(w: SampledWindow, pad_factor: int = 128, f_max: float = 500.0) -> Spectrum:
    """Spectrum via FFT of the zero-padded sample record.

    The record is padded to pad_factor seconds (rounded up to a power of
    two in total length), giving a frequency grid spacing of
    1/pad_factor Hz for power-of-two sample counts.  Amplitudes carry
    the dt scaling so that the f=0 bin approximates integral of W.
    """
    if pad_factor < 2:
        raise ValueError(f"pad_factor must be >= 2, got {pad_factor}")
    total = _next_pow2(w.n_samples * pad_factor)
    padded = np.zeros(total)
    padded[: w.n_samples] = w.values
    # conj() flips numpy's e^{-i2pi ft} sign to match the e^{+i2pi ft}
    # convention; magnitudes are unaffected.
    amps = np.conj(np.fft.rfft(padded)) * w.dt
    freqs = np.arange(amps.size) / (total * w.dt)
    keep = freqs <= f_max + 1e-12
    return Spectrum(frequencies=freqs[keep], amplitudes=amps[keep])


def _simpson_weights(panels: int) -> np.ndarray:
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w / (3.0 * panels)


def spectrum_quadrature(
    wdef: WindowDef, f_grid: Sequence[float], panels: int = 2 ** 15
) -> Spectrum:
    """Spectrum by composite Simpson quadrature of the defining integral.

    Independent of the FFT path: the window is re-evaluated on a dense
    quadrature grid and each frequency is integrated directly.  For a
    uniform frequency grid the oscillatory factor is advanced by an
    incremental phasor (re-anchored periodically to keep round-off from
    accumulating), which avoids recomputing a full complex exponential
    per frequency.
    """
    f = np.asarray(f_grid, dtype=float)
    if f.ndim != 1 or f.size == 0:
        raise ValueError("f_grid must be a non-empty 1-D sequence")
    if np.any(np.diff(f) < 0) or np.any(f < 0):
        raise ValueError("f_grid must be sorted and non-negative")
    if panels < 2 ** 15:
        panels = 2 ** 15
    if panels % 2:
        panels += 1

    t = np.linspace(0.0, 1.0, panels + 1)
    g = _simpson_weights(panels) * np.asarray(window_eval(wdef, t), dtype=float)

    amps = np.empty(f.size, dtype=complex)
    steps = np.diff(f)
    uniform = f.size > 2 and np.allclose(steps, steps[0], rtol=0.0, atol=1e-12)
    if uniform:
        step_phasor = np.exp(2j * np.pi * steps[0] * t)
        phasor = np.exp(2j * np.pi * f[0] * t)
        for j in range(f.size):
            if j and j % 256 == 0:
                phasor = np.exp(2j * np.pi * f[j] * t)  # re-anchor
            amps[j] = np.dot(g, phasor)
            phasor = phasor * step_phasor
    else:
        for j in range(f.size):
            amps[j] = np.dot(g, np.exp(2j * np.pi * f[j] * t))
    return Spectrum(frequencies=f, amplitudes=amps)


def _parabolic_vertex(x0: float, h: float, ym: float, y0: float, yp: float):
    """Vertex of the parabola through (x0-h, ym), (x0, y0), (x0+h, yp)."""
    denom = ym - 2.0 * y0 + yp
    if denom == 0.0 or not np.isfinite(denom):
        return x0, y0
    delta = 0.5 * (ym - yp) / denom
    delta = float(np.clip(delta, -0.5, 0.5))
    return x0 + delta * h, y0 - 0.25 * (ym - yp) * delta


def segment_lobes(s: Spectrum, f_max: Optional[float] = None) -> LobeSegmentation:
    """Locate spectrum nulls and the sidelobe peaks between them.

    Nulls are local minima of |Fhat| on the grid, refined by 3-point
    parabolic interpolation; windows without true spectral zeros still
    yield nulls through their local minima.  Each peak is the largest
    grid magnitude strictly between consecutive nulls, refined on the
    dB values.
    """
    if s.df > 0.02 + 1e-12:
        raise ValueError(f"grid spacing {s.df} Hz too coarse for segmentation")
    if f_max is not None:
        keep = s.frequencies <= f_max + 1e-12
        freqs, mag, db = s.frequencies[keep], s.magnitudes[keep], s.db[keep]
    else:
        freqs, mag, db = s.frequencies, s.magnitudes, s.db

    interior = np.arange(1, mag.size - 1)
    is_min = (mag[interior] < mag[interior - 1]) & (mag[interior] <= mag[interior + 1])
    min_idx = interior[is_min]
    if min_idx.size == 0:
        raise NoNullsFoundError("no spectral local minimum below the scan limit")

    h = s.df
    nulls = np.array(
        [
            _parabolic_vertex(freqs[i], h, mag[i - 1], mag[i], mag[i + 1])[0]
            for i in min_idx
        ]
    )

    peak_freqs, peak_db = [], []
    for a, b in zip(min_idx[:-1], min_idx[1:]):
        if b - a < 2:
            continue
        k = a + 1 + int(np.argmax(mag[a + 1 : b]))
        pf, pdb = _parabolic_vertex(freqs[k], h, db[k - 1], db[k], db[k + 1])
        peak_freqs.append(pf)
        peak_db.append(pdb)
    return LobeSegmentation(
        nulls=nulls,
        peak_freqs=np.asarray(peak_freqs),
        peak_db=np.asarray(peak_db),
    )


def apply_window(signal: Sequence[float], wdef: WindowDef) -> np.ndarray:
    """Modulate a signal sampled on t_k = k/N by the window."""
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1 or x.size < 16:
        raise ValueError("signal must be 1-D with at least 16 samples")
    return x * sample(wdef, x.size).values
