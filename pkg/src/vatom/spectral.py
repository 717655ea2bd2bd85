"""Dominant-frequency extraction from sampled coherence signals."""
from __future__ import annotations

import numpy as np

__all__ = ["dominant_angular_frequency"]


def dominant_angular_frequency(times: np.ndarray, signal: np.ndarray,
                               subtract: complex | None = None,
                               pad_factor: int = 8) -> float:
    """Angular frequency of the strongest spectral line of a sampled signal.

    The signal may be complex. A constant offset (for example a steady
    value) can be removed with ``subtract``; otherwise the sample mean is
    removed, so the zero-frequency bin never wins. A Hann window plus
    zero-padding plus parabolic interpolation of log |F| around the peak
    gives sub-bin resolution well below 1% on the tone lengths used here.

    Returns the magnitude of the peak angular frequency.
    """
    times = np.asarray(times, dtype=float)
    signal = np.asarray(signal, dtype=complex)
    if times.ndim != 1 or times.size != signal.size:
        raise ValueError("times and signal must be 1-d arrays of equal length")
    if times.size < 8:
        raise ValueError("need at least 8 samples")
    dt = np.diff(times)
    if not np.allclose(dt, dt[0], rtol=1e-9, atol=0.0):
        raise ValueError("samples must be uniformly spaced")

    y = signal - (np.mean(signal) if subtract is None else subtract)
    y = y * np.hanning(y.size)
    n = pad_factor * y.size
    spectrum = np.fft.fft(y, n=n)
    freqs = np.fft.fftfreq(n, d=dt[0])
    mag = np.abs(spectrum)
    k = int(np.argmax(mag))
    if mag[k] == 0.0:
        return 0.0

    # parabolic refinement on log magnitude, wrapping around the FFT circle
    km = (k - 1) % n
    kp = (k + 1) % n
    with np.errstate(divide="ignore"):
        lm, l0, lp = np.log(mag[km]), np.log(mag[k]), np.log(mag[kp])
    denom = lm - 2.0 * l0 + lp
    delta = 0.0 if denom == 0.0 or not np.isfinite(denom) else 0.5 * (lm - lp) / denom
    delta = float(np.clip(delta, -0.5, 0.5))
    bin_width = freqs[1] - freqs[0]
    f_peak = freqs[k] + delta * bin_width
    return abs(2.0 * np.pi * f_peak)
