"""Discrete-grid machinery: DFT, ideal filtering, synchronous detection.

The wavelet is a band-pass waveform centred on the carrier w0 = 2pi.
Mixing it with cos(2pi t) and sin(2pi t) and low-pass filtering yields the
in-phase and quadrature baseband components s_c, s_s, from which the
wavelet is reconstructed at unit gain:

    psi(t) = s_c(t) cos(2pi t) + s_s(t) sin(2pi t)

The Hilbert-transform variant of the same idea recovers the scaling
function directly:

    phi(t) = psi(t) cos(2pi t) + H[psi](t) sin(2pi t)

Filtering and the Hilbert transform are realised as ideal (brick-wall)
multipliers on DFT bins, so results are periodic-convolution accurate:
grids should span the waveform until its tails are negligible.
"""

from dataclasses import dataclass

import numpy as np

CARRIER = 2.0 * np.pi            # synchronous-detection carrier w0
DEFAULT_CUTOFF = 2.0 * np.pi     # valid anywhere in (4pi/3, 8pi/3)
MAX_GRID_DT = 3.0 / 8.0          # Nyquist must exceed the 8pi/3 band edge
INTERIOR_FRACTION = 0.8          # window used when quoting interior errors

__all__ = [
    "CARRIER", "DEFAULT_CUTOFF", "MAX_GRID_DT", "INTERIOR_FRACTION",
    "InvalidGrid", "GridTooCoarse", "GridMismatch",
    "SampledSignal", "ComplexSpectrumGrid",
    "sample", "dft", "idft", "modulate", "lowpass", "hilbert",
    "decompose_quadrature", "reconstruct_quadrature",
    "scale_from_wavelet", "envelope", "interior_slice",
]


class InvalidGrid(ValueError):
    pass


class GridTooCoarse(ValueError):
    pass


class GridMismatch(ValueError):
    pass


@dataclass
class SampledSignal:
    """Uniformly sampled real waveform; sample k sits at t0 + k*dt."""

    t0: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)
        if self.dt <= 0:
            raise InvalidGrid("dt must be positive")
        if self.samples.ndim != 1 or self.samples.size < 2:
            raise InvalidGrid("need at least two samples")
        if not np.all(np.isfinite(self.samples)):
            raise InvalidGrid("samples must be finite")

    @property
    def times(self):
        return self.t0 + self.dt * np.arange(self.samples.size)

    def same_grid(self, other):
        return (self.t0 == other.t0 and self.dt == other.dt
                and self.samples.size == other.samples.size)

    def replace_samples(self, samples):
        return SampledSignal(self.t0, self.dt, samples)


@dataclass
class ComplexSpectrumGrid:
    """DFT of a SampledSignal, with the grid metadata needed to invert."""

    bin_frequencies: np.ndarray   # signed angular frequencies, rad/unit time
    coefficients: np.ndarray
    t0: float
    dt: float

    def __post_init__(self):
        if len(self.bin_frequencies) != len(self.coefficients):
            raise InvalidGrid("bin/coefficient length mismatch")


def sample(f, t0, dt, n):
    """Sample a function of time on a uniform grid of n points."""
    if dt <= 0 or n < 2:
        raise InvalidGrid(f"invalid grid: dt={dt}, n={n}")
    t = t0 + dt * np.arange(n)
    return SampledSignal(t0, dt, np.asarray(f(t), dtype=float))


def dft(s):
    n = s.samples.size
    freqs = 2.0 * np.pi * np.fft.fftfreq(n, s.dt)
    return ComplexSpectrumGrid(freqs, np.fft.fft(s.samples), s.t0, s.dt)


def idft(g):
    # Inputs in this library are conjugate-symmetric; the imaginary residue
    # is FFT round-off and is dropped.
    return SampledSignal(g.t0, g.dt, np.fft.ifft(g.coefficients).real)


def modulate(s, carrier, phase):
    """Multiply by cos or sin of carrier*t at the true grid abscissas."""
    if phase == "cosine":
        wave = np.cos(carrier * s.times)
    elif phase == "sine":
        wave = np.sin(carrier * s.times)
    else:
        raise ValueError(f"phase must be 'cosine' or 'sine', got {phase!r}")
    return s.replace_samples(s.samples * wave)


def lowpass(s, cutoff):
    """Ideal brick-wall low-pass: zero every DFT bin beyond the cutoff."""
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    g = dft(s)
    g.coefficients = np.where(np.abs(g.bin_frequencies) > cutoff,
                              0.0, g.coefficients)
    return idft(g)


def hilbert(s):
    """Discrete Hilbert transform via the +/-90 degree DFT multiplier.

    Positive-frequency bins are rotated by -j, negative by +j; the DC bin
    and (for even lengths) the Nyquist bin are zeroed.
    """
    g = dft(s)
    mult = -1j * np.sign(g.bin_frequencies)
    n = s.samples.size
    if n % 2 == 0:
        mult[n // 2] = 0.0
    g.coefficients = g.coefficients * mult
    return idft(g)


def _require_fine_grid(s):
    if s.dt >= MAX_GRID_DT:
        raise GridTooCoarse(
            f"dt={s.dt} cannot represent the 8pi/3 band edge; need dt < 3/8")


def decompose_quadrature(psi_s, cutoff=DEFAULT_CUTOFF):
    """Split the band-pass wavelet into baseband in-phase/quadrature parts.

    The mixer halves the baseband amplitude, so the products are doubled
    before filtering; reconstruct_quadrature is then unit-gain.
    """
    _require_fine_grid(psi_s)
    doubled = psi_s.replace_samples(2.0 * psi_s.samples)
    s_c = lowpass(modulate(doubled, CARRIER, "cosine"), cutoff)
    s_s = lowpass(modulate(doubled, CARRIER, "sine"), cutoff)
    return s_c, s_s


def reconstruct_quadrature(s_c, s_s):
    """Remodulate baseband components back onto the carrier."""
    if not s_c.same_grid(s_s):
        raise GridMismatch("s_c and s_s must share the sampling grid")
    t = s_c.times
    out = s_c.samples * np.cos(CARRIER * t) + s_s.samples * np.sin(CARRIER * t)
    return s_c.replace_samples(out)


def scale_from_wavelet(psi_s):
    """Recover the scaling function from the wavelet and its Hilbert pair."""
    _require_fine_grid(psi_s)
    t = psi_s.times
    out = (psi_s.samples * np.cos(CARRIER * t)
           + hilbert(psi_s).samples * np.sin(CARRIER * t))
    return psi_s.replace_samples(out)


def envelope(s):
    """Instantaneous amplitude sqrt(s^2 + H[s]^2) of the analytic signal."""
    h = hilbert(s).samples
    return s.replace_samples(np.sqrt(s.samples**2 + h**2))


def interior_slice(n, fraction=INTERIOR_FRACTION):
    """Index slice excluding the DFT wrap-around margins at both ends."""
    margin = int(round(0.5 * (1.0 - fraction) * n))
    return slice(margin, n - margin)
