"""Frequency-domain picture: supports, band centre, partition of unity.

The scaling function lives on [0, 4pi/3]; the wavelet on [2pi/3, 8pi/3]
with band centre 5pi/3.  Their squared magnitudes tile frequency with the
constant 1/(2pi) across the shared transition band.
"""

import numpy as np

from meyerwave import scale_spectrum, wavelet_spectrum_magnitude
from meyerwave.spectral import W_LO, W_MID, W_HI

w = np.linspace(0.0, 10.0, 20001)
phi_w = scale_spectrum(w)
psi_w = wavelet_spectrum_magnitude(w)

phi_support = w[phi_w > 0]
psi_support = w[psi_w > 0]
print(f"scale spectrum support:   [0, {phi_support[-1]:.6f}]"
      f"   (4pi/3 = {W_MID:.6f})")
print(f"wavelet spectrum support: [{psi_support[0]:.6f}, "
      f"{psi_support[-1]:.6f}]   (2pi/3 = {W_LO:.6f}, 8pi/3 = {W_HI:.6f})")
centre = 0.5 * (psi_support[0] + psi_support[-1])
print(f"wavelet band centre: {centre:.6f}   (5pi/3 = {5 * np.pi / 3:.6f})")

band = np.linspace(W_LO, W_MID, 5001)
tiling = scale_spectrum(band)**2 + wavelet_spectrum_magnitude(band)**2
print(f"partition of unity on the transition band: "
      f"max |Phi^2 + |Psi|^2 - 1/(2pi)| = "
      f"{np.max(np.abs(tiling - 1 / (2 * np.pi))):.3e}")

product = (np.sqrt(2 * np.pi) * scale_spectrum(w / 2)
           * scale_spectrum(w - 2 * np.pi))
print(f"product identity sqrt(2pi)*Phi(w/2)*Phi(w-2pi) = |Psi(w)|: "
      f"max deviation {np.max(np.abs(product - psi_w)):.3e}")
