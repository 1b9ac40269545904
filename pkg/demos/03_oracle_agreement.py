"""Closed forms vs direct numerical inversion of the spectra.

The inverse-Fourier integrals are evaluated by composite Gauss-Legendre
quadrature, split at the spectral branch points; the closed forms should
agree to well below the quadrature tolerance everywhere, including at the
removable singularities.
"""

import numpy as np

from meyerwave import phi, psi, phi_oracle, psi_oracle, singular_points
from meyerwave.quadrature import QuadratureConfig

cfg = QuadratureConfig(abs_tolerance=1e-10)

t = np.concatenate([np.linspace(-8.0, 8.0, 801),
                    np.array(singular_points().all_points())])
phi_err = np.abs(phi(t) - np.array([phi_oracle(v, cfg) for v in t]))
psi_err = np.abs(psi(t) - np.array([psi_oracle(v, cfg) for v in t]))

print(f"grid: {len(t)} points on [-8, 8] plus the 9 singular points")
print(f"max |phi - phi_oracle| = {np.max(phi_err):.3e}")
print(f"max |psi - psi_oracle| = {np.max(psi_err):.3e}")
print()
print("spot checks:")
for v in (0.0, 0.75, 2.0):
    print(f"  phi({v}) = {phi(v):+.12f}   oracle {phi_oracle(v, cfg):+.12f}")
for v in (0.5, 1.0, 3.25):
    print(f"  psi({v}) = {psi(v):+.12f}   oracle {psi_oracle(v, cfg):+.12f}")
