"""One-dimensional pyramid walkthrough: split a noisy signal into bands,
look at where the energy lands, and put it back together.

Run:  python3 demos/pyramid_1d.py
"""
import numpy as np

from wavekit import builtin_filter, dwt1d, idwt1d, max_levels, subband_matrices

rng = np.random.default_rng(7)
n = 256
t = np.arange(n) / n
signal = np.sin(2 * np.pi * 5 * t) + 0.4 * np.sin(2 * np.pi * 29 * t)
signal += 0.05 * rng.standard_normal(n)

f = builtin_filter("db4")
depth = max_levels(n, f)
print(f"signal of {n} samples, filter {f.name}, max depth {depth}")

p = dwt1d(signal, f, depth)
total = (signal**2).sum()
print()
print("band energies (fraction of total)")
print("---------------------------------")
for lev, d in enumerate(p.details, start=1):
    frac = (d**2).sum() / total
    print(f"detail level {lev} ({d.size:3d} coeffs): {frac:7.4f}")
frac = (p.approx**2).sum() / total
print(f"approx  level {p.levels} ({p.approx.size:3d} coeffs): {frac:7.4f}")
print(f"coefficient count {p.coefficient_count()} == signal length {n}")

back = idwt1d(p, f)
print()
print(f"reconstruction max error: {np.abs(back - signal).max():.2e}")

# Zeroing the finest detail band is a crude denoiser.
quiet = dwt1d(signal, f, depth)
details = list(quiet.details)
details[0] = np.zeros_like(details[0])
from wavekit import Pyramid1D  # noqa: E402

smoothed = idwt1d(Pyramid1D(details=tuple(details), approx=quiet.approx), f)
residual = np.abs(smoothed - signal).mean()
print(f"after dropping the finest band, mean change {residual:.4f} per sample")

# The same split as explicit matrices: slanted rows, adjoint analysis.
m = subband_matrices(f, 8)
print()
print("synthesis_low for n=8 (rows x cols = 8 x 4), sqrt(2) h down the bands:")
with np.printoptions(precision=3, suppress=True):
    print(m.synthesis_low)
