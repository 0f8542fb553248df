"""Cascade refinement: from integer samples to a dense graph of the scaling
function and its wavelet.

Run:  python3 demos/scaling_functions.py
"""
import numpy as np

from wavekit import (
    DegeneracyError,
    builtin_filter,
    integer_values,
    scaling_function,
    wavelet_function,
)

print("integer lattice values")
print("----------------------")
for name in ("haar", "db4"):
    f = builtin_filter(name)
    v = integer_values(f)
    print(f"{name:>5}: {np.round(v, 6)}")

# The stretched pair is a legal orthogonality filter whose lattice problem
# is degenerate: the eigenvalue-1 eigenspace is two dimensional, matching a
# discontinuous limit that pointwise samples cannot represent.
try:
    integer_values(builtin_filter("stretched_haar"))
except DegeneracyError as exc:
    print(f"stretched_haar: degenerate (eigenspace dimension {exc.dimension})")

print()
print("refinement: doubling the grid keeps all old samples")
print("---------------------------------------------------")
f = builtin_filter("db4")
for J in (0, 2, 4, 8):
    phi = scaling_function(f, J)
    print(
        f"J={J}: {phi.values.size:5d} samples on [0, 3], "
        f"integral {phi.riemann_integral():+.8f}, "
        f"min {phi.values.min():+.4f}, max {phi.values.max():+.4f}"
    )

print()
print("the wavelet inherits everything through the high-pass taps")
print("-----------------------------------------------------------")
psi = wavelet_function(f, 8)
norm_sq = (psi.values**2).sum() * psi.step
print(
    f"psi on [{psi.x0}, {psi.xs[-1]}]: mean {psi.riemann_integral():+.1e}, "
    f"norm^2 {norm_sq:.6f}"
)

# Shift orthonormality, estimated straight from the samples.
phi = scaling_function(f, 8)
v = phi.values
one = 1 << 8
print()
print("<phi, phi(. - k)> by Riemann sum")
for k in (0, 1, 2):
    shifted = np.zeros_like(v)
    if k:
        shifted[k * one:] = v[: v.size - k * one]
    else:
        shifted = v
    print(f"k={k}: {float((v * shifted).sum() * phi.step):+.6f}")
