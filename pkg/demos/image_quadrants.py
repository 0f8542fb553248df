"""Two-dimensional decomposition on a synthetic image: quadrant planes,
preview mosaic, and lossy coefficient quantization.

Run:  python3 demos/image_quadrants.py
Writes demo_gradient.pgm, demo_preview.pgm, and demo_quantized.pgm next to
the current working directory.
"""
import numpy as np

from wavekit import (
    Quantizer,
    builtin_filter,
    dwt2d,
    idwt2d,
    max_levels_2d,
    preview_layout,
    snap_to_lattice,
    write_pgm,
)

# A gradient with a bright square: smooth background plus an edge feature.
n = 64
yy, xx = np.mgrid[0:n, 0:n]
image = (xx + yy) * (255.0 / (2 * n - 2))
image[20:44, 20:44] = np.minimum(image[20:44, 20:44] + 90.0, 255.0)
write_pgm("demo_gradient.pgm", image)

f = builtin_filter("haar")
depth = max_levels_2d(image.shape, f)
print(f"{n}x{n} image, filter {f.name}, max depth {depth}")

p = dwt2d(image, f, 3)
print()
print("plane shapes per level")
for lev, d in enumerate(p.details, start=1):
    print(f"level {lev}: h/v/d {d.h.shape}")
print(f"approx: {p.approx.shape}")

write_pgm("demo_preview.pgm", preview_layout(p))
print()
print("wrote demo_preview.pgm (averages top-left, details clockwise)")

back = idwt2d(p, f)
print(f"lossless round trip max error: {np.abs(back - image).max():.2e}")

# Quantize: snap coefficients to a coarse lattice, then look at the damage.
for step in (2.0, 8.0, 32.0):
    snapped = snap_to_lattice(p, Quantizer(step=step))
    lossy = idwt2d(snapped, f)
    rmse = np.sqrt(((lossy - image) ** 2).mean())
    nonzero = sum(
        int(np.count_nonzero(t.h) + np.count_nonzero(t.v) + np.count_nonzero(t.d))
        for t in snapped.details
    ) + int(np.count_nonzero(snapped.approx))
    print(f"step {step:5.1f}: rmse {rmse:6.2f}, nonzero coeffs {nonzero}")

final = idwt2d(snap_to_lattice(p, Quantizer(step=8.0)), f)
write_pgm("demo_quantized.pgm", final)
print("wrote demo_quantized.pgm (step 8 reconstruction)")
