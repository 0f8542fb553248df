"""Continuous wavelet analysis on sampled data.

The analyzing family is psi_{r,s}(x) = r^{-1/2} psi((x - s)/r) for scale
r > 0 and shift s. ``cwt`` computes trapezoidal inner products <psi_{r,s}|f>
over a geometric scale grid and an arithmetic shift grid, and ``icwt``
inverts them through the measure dr ds / r^2 weighted by the admissibility
constant

    C = integral |psi_hat(w)|^2 / |w| dw,
    psi_hat(t) = integral e^{-ixt} psi(x) dx,

estimated by ``admissibility`` from an FFT on a padded window. The scale
grid covers r > 0 only; for a real-valued wavelet the negative-scale half of
the inversion measure contributes the same amount, so ``icwt`` folds it in
as a factor 2. ``dyadic_sample`` and ``parseval_ratio`` cover the dyadic
family psi_{j,k}(x) = 2^{j/2} psi(2^j x - k) used by discrete decompositions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .cascade import DyadicFunction, wavelet_function
from .errors import (
    AdmissibilityError,
    CatalogError,
    DomainError,
    ParameterError,
    ResolutionError,
    ShapeError,
    SizeError,
)
from .filters import FilterSpec

#: Zero-mean gate: |integral psi| must not exceed this times ||psi||_1.
MEAN_TOLERANCE = 1e-6

#: Default samples across the wavelet support when estimating admissibility.
ADMISSIBILITY_SAMPLES = 1024

#: Half-width of the padded FFT window, in units of x (at least this, and at
#: least twice the support width, so the frequency grid resolves the spectrum).
ADMISSIBILITY_RADIUS = 64.0


@dataclass(frozen=True)
class SampledFunction:
    """Complex or real samples on a uniform grid x_min + k*dx."""

    x_min: float
    dx: float
    values: np.ndarray

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.values))
        if v.ndim != 1:
            raise ShapeError("sampled function values must be 1-d")
        if v.size == 0:
            raise SizeError("sampled function needs at least one sample")
        if not (np.isfinite(self.dx) and self.dx > 0):
            raise ParameterError(f"grid step must be positive, got {self.dx!r}")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "x_min", float(self.x_min))
        object.__setattr__(self, "dx", float(self.dx))

    @property
    def size(self) -> int:
        return self.values.size

    @property
    def x_max(self) -> float:
        return self.x_min + self.dx * (self.values.size - 1)

    @property
    def xs(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.values.size)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.values.size, self.dx)
        if w.size > 1:
            w[0] *= 0.5
            w[-1] *= 0.5
        return w

    def norm(self) -> float:
        """Trapezoidal L2 norm."""
        return float(
            np.sqrt((np.abs(self.values) ** 2 * self.trapezoid_weights()).sum().real)
        )


@dataclass
class AnalyzingWavelet:
    """A wavelet given by a vectorized evaluator on a known support.

    ``support`` is the closed interval outside which the wavelet is zero or
    negligibly small (catalog entries truncate where |psi| drops below
    1e-10 of its peak). The admissibility constant is computed on demand and
    cached; inadmissible wavelets (nonzero mean) stay constructible so the
    failure surfaces where the constant is actually needed.
    """

    name: str
    support: tuple[float, float]
    fn: Callable[[np.ndarray], np.ndarray]
    #: For step-interpolated (sampled) wavelets, the native sample step;
    #: quadrature grids align to it so piecewise-constant sums stay exact.
    native_dx: float | None = None
    _c: float | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        lo, hi = self.support
        if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
            raise ParameterError(f"support must be a finite interval, got {self.support!r}")
        self.support = (float(lo), float(hi))

    @property
    def width(self) -> float:
        return self.support[1] - self.support[0]

    def evaluate(self, x) -> np.ndarray:
        return np.asarray(self.fn(np.asarray(x, dtype=float)))


def _mexican_hat(x: np.ndarray) -> np.ndarray:
    return (1.0 - x * x) * np.exp(-0.5 * x * x)


def _haar_psi(x: np.ndarray) -> np.ndarray:
    up = ((x >= 0.0) & (x < 0.5)).astype(float)
    down = ((x >= 0.5) & (x < 1.0)).astype(float)
    return up - down


def _gaussian(x: np.ndarray) -> np.ndarray:
    return np.exp(-0.5 * x * x)


# The gaussian has nonzero mean, hence no finite admissibility constant; it
# is in the catalog so rejection paths stay exercised end to end.
_CATALOG: dict[str, tuple[tuple[float, float], Callable]] = {
    "mexican_hat": ((-8.0, 8.0), _mexican_hat),
    "haar_psi": ((0.0, 1.0), _haar_psi),
    "gaussian": ((-8.0, 8.0), _gaussian),
}

WAVELET_NAMES = tuple(sorted(_CATALOG))


def named_wavelet(name: str) -> AnalyzingWavelet:
    try:
        support, fn = _CATALOG[name]
    except KeyError:
        known = ", ".join(WAVELET_NAMES)
        raise CatalogError(f"unknown wavelet {name!r} (try one of: {known})") from None
    return AnalyzingWavelet(name=name, support=support, fn=fn)


def wavelet_from_samples(sf: SampledFunction, name: str = "sampled") -> AnalyzingWavelet:
    """Wrap uniform samples as a wavelet, interpolated as a step function.

    Each sample value extends over [x_k, x_k + dx); everything outside the
    sampled interval evaluates to zero.
    """
    vals = sf.values

    def evaluate(x: np.ndarray) -> np.ndarray:
        idx = np.floor((x - sf.x_min) / sf.dx).astype(int)
        ok = (idx >= 0) & (idx < vals.size)
        out = np.zeros(x.shape, dtype=vals.dtype)
        out[ok] = vals[idx[ok]]
        return out

    return AnalyzingWavelet(
        name=name,
        support=(sf.x_min, sf.x_max + sf.dx),
        fn=evaluate,
        native_dx=sf.dx,
    )


def wavelet_from_dyadic(d: DyadicFunction, name: str | None = None) -> AnalyzingWavelet:
    """Bridge from the cascade module: use a refined psi (or phi) here."""
    sf = SampledFunction(x_min=d.x0, dx=d.step, values=d.values)
    return wavelet_from_samples(sf, name=name or f"dyadic-{d.kind}")


def wavelet_from_filter(f: FilterSpec, resolution: int) -> AnalyzingWavelet:
    """The cascade-built mother wavelet of a discrete filter, ready for cwt."""
    return wavelet_from_dyadic(
        wavelet_function(f, resolution), name=f"cascade:{f.name}:{resolution}"
    )


def admissibility(psi: AnalyzingWavelet, refine: int = 1) -> float:
    """Estimate C = integral |psi_hat(w)|^2/|w| dw by FFT quadrature.

    The wavelet is sampled at roughly dx = width/(1024*refine) on a window
    padded by max(64, 2*width) on each side of its support, transformed, and
    the integrand is trapezoid-summed over the negative and positive
    frequency half-axes separately, excluding the w = 0 bin. ``refine``
    doubles (etc.) the sampling density for stability checks. The result for
    refine=1 is cached on the wavelet.

    For sampled (step-interpolated) wavelets the grid is snapped to an
    integer number of points per native step and anchored at the support
    start, so the Riemann mean and the spectrum agree exactly with the
    underlying step function instead of aliasing against its lattice.

    Raises AdmissibilityError when the mean is not numerically zero (the
    integral diverges at w = 0) and ResolutionError when the spectrum has not
    decayed by the Nyquist frequency (the estimate would be meaningless).
    """
    if not isinstance(refine, (int, np.integer)) or refine < 1:
        raise ParameterError(f"refine must be a positive integer, got {refine!r}")
    if psi._c is not None and refine == 1:
        return psi._c

    lo, hi = psi.support
    width = hi - lo
    target = width / (ADMISSIBILITY_SAMPLES * refine)
    if psi.native_dx is not None and psi.native_dx > 0.0:
        per_step = max(1, int(np.ceil(psi.native_dx / target)))
        dx = psi.native_dx / per_step
    else:
        dx = target

    # Zero-mean gate on the support itself (Riemann sums).
    xs = lo + dx * np.arange(int(round(width / dx)))
    vals = psi.evaluate(xs)
    l1 = float(np.abs(vals).sum() * dx)
    if l1 == 0.0:
        raise AdmissibilityError("wavelet is identically zero on its support")
    mean = abs(complex(vals.sum() * dx))
    if mean > MEAN_TOLERANCE * l1:
        raise AdmissibilityError(
            f"wavelet {psi.name!r} has nonzero mean ({mean:.3g}); the "
            "admissibility integral diverges at zero frequency"
        )

    pad = int(np.ceil(max(ADMISSIBILITY_RADIUS, 2.0 * width) / dx))
    n = xs.size + 2 * pad
    window = (lo - pad * dx) + dx * np.arange(n)
    spectrum = dx * np.fft.fft(psi.evaluate(window))
    w = 2.0 * np.pi * np.fft.fftfreq(n, d=dx)
    power = np.abs(spectrum) ** 2
    integrand = power / np.where(w == 0.0, 1.0, np.abs(w))
    integrand[w == 0.0] = 0.0

    neg = w < 0.0
    pos = w > 0.0
    order_n = np.argsort(w[neg])
    order_p = np.argsort(w[pos])
    total = float(
        np.trapezoid(integrand[neg][order_n], w[neg][order_n])
        + np.trapezoid(integrand[pos][order_p], w[pos][order_p])
    )
    if not np.isfinite(total) or total <= 0.0:
        raise AdmissibilityError(
            f"admissibility quadrature for {psi.name!r} returned {total!r}"
        )

    w_nyquist = float(np.abs(w).max())
    tail = np.abs(w) > 0.75 * w_nyquist
    tail_part = float(integrand[tail].sum() * (2.0 * np.pi / (n * dx)))
    if tail_part > 0.02 * total:
        raise ResolutionError(
            f"spectrum of {psi.name!r} has not decayed at the sampling "
            "Nyquist frequency; refine the grid"
        )

    if refine == 1:
        psi._c = total
    return total


@dataclass(frozen=True)
class CwtGrid:
    """Strictly positive, increasing scales and increasing shifts."""

    scales: np.ndarray
    shifts: np.ndarray

    def __post_init__(self):
        r = np.atleast_1d(np.asarray(self.scales, dtype=float))
        s = np.atleast_1d(np.asarray(self.shifts, dtype=float))
        if r.size == 0 or s.size == 0:
            raise SizeError("cwt grid needs at least one scale and one shift")
        if not np.all(np.isfinite(r)) or not np.all(np.isfinite(s)):
            raise DomainError("cwt grid values must be finite")
        if np.any(r <= 0.0):
            raise DomainError("scales must be strictly positive")
        if np.any(np.diff(r) <= 0.0) or np.any(np.diff(s) <= 0.0):
            raise DomainError("scales and shifts must be strictly increasing")
        object.__setattr__(self, "scales", r)
        object.__setattr__(self, "shifts", s)

    @property
    def shape(self) -> tuple[int, int]:
        return self.scales.size, self.shifts.size


def geometric_scales(r_min: float, r_max: float, voices: int = 8) -> np.ndarray:
    """Geometric scale ladder with ``voices`` steps per octave (endpoints in)."""
    if not (np.isfinite(r_min) and r_min > 0 and np.isfinite(r_max)):
        raise DomainError("scale bounds must be finite and positive")
    if r_max < r_min:
        raise DomainError("r_max must be at least r_min")
    if not isinstance(voices, (int, np.integer)) or voices < 1:
        raise ParameterError(f"voices must be a positive integer, got {voices!r}")
    if r_max == r_min:
        return np.array([float(r_min)])
    count = int(np.ceil(voices * np.log2(r_max / r_min))) + 1
    return np.geomspace(r_min, r_max, max(count, 2))


@dataclass(frozen=True)
class CwtCoefficients:
    """<psi_{r,s}|f> over a grid, plus f's own grid for later inversion."""

    matrix: np.ndarray
    grid: CwtGrid
    x_min: float
    dx: float
    n_samples: int

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.shape != self.grid.shape:
            raise ShapeError(
                f"coefficient matrix shape {m.shape} does not match grid "
                f"shape {self.grid.shape}"
            )
        object.__setattr__(self, "matrix", m)

    @property
    def scales(self) -> np.ndarray:
        return self.grid.scales

    @property
    def shifts(self) -> np.ndarray:
        return self.grid.shifts

    def sample_grid(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n_samples)


def _scaled_kernel(
    psi: AnalyzingWavelet, xs: np.ndarray, shifts: np.ndarray, r: float
) -> np.ndarray:
    """Matrix of psi_{r,s}(x) with shifts down the rows, samples across."""
    return psi.evaluate((xs[None, :] - shifts[:, None]) / r) / math.sqrt(r)


def cwt(f: SampledFunction, psi: AnalyzingWavelet, grid: CwtGrid) -> CwtCoefficients:
    """Trapezoidal <psi_{r,s}|f> for every grid point.

    Raises ResolutionError when any scale squeezes the wavelet support onto
    fewer than 4 grid steps (the quadrature cannot see the oscillation).
    """
    smallest = float(grid.scales[0])
    if smallest * psi.width < 4.0 * f.dx:
        raise ResolutionError(
            f"scale {smallest:g} leaves fewer than 4 samples across the "
            f"wavelet support (dx = {f.dx:g}); shrink dx or raise the scale"
        )
    weighted = f.values * f.trapezoid_weights()
    xs = f.xs
    rows = []
    for r in grid.scales:
        kernel = _scaled_kernel(psi, xs, grid.shifts, float(r))
        rows.append(np.conj(kernel) @ weighted)
    return CwtCoefficients(
        matrix=np.stack(rows),
        grid=grid,
        x_min=f.x_min,
        dx=f.dx,
        n_samples=f.size,
    )


def _trapezoid_weights_of(points: np.ndarray) -> np.ndarray:
    """Composite trapezoid weights for samples at arbitrary increasing points.

    A single point gets weight zero: the quadrature is degenerate and the
    caller sees a zero integral rather than an arbitrary scale factor.
    """
    if points.size < 2:
        return np.zeros(points.size)
    w = np.zeros(points.size)
    w[1:-1] = 0.5 * (points[2:] - points[:-2])
    w[0] = 0.5 * (points[1] - points[0])
    w[-1] = 0.5 * (points[-1] - points[-2])
    return w


def icwt(c: CwtCoefficients, psi: AnalyzingWavelet) -> SampledFunction:
    """Invert ``cwt`` output on its source grid.

    Double trapezoid over the grid with measure dr ds / r^2, scaled by
    2 / C: the grid holds positive scales only, and for a real-valued
    wavelet the omitted negative-scale half contributes exactly the same
    amount. Accuracy is set by the grid; a single-scale grid yields the zero
    function (degenerate quadrature) rather than an error.
    """
    constant = admissibility(psi)
    xs = c.sample_grid()
    wr = _trapezoid_weights_of(c.scales)
    ws = _trapezoid_weights_of(c.shifts)
    out = np.zeros(xs.size, dtype=c.matrix.dtype)
    for i, r in enumerate(c.scales):
        kernel = _scaled_kernel(psi, xs, c.shifts, float(r))
        out += (wr[i] / (r * r)) * ((c.matrix[i] * ws) @ kernel)
    out *= 2.0 / constant
    return SampledFunction(x_min=c.x_min, dx=c.dx, values=out)


def _grid_points(grid) -> tuple[float, float, int]:
    """Accept a SampledFunction or a uniform 1-d array of sample points."""
    if isinstance(grid, SampledFunction):
        return grid.x_min, grid.dx, grid.size
    xs = np.atleast_1d(np.asarray(grid, dtype=float))
    if xs.ndim != 1 or xs.size < 2:
        raise ShapeError("grid must be a 1-d array of at least two points")
    steps = np.diff(xs)
    dx = float(steps[0])
    if dx <= 0 or not np.allclose(steps, dx, rtol=1e-9, atol=0.0):
        raise DomainError("grid points must be uniformly increasing")
    return float(xs[0]), dx, xs.size


def dyadic_sample(psi: AnalyzingWavelet, j: int, k: int, grid) -> SampledFunction:
    """Samples of psi_{j,k}(x) = 2^{j/2} psi(2^j x - k) on the given grid.

    This is the unitary scale-and-shift action at scale 2^-j and shift
    k 2^-j, so every (j, k) has the same L2 norm as psi itself.
    """
    x_min, dx, n = _grid_points(grid)
    xs = x_min + dx * np.arange(n)
    scale = 2.0 ** float(j)
    values = math.sqrt(scale) * psi.evaluate(scale * xs - k)
    return SampledFunction(x_min=x_min, dx=dx, values=values)


def _auto_k_range(
    psi: AnalyzingWavelet, j: int, x_lo: float, x_hi: float
) -> tuple[int, int]:
    """Smallest k interval whose psi_{j,k} supports can touch [x_lo, x_hi]."""
    lo, hi = psi.support
    scale = 2.0 ** float(j)
    return int(np.floor(scale * x_lo - hi)) - 1, int(np.ceil(scale * x_hi - lo)) + 1


def parseval_ratio(
    f: SampledFunction,
    psi: AnalyzingWavelet,
    j_range: tuple[int, int],
    k_range: tuple[int, int] | None = None,
) -> float:
    """sum_{j,k} |<psi_{j,k}|f>|^2 / ||f||^2 with Riemann-sum inner products.

    ``j_range`` and ``k_range`` are inclusive; ``k_range=None`` covers, for
    each j, every k whose wavelet support meets f's grid. For a wavelet
    family that resolves the identity the ratio climbs to 1 as the ranges
    grow; each term is nonnegative, so it is monotone in the ranges. Empty
    ranges give 0.
    """
    norm_sq = float((np.abs(f.values) ** 2).sum() * f.dx)
    if norm_sq == 0.0:
        raise DomainError("parseval ratio needs a nonzero function")
    j_lo, j_hi = int(j_range[0]), int(j_range[1])
    total = 0.0
    xs = f.xs
    for j in range(j_lo, j_hi + 1):
        if k_range is None:
            k_lo, k_hi = _auto_k_range(psi, j, float(xs[0]), float(xs[-1]))
        else:
            k_lo, k_hi = int(k_range[0]), int(k_range[1])
        if k_hi < k_lo:
            continue
        scale = 2.0 ** float(j)
        amp = math.sqrt(scale) * f.dx
        scaled_xs = scale * xs
        for block_lo in range(k_lo, k_hi + 1, 256):
            ks = np.arange(block_lo, min(block_lo + 256, k_hi + 1))
            block = psi.evaluate(scaled_xs[None, :] - ks[:, None])
            coeffs = amp * (np.conj(block) @ f.values)
            total += float((np.abs(coeffs) ** 2).sum())
    return total / norm_sq
