"""One-dimensional two-channel filter bank on periodic signals.

Analysis splits an even-length signal x into half-length averages y and
details z:

    y_i = sqrt(2) * sum_t conj(h_t) x_{(2i+t) mod n}
    z_i = sqrt(2) * sum_t conj(g_t) x_{(2i+t) mod n}

with g the derived high-pass companion. Synthesis is the adjoint and the two
compose to the identity whenever the filter passes ``qmf_check``: the
downsampling operators are isometries with orthogonal ranges summing to the
whole space, which ``cuntz_check`` verifies on materialized matrices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LevelError, ParameterError, ShapeError, SizeError
from .filters import (
    DerivedFilter,
    FilterSpec,
    coefficients_of,
    derive_highpass,
)

SQRT2 = float(np.sqrt(2.0))


@dataclass(frozen=True)
class SubbandPair:
    """One analysis step's output: averages ``y`` and details ``z``."""

    y: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        y = np.atleast_1d(np.asarray(self.y))
        z = np.atleast_1d(np.asarray(self.z))
        if y.ndim != 1 or z.ndim != 1 or y.size != z.size:
            raise ShapeError("y and z must be 1-d arrays of equal length")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)


@dataclass(frozen=True)
class Pyramid1D:
    """Multilevel decomposition: details per level plus the final averages.

    ``details[l]`` holds the level-(l+1) details of length n / 2^(l+1);
    ``approx`` holds the deepest averages. Total coefficient count equals the
    original signal length.
    """

    details: tuple[np.ndarray, ...]
    approx: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "details", tuple(self.details))
        if not self.details:
            raise ShapeError("a pyramid needs at least one detail level")

    @property
    def levels(self) -> int:
        return len(self.details)

    @property
    def signal_length(self) -> int:
        return 2 * self.details[0].size

    def coefficient_count(self) -> int:
        return self.approx.size + sum(d.size for d in self.details)


@dataclass(frozen=True)
class SubbandMatrices:
    """Materialized periodized operators for an n-point signal.

    ``synthesis_low``/``synthesis_high`` are the n x n/2 upsampling isometries
    (entries sqrt(2) h_{(i-2j) mod n}); ``analysis_low``/``analysis_high`` the
    n/2 x n adjoints (entries sqrt(2) conj(h_{(j-2i) mod n})). Each column of a
    synthesis matrix is the previous column rolled by two rows, which is the
    slanted band structure the tests pin down.
    """

    n: int
    synthesis_low: np.ndarray
    synthesis_high: np.ndarray
    analysis_low: np.ndarray
    analysis_high: np.ndarray


@dataclass(frozen=True)
class CuntzReport:
    """Deviations of the five operator identities checked by ``cuntz_check``.

    ``isometry_low`` and ``isometry_high`` measure analysis . synthesis minus
    the identity on the half-size space for the matching channel;
    ``cross_low_high``/``cross_high_low`` the mixed products against zero; and
    ``completeness`` the sum of the two range projections against the identity
    on the full space.
    """

    n: int
    tolerance: float
    isometry_low: float
    isometry_high: float
    cross_low_high: float
    cross_high_low: float
    completeness: float
    max_deviation: float
    passed: bool


def _periodized(c: np.ndarray, start: int, n: int) -> np.ndarray:
    per = np.zeros(n, dtype=c.dtype)
    for t in range(c.size):
        per[(start + t) % n] += c[t]
    return per


def _analyze(x: np.ndarray, c: np.ndarray, start: int) -> np.ndarray:
    n = x.size
    half = n // 2
    idx = (2 * np.arange(half)[:, None] + start + np.arange(c.size)[None, :]) % n
    return SQRT2 * (x[idx] @ np.conj(c))


def _synthesize_into(out: np.ndarray, coeffs: np.ndarray, c: np.ndarray, start: int):
    m = coeffs.size
    n = out.size
    base = 2 * np.arange(m)
    for t in range(c.size):
        pos = (base + start + t) % n
        # positions are distinct for a fixed tap (stride-2 walk on an even ring)
        out[pos] += SQRT2 * c[t] * coeffs
    return out


def _checked_signal(x, length_for: FilterSpec | DerivedFilter) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(x))
    if arr.ndim != 1:
        raise SizeError("signals must be 1-d")
    c, _ = coefficients_of(length_for)
    if arr.size < 2 or arr.size % 2 != 0:
        raise SizeError(f"signal length {arr.size} must be even and at least 2")
    if arr.size < c.size:
        raise SizeError(
            f"signal length {arr.size} is shorter than the filter ({c.size} taps)"
        )
    return arr


def analysis_step(x, f: FilterSpec) -> SubbandPair:
    """Split x into averages and details (half length each).

    Requires len(x) even and at least the filter length. Indices wrap mod n,
    so the step is exactly invertible by ``synthesis_step`` for filters that
    pass ``qmf_check``.
    """
    arr = _checked_signal(x, f)
    g = derive_highpass(f)
    return SubbandPair(
        y=_analyze(arr, f.h, f.start),
        z=_analyze(arr, g.g, g.start),
    )


def synthesis_step(p: SubbandPair, f: FilterSpec) -> np.ndarray:
    """Merge an averages/details pair back into a double-length signal."""
    g = derive_highpass(f)
    m = p.y.size
    if m < 1:
        raise ShapeError("cannot synthesize from empty bands")
    dtype = np.result_type(p.y.dtype, p.z.dtype, f.h.dtype, np.float64)
    out = np.zeros(2 * m, dtype=dtype)
    _synthesize_into(out, np.asarray(p.y), f.h, f.start)
    _synthesize_into(out, np.asarray(p.z), g.g, g.start)
    return out


def max_levels(n: int, f: FilterSpec) -> int:
    """Largest admissible pyramid depth for an n-point signal."""
    c, _ = coefficients_of(f)
    floor = max(c.size, 2)
    lev = 0
    while n % 2 == 0 and n // 2 >= floor:
        n //= 2
        lev += 1
    return lev


def _check_levels(n: int, f: FilterSpec, n_lev: int):
    if not isinstance(n_lev, (int, np.integer)) or n_lev < 1:
        raise LevelError(f"level count must be a positive integer, got {n_lev!r}")
    c, _ = coefficients_of(f)
    floor = max(c.size, 2)
    if n % (1 << n_lev) != 0 or n >> n_lev < floor:
        raise LevelError(
            f"{n_lev} levels need a length divisible by {1 << n_lev} with "
            f"n/2^levels >= {floor}; length {n} admits {max_levels(n, f)}"
        )


def dwt1d(x, f: FilterSpec, n_lev: int) -> Pyramid1D:
    """Full pyramid: repeat ``analysis_step`` on the averages n_lev times.

    The depth must satisfy n / 2^n_lev >= max(L, 2) with every intermediate
    length even, otherwise a LevelError is raised.
    """
    arr = _checked_signal(x, f)
    _check_levels(arr.size, f, n_lev)
    details = []
    current = arr
    for _ in range(n_lev):
        pair = analysis_step(current, f)
        details.append(pair.z)
        current = pair.y
    return Pyramid1D(details=tuple(details), approx=current)


def idwt1d(p: Pyramid1D, f: FilterSpec) -> np.ndarray:
    """Invert ``dwt1d``. Detail lengths must chain consistently."""
    current = np.asarray(p.approx)
    for level in range(p.levels - 1, -1, -1):
        z = np.asarray(p.details[level])
        if z.size != current.size:
            raise ShapeError(
                f"detail level {level + 1} has length {z.size}, expected "
                f"{current.size}"
            )
        current = synthesis_step(SubbandPair(y=current, z=z), f)
    return current


def subband_matrices(f: FilterSpec, n: int) -> SubbandMatrices:
    """Materialize the four periodized operators for an n-point signal.

    Analysis matrices are built from their own index formula, not by
    transposing, so agreement with the conjugate transpose is a real check.
    """
    if n % 2 != 0 or n < 2:
        raise SizeError(f"n must be even and positive, got {n}")
    g = derive_highpass(f)
    hp = _periodized(f.h, f.start, n)
    gp = _periodized(g.g, g.start, n)
    half = n // 2
    i = np.arange(n)[:, None]
    j = np.arange(half)[None, :]
    synthesis_low = SQRT2 * hp[(i - 2 * j) % n]
    synthesis_high = SQRT2 * gp[(i - 2 * j) % n]
    ii = np.arange(half)[:, None]
    jj = np.arange(n)[None, :]
    analysis_low = SQRT2 * np.conj(hp[(jj - 2 * ii) % n])
    analysis_high = SQRT2 * np.conj(gp[(jj - 2 * ii) % n])
    return SubbandMatrices(
        n=n,
        synthesis_low=synthesis_low,
        synthesis_high=synthesis_high,
        analysis_low=analysis_low,
        analysis_high=analysis_high,
    )


def cuntz_check(f: FilterSpec, n: int, tol: float = 1e-10) -> CuntzReport:
    """Check the isometry, orthogonality and completeness identities at size n.

    Requires n >= 2L so the periodized taps do not self-overlap. A QMF filter
    drives every deviation to rounding level; h = (1, 0) fails with deviation
    1/2 or worse.
    """
    if not (np.isfinite(tol) and tol >= 0):
        raise ParameterError("tol must be a nonneg finite float")
    if n < 2 * f.length:
        raise SizeError(f"cuntz_check needs n >= 2L = {2 * f.length}, got {n}")
    m = subband_matrices(f, n)
    eye_half = np.eye(n // 2)
    eye_full = np.eye(n)
    dev = {
        "isometry_low": np.abs(m.analysis_low @ m.synthesis_low - eye_half).max(),
        "isometry_high": np.abs(m.analysis_high @ m.synthesis_high - eye_half).max(),
        "cross_low_high": np.abs(m.analysis_low @ m.synthesis_high).max(),
        "cross_high_low": np.abs(m.analysis_high @ m.synthesis_low).max(),
        "completeness": np.abs(
            m.synthesis_low @ m.analysis_low
            + m.synthesis_high @ m.analysis_high
            - eye_full
        ).max(),
    }
    worst = float(max(dev.values()))
    return CuntzReport(
        n=n,
        tolerance=float(tol),
        isometry_low=float(dev["isometry_low"]),
        isometry_high=float(dev["isometry_high"]),
        cross_low_high=float(dev["cross_low_high"]),
        cross_high_low=float(dev["cross_high_low"]),
        completeness=float(dev["completeness"]),
        max_deviation=worst,
        passed=worst <= tol,
    )
