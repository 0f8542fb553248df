"""Finite low-pass/high-pass filter pairs and their orthogonality checks.

A filter is a finitely supported coefficient sequence ``h`` starting at an
explicit integer index. The builtin catalog normalizes coefficients so they
sum to 1, which puts the low-pass frequency symbol at m(1) = 1 and makes the
downsampling operators built in :mod:`wavekit.subband` isometries once the
lag-orthogonality conditions

    sum_i conj(h_i) h_{i+2k} = 1/2 * delta_{k,0}

hold. ``qmf_check`` measures exactly those residuals.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CatalogError, DomainError, ParameterError

#: |sum(h) - 1| tolerance enforced when a spec is flagged ``normalized``.
SUM_TOLERANCE = 1e-12

#: How far |z| may sit from 1 in ``symbol_eval``.
UNIT_CIRCLE_TOLERANCE = 1e-9


def _frozen_coeffs(values, what: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(values))
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError(f"{what} must be a nonempty 1-d sequence")
    if not np.issubdtype(arr.dtype, np.inexact):
        arr = arr.astype(np.float64)
    else:
        arr = arr.copy()
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{what} must be finite")
    if not np.any(arr != 0):
        raise DomainError(f"{what} must not be identically zero")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class FilterSpec:
    """A named low-pass filter: coefficients ``h`` supported on
    ``start .. start + len(h) - 1``.

    ``normalized=True`` asserts sum(h) = 1 (checked to 1e-12 at construction);
    pass ``normalized=False`` for experimental filters with other sums.
    """

    name: str
    h: np.ndarray
    start: int = 0
    normalized: bool = True

    def __post_init__(self):
        arr = _frozen_coeffs(self.h, "filter coefficients")
        object.__setattr__(self, "h", arr)
        object.__setattr__(self, "start", int(self.start))
        if self.normalized and abs(arr.sum() - 1.0) > SUM_TOLERANCE:
            raise DomainError(
                f"filter {self.name!r} is flagged normalized but sum(h) = "
                f"{arr.sum()!r}"
            )

    @property
    def length(self) -> int:
        return self.h.size

    @property
    def stop(self) -> int:
        """One past the last support index."""
        return self.start + self.h.size

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.stop)


@dataclass(frozen=True)
class DerivedFilter:
    """High-pass companion coefficients ``g`` with their starting index."""

    g: np.ndarray
    start: int

    def __post_init__(self):
        arr = _frozen_coeffs(self.g, "derived coefficients")
        object.__setattr__(self, "g", arr)
        object.__setattr__(self, "start", int(self.start))

    @property
    def length(self) -> int:
        return self.g.size

    @property
    def stop(self) -> int:
        return self.start + self.g.size


@dataclass(frozen=True)
class QmfReport:
    """Residuals of the lag-orthogonality conditions.

    Attributes:
        lags: Lags k with support overlap (symmetric around 0).
        residuals: sum_i conj(h_i) h_{i+2k} - delta_{k,0}/2 per lag.
        max_residual: Largest residual magnitude.
        tolerance: Threshold the verdict was taken against.
        passed: True when max_residual <= tolerance.
    """

    lags: np.ndarray
    residuals: np.ndarray
    max_residual: float
    tolerance: float
    passed: bool


def _builtin_catalog() -> dict[str, FilterSpec]:
    s3 = np.sqrt(3.0)
    return {
        "haar": FilterSpec("haar", np.array([0.5, 0.5]), 0),
        "stretched_haar": FilterSpec(
            "stretched_haar", np.array([0.5, 0.0, 0.0, 0.5]), 0
        ),
        "db4": FilterSpec(
            "db4",
            np.array([(1 + s3) / 8, (3 + s3) / 8, (3 - s3) / 8, (1 - s3) / 8]),
            0,
        ),
    }


_BUILTINS = _builtin_catalog()

#: Names available through :func:`builtin_filter`.
BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin_filter(name: str) -> FilterSpec:
    """Return a catalog filter by name.

    haar is the two-tap averaging pair, db4 the four-tap minimum-phase filter
    with h_0 > h_3, and stretched_haar the classical orthogonality
    counterexample (0.5, 0, 0, 0.5).
    """
    try:
        return _BUILTINS[name]
    except KeyError:
        raise CatalogError(
            f"unknown filter {name!r}; builtins are {', '.join(BUILTIN_NAMES)}"
        ) from None


def coefficients_of(f: FilterSpec | DerivedFilter) -> tuple[np.ndarray, int]:
    """(coefficients, start) for either a low-pass spec or a derived high-pass."""
    if isinstance(f, FilterSpec):
        return f.h, f.start
    if isinstance(f, DerivedFilter):
        return f.g, f.start
    raise ParameterError(f"expected FilterSpec or DerivedFilter, got {type(f).__name__}")


def derive_highpass(f: FilterSpec | DerivedFilter) -> DerivedFilter:
    """High-pass companion g_k = (-1)^k conj(h_{1-k}).

    The support of g is ``2 - start - L .. 1 - start``. Applying the
    reflection twice returns the negated input (the convention is an
    involution up to sign), which is exercised in the tests.
    """
    h, start = coefficients_of(f)
    gstart = 2 - start - h.size
    ks = np.arange(gstart, gstart + h.size)
    # h_{1-k} runs through h in reverse as k increases.
    g = np.where(ks % 2 == 0, 1.0, -1.0) * np.conj(h[::-1])
    return DerivedFilter(g, gstart)


def qmf_check(f: FilterSpec | DerivedFilter, tol: float = 1e-12) -> QmfReport:
    """Evaluate the lag-orthogonality residuals of ``f``.

    Residuals are reported for every lag k with support overlap, i.e.
    |k| <= (L-1)//2; other lags vanish structurally.
    """
    if not (np.isfinite(tol) and tol >= 0):
        raise ParameterError("tol must be a nonneg finite float")
    h, _ = coefficients_of(f)
    kmax = (h.size - 1) // 2
    lags = np.arange(-kmax, kmax + 1)
    residuals = np.empty(lags.size, dtype=np.result_type(h, np.complex128))
    for out, k in enumerate(lags):
        lo = max(0, -2 * k)
        hi = min(h.size, h.size - 2 * k)
        acc = np.vdot(h[lo:hi], h[lo + 2 * k : hi + 2 * k])
        residuals[out] = acc - (0.5 if k == 0 else 0.0)
    if np.isrealobj(h):
        residuals = residuals.real
    max_residual = float(np.abs(residuals).max())
    return QmfReport(
        lags=lags,
        residuals=residuals,
        max_residual=max_residual,
        tolerance=float(tol),
        passed=max_residual <= tol,
    )


def symbol_eval(f: FilterSpec | DerivedFilter, which: str, z):
    """Evaluate the frequency symbol sum_k c_k z^k on the unit circle.

    ``which`` selects the coefficient set: "low" uses the filter itself,
    "high" its derived high-pass companion. ``z`` may be a complex scalar or
    array; every entry must satisfy ||z| - 1| <= 1e-9.
    """
    if which == "low":
        c, start = coefficients_of(f)
    elif which == "high":
        d = derive_highpass(f)
        c, start = d.g, d.start
    else:
        raise ParameterError(f"which must be 'low' or 'high', got {which!r}")
    zarr = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(np.abs(zarr) - 1.0) > UNIT_CIRCLE_TOLERANCE):
        raise DomainError("symbol_eval is defined on the unit circle only")
    # Horner on descending powers, then shift by the starting index.
    acc = np.zeros_like(zarr)
    for coeff in c[::-1]:
        acc = acc * zarr + coeff
    acc = acc * zarr**start
    if np.isscalar(z) or np.ndim(z) == 0:
        return complex(acc)
    return acc
