"""Deciding orthonormality of the translate family with the transfer
operator: the eigenvalue-1 multiplicity is the whole story.

Run:  python3 demos/orthonormal_or_not.py
"""
import numpy as np

from wavekit import (
    BUILTIN_NAMES,
    autocorrelation,
    build_transfer_matrix,
    builtin_filter,
    format_verdict,
    lawton_test,
)

for name in BUILTIN_NAMES:
    f = builtin_filter(name)
    w = autocorrelation(f)
    tm = build_transfer_matrix(f)
    verdict = lawton_test(f)
    print(f"=== {name} ===")
    print(f"autocorrelation lags {w.min_lag}..{-w.min_lag}: {np.round(w.w, 4)}")
    print(f"transfer matrix is {tm.matrix.shape[0]}x{tm.matrix.shape[1]}")
    print(format_verdict(verdict))
    print()

print("reading the verdicts")
print("--------------------")
print("haar and db4 have a simple eigenvalue 1, so their translate families")
print("are orthonormal bases. stretched_haar passes every quadrature-mirror")
print("identity yet doubles the eigenvalue-1 eigenspace: its translates only")
print("form a tight frame. The subband machinery cannot tell them apart;")
print("this spectral test can.")
