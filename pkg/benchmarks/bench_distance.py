"""Compare the two codeword-scan kernels on real generator matrices.

Runs the compiled odometer scan and the chunked vectorized scan over
the same matrices and prints wall times and the speedup.  The compiled
path pays a one-off compilation cost on first call, so it is warmed up
before timing.

    python3 benchmarks/bench_distance.py

Set MADICS_NO_NUMBA=1 to confirm the package works without the
compiled path (this script then reports the vectorized times only).
"""

import time

from madics._kernels import HAVE_NUMBA, numba_disabled_by_env, scan_njit, scan_numpy
from madics.analysis import generator_matrix
from madics.ffield import make_prime_field
from madics.field_codes import family_codes
from madics.residues import build_residue_system

CASES = (
    # (label, q, p, m, family, index) -> q^k messages
    ("[19,3] over GF(7)", 7, 19, 6, "even-I", 0),
    ("[13,6] over GF(3)", 3, 13, 2, "even-I", 0),
    ("[23,11] over GF(3)", 3, 23, 2, "even-I", 0),
    ("[13,4] over GF(3)", 3, 13, 4, "odd-II", 0),
)


def build_matrix(q, p, m, family, index):
    system = build_residue_system(p, m)
    code = family_codes(system, make_prime_field(q), family)[index]
    return generator_matrix(code)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main():
    use_njit = HAVE_NUMBA and not numba_disabled_by_env()
    if use_njit:
        # trigger compilation outside the timed region
        warm = build_matrix(7, 19, 6, "even-I", 0)
        scan_njit(warm, 7)
    header = f"{'case':<22} {'messages':>10} {'numpy (s)':>10}"
    if use_njit:
        header += f" {'njit (s)':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, q, p, m, family, index in CASES:
        gmat = build_matrix(q, p, m, family, index)
        n_msgs = q ** gmat.shape[0]
        t_np, (best_np, counts_np) = timed(scan_numpy, gmat, q)
        row = f"{label:<22} {n_msgs:>10} {t_np:>10.4f}"
        if use_njit:
            t_nj, (best_nj, counts_nj) = timed(scan_njit, gmat, q)
            assert best_nj == best_np
            assert (counts_nj == counts_np).all()
            row += f" {t_nj:>10.4f} {t_np / t_nj:>7.1f}x"
        print(row + f"   d_min={best_np}")
    if not use_njit:
        print("\ncompiled path unavailable or disabled; vectorized times only")


if __name__ == "__main__":
    main()
