"""Codeword-scan kernel tests: compiled and vectorized paths agree."""

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from madics._kernels import (
    HAVE_NUMBA,
    codeword_support_table,
    numba_disabled_by_env,
    scan,
    scan_njit,
    scan_numpy,
)

rng = random.Random(0xCAFE)


def rand_gmat(k, n, q):
    return np.array([[rng.randrange(q) for _ in range(n)] for _ in range(k)],
                    dtype=np.int64)


@pytest.mark.parametrize("q,k,n", [(2, 5, 9), (3, 4, 13), (5, 3, 11),
                                   (7, 3, 19), (3, 7, 13)])
def test_backends_agree(q, k, n):
    gmat = rand_gmat(k, n, q)
    best_np, counts_np = scan_numpy(gmat, q)
    assert counts_np.sum() == q ** k
    assert counts_np[0] >= 1  # zero message
    if HAVE_NUMBA:
        best_nj, counts_nj = scan_njit(gmat, q)
        assert best_nj == best_np
        assert np.array_equal(counts_nj, counts_np)


def test_scan_dispatch_default():
    gmat = rand_gmat(3, 13, 3)
    best, counts = scan(gmat, 3)
    ref_best, ref_counts = scan_numpy(gmat, 3)
    assert best == ref_best and np.array_equal(counts, ref_counts)


def test_scan_numpy_chunking():
    # chunk boundary smaller than the message count exercises the loop
    gmat = rand_gmat(6, 13, 3)
    a = scan_numpy(gmat, 3, chunk=7)
    b = scan_numpy(gmat, 3, chunk=1 << 13)
    assert a[0] == b[0] and np.array_equal(a[1], b[1])


def test_known_code_distance():
    # generator matrix of the [13, 3, 9] cyclic code over GF(3)
    from madics.analysis import generator_matrix
    from madics.ffield import make_prime_field
    from madics.field_codes import family_codes
    from madics.residues import build_residue_system

    system = build_residue_system(13, 4, a=7)
    code = family_codes(system, make_prime_field(3), "even-I")[0]
    gmat = generator_matrix(code)
    best_np, _ = scan_numpy(gmat, 3)
    assert best_np == 9
    if HAVE_NUMBA:
        assert scan_njit(gmat, 3)[0] == 9


def test_support_table_matches_scan_order():
    gmat = rand_gmat(4, 13, 3)
    table = codeword_support_table(gmat, 3)
    assert table.shape == (3 ** 4, 13)
    assert table.dtype == np.uint8
    # row index encodes the message in base q, coefficient 0 least
    # significant; recompute a few rows directly
    for idx in (0, 1, 5, 42, 80):
        msg = [(idx // 3 ** i) % 3 for i in range(4)]
        word = np.array(msg, dtype=np.int64) @ gmat % 3
        assert np.array_equal(table[idx], (word != 0).astype(np.uint8))


def test_numba_available_here():
    # the packaged environment ships the compiled path
    assert HAVE_NUMBA


def test_scan_numba_request_without_numba():
    gmat = rand_gmat(3, 13, 3)
    if HAVE_NUMBA:
        best, _ = scan(gmat, 3, use_numba=True)
        assert best == scan_numpy(gmat, 3)[0]


def test_env_flag_disables_numba():
    prog = (
        "import numpy as np\n"
        "from madics import _kernels\n"
        "assert _kernels.numba_disabled_by_env()\n"
        "gmat = np.arange(12, dtype=np.int64).reshape(3, 4) % 3\n"
        "best, counts = _kernels.scan(gmat, 3)\n"
        "ref = _kernels.scan_numpy(gmat, 3)\n"
        "assert best == ref[0] and (counts == ref[1]).all()\n"
        "print('numpy-path-ok')\n"
    )
    env = dict(os.environ, MADICS_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", prog], env=env,
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert "numpy-path-ok" in out.stdout


def test_env_flag_off_here():
    assert not numba_disabled_by_env() or os.environ.get("MADICS_NO_NUMBA")
