"""Cross-checks between the compiled kernels and the pure fallback.

Both implementations must agree exactly: same canonical masks, same
census, same domination witnesses, and bit-identical Jacobi output
(the rotation arithmetic is written the same way on both sides).
"""

import random
import subprocess
import sys

import numpy as np
import pytest

import spectradom._pykernels as pyk

ck = pytest.importorskip("spectradom._ckernels")

from conftest import random_graph  # noqa: E402


def test_backend_names():
    assert pyk.BACKEND_NAME == "python"
    assert ck.BACKEND_NAME == "compiled"
    assert pyk.OFF_DIAGONAL_TOL == ck.OFF_DIAGONAL_TOL
    assert pyk.MAX_SWEEPS == ck.MAX_SWEEPS


def test_canon_mask_agreement():
    rng = random.Random(0xB0)
    for _ in range(250):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.random())
        assert pyk.canon_mask(n, g.adj) == ck.canon_mask(n, g.adj)


def test_sieve_agreement():
    for n in range(1, 8):
        assert pyk.sieve_canonical_masks(n) == ck.sieve_canonical_masks(n)


def test_domination_agreement():
    rng = random.Random(0xB1)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        assert pyk.solve_domination(n, g.adj) == ck.solve_domination(n, g.adj)


def test_jacobi_bit_identical():
    rng = np.random.default_rng(0xB2)
    for _ in range(60):
        n = int(rng.integers(1, 14))
        m = rng.normal(size=(n, n))
        sym = (m + m.T) / 2
        a = np.ascontiguousarray(sym.copy())
        b = np.ascontiguousarray(sym.copy())
        conv_a, sweeps_a = pyk.jacobi_inplace(a)
        conv_b, sweeps_b = ck.jacobi_inplace(b)
        assert conv_a and conv_b
        assert sweeps_a == sweeps_b
        # exact equality, not approx: both sides run the same arithmetic
        assert np.array_equal(a, b)


def test_jacobi_tiny_entries():
    # entries near the underflow edge once squared; both sides must
    # ride out the intermediate infinities identically
    base = np.array([[1.0, 1e-160], [1e-160, 2.0]])
    a = base.copy()
    b = base.copy()
    assert pyk.jacobi_inplace(a)[0]
    assert ck.jacobi_inplace(b)[0]
    assert np.array_equal(a, b)


def _backend_of(env_value):
    import os

    env = dict(os.environ)
    if env_value is None:
        env.pop("SPECTRADOM_BACKEND", None)
    else:
        env["SPECTRADOM_BACKEND"] = env_value
    proc = subprocess.run(
        [sys.executable, "-c", "import spectradom.backend as b; print(b.BACKEND_NAME)"],
        capture_output=True,
        text=True,
        env=env,
    )
    return proc


def test_env_selection():
    assert _backend_of(None).stdout.strip() == "compiled"
    assert _backend_of("auto").stdout.strip() == "compiled"
    assert _backend_of("c").stdout.strip() == "compiled"
    assert _backend_of("py").stdout.strip() == "python"
    assert _backend_of("pure").stdout.strip() == "python"
    bad = _backend_of("fortran")
    assert bad.returncode != 0
    assert "SPECTRADOM_BACKEND" in bad.stderr


def test_pure_backend_runs_whole_stack():
    # full pipeline under the fallback: enumerate, check, report
    import os

    env = dict(os.environ, SPECTRADOM_BACKEND="py")
    proc = subprocess.run(
        [sys.executable, "-m", "spectradom", "verify", "--n", "4", "--format", "json"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    ref = subprocess.run(
        [sys.executable, "-m", "spectradom", "verify", "--n", "4", "--format", "json"],
        capture_output=True,
        text=True,
        env=dict(os.environ, SPECTRADOM_BACKEND="c"),
    )
    assert ref.returncode == 0
    assert proc.stdout == ref.stdout
