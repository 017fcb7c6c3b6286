import os
import subprocess
import sys

import numpy as np
import pytest

from qconv import _backend, _pykernels
from qconv.quaternion import qmul_array

needs_cython = pytest.mark.skipif("cython" not in _backend.available(),
                                  reason="compiled backend not built")


def test_python_backend_always_available():
    assert "python" in _backend.available()
    assert _backend.get("python") is _pykernels
    with pytest.raises(ValueError):
        _backend.get("fortran")


@needs_cython
@pytest.mark.parametrize("shape", [(1, 1), (3, 7), (8, 8)])
@pytest.mark.parametrize("threads", [1, 3])
def test_kernels_are_bit_identical(rng, shape, threads):
    c, p = _backend.get("cython"), _backend.get("python")
    f, g = rng.uniform(-1, 1, shape + (4,)), rng.uniform(-1, 1, shape + (4,))
    assert np.array_equal(c.cyclic_convolve(f, g, threads), p.cyclic_convolve(f, g, threads))
    assert np.array_equal(c.cyclic_correlate(f, g, threads), p.cyclic_correlate(f, g, threads))
    e = rng.uniform(-1, 1, (shape[0], shape[0], 4))
    assert np.array_equal(c.qmatmul_left(e, f), p.qmatmul_left(e, f))


def test_qmatmul_left_definition(rng, backend):
    e = rng.uniform(-1, 1, (3, 4, 4))
    h = rng.uniform(-1, 1, (4, 2, 4))
    want = sum(qmul_array(e[:, x, None, :], h[None, x, :, :]) for x in range(4))
    assert np.allclose(_backend.kernels.qmatmul_left(e, h), want, atol=1e-14)


def test_num_threads(monkeypatch):
    monkeypatch.delenv("QCONV_THREADS", raising=False)
    assert _backend.num_threads() >= 1
    monkeypatch.setenv("QCONV_THREADS", "3")
    assert _backend.num_threads() == 3
    for bad in ("0", "-2", "many"):
        monkeypatch.setenv("QCONV_THREADS", bad)
        with pytest.raises(ValueError):
            _backend.num_threads()


def test_env_forces_fallback():
    env = dict(os.environ, QCONV_BACKEND="python")
    code = "import qconv; print(qconv.backend)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
