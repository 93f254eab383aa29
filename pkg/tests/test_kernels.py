import math

import numpy as np
import pytest

from partnorm import _config, _kernels as K
from partnorm.zeta import PartSetSpec, multiplicative_partitions

BACKENDS = ["numba", "numpy"] if K.HAVE_NUMBA else ["numpy"]


def test_backend_flag(monkeypatch):
    monkeypatch.setenv("PARTNORM_BACKEND", "numpy")
    assert _config.backend() == "numpy"
    monkeypatch.setenv("PARTNORM_BACKEND", "fortran")
    with pytest.raises(ValueError):
        _config.backend()


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("mode,logx", [(K.EULER, 0.0), (K.DISTINCT, 0.0), (K.PHI, 0.0), (K.LOGX, -2.5)])
def test_range_sum_against_fsum(backend, mode, logx):
    s = 2.5
    total, count = K.log_sum_range(2, 30_000, 1, s, mode, logx, backend=backend)
    ns = range(2, 30_001)
    if mode == K.EULER:
        ref = math.fsum(-math.log1p(-n**-s) for n in ns)
    elif mode == K.DISTINCT:
        ref = math.fsum(math.log1p(n**-s) for n in ns)
    elif mode == K.PHI:
        ref = math.fsum(math.log1p((1 - 1 / n) * n ** (1 - s) / (1 - n ** (1 - s))) for n in ns)
    else:
        ref = math.fsum(-math.log1p(-math.exp(logx * math.log(n))) for n in ns)
    assert count == 29_999
    assert total == pytest.approx(ref, rel=1e-14)


@pytest.mark.parametrize("backend", BACKENDS)
def test_prime_sum(backend):
    total, count = K.log_sum_primes(1, 100_000, 2.0, backend=backend)
    assert count == 9592
    lo, c1 = K.log_sum_primes(1, 50_000, 2.0, backend=backend)
    hi, c2 = K.log_sum_primes(50_001, 100_000, 2.0, backend=backend)
    assert c1 + c2 == count and lo + hi == pytest.approx(total, rel=1e-15)


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("numba not installed")
    a = K.log_sum_primes(10, 3_000_000, 2.5, backend="numba")
    b = K.log_sum_primes(10, 3_000_000, 2.5, backend="numpy")
    assert a[1] == b[1] and a[0] == pytest.approx(b[0], rel=1e-14)
    x = np.arange(1, 501, dtype=float) ** -2.0
    ha, hb = K.complete_homogeneous(x, 5, backend="numba"), K.complete_homogeneous(x, 5, backend="numpy")
    assert np.allclose(ha, hb, rtol=1e-12, atol=0)
    assert (K.multiplicative_table(3000, backend="numba") == K.multiplicative_table(3000, backend="numpy")).all()


@pytest.mark.parametrize("backend", BACKENDS)
def test_complete_homogeneous_small(backend):
    x = np.array([1.0, 0.5, 0.25])
    h = K.complete_homogeneous(x, 3, backend=backend)
    # h_2 = sum over i <= j of x_i x_j
    assert h[0] == 1 and h[1] == pytest.approx(1.75)
    assert h[2] == pytest.approx(1 + 0.5 + 0.25 + 0.25 + 0.125 + 0.0625)


@pytest.mark.parametrize("backend", BACKENDS)
def test_multiplicative_table(backend):
    table = K.multiplicative_table(500, backend=backend)
    assert [int(table[n]) for n in range(1, 501)] == [multiplicative_partitions(n) for n in range(1, 501)]


def test_product_under_numpy_backend(monkeypatch):
    monkeypatch.setenv("PARTNORM_BACKEND", "numpy")
    X = PartSetSpec.integers_from(3)
    ref = PartSetSpec.integers_from(3).log_sum(3.0, 1, 5000, K.EULER)
    monkeypatch.setenv("PARTNORM_BACKEND", "numba" if K.HAVE_NUMBA else "numpy")
    other = X.log_sum(3.0, 1, 5000, K.EULER)
    assert ref[1] == other[1] and ref[0] == pytest.approx(other[0], rel=1e-14)
