"""Float hot loops: Euler-product log sums, prime sieving, fixed-length DP.

Each kernel has two implementations with the same contract:

* ``*_nb``: numba ``@njit`` loops (Kahan-compensated where they sum);
* ``*_np``: chunked numpy, partial sums combined with ``math.fsum``.

The public wrappers pick one according to ``PARTNORM_BACKEND``.  Both
paths are tested against each other; ``benchmarks/bench_kernels.py``
times them.
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


# factor kinds for the log-sum kernels
EULER = 0  # -log(1 - n^-s)
DISTINCT = 1  # log(1 + n^-s)
LOGX = 2  # -log(1 - x^(log n)), x given through log(x)
PHI = 3  # log(1 + (1 - 1/n) t / (1 - t)), t = n^(1-s)

_CHUNK = 1 << 20
_SEGMENT = 1 << 18


def _resolve(backend):
    if backend is None:
        from ._config import backend as configured

        backend = configured()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        backend = "numpy"
    return backend


def _int_exponent(s: float) -> int:
    # small integral exponents are evaluated by repeated multiplication
    if s == int(s) and 1 <= s <= 64:
        return int(s)
    return 0


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _inv_pow_nb(n, s, s_int):
    if s_int > 0:
        acc = 1.0
        for _ in range(s_int):
            acc *= n
        return 1.0 / acc
    return math.exp(-s * math.log(n))


@njit(cache=True, nogil=True)
def _factor_nb(n, s, s_int, mode, logx):
    fn = float(n)
    if mode == 0:
        return -math.log1p(-_inv_pow_nb(fn, s, s_int))
    if mode == 1:
        return math.log1p(_inv_pow_nb(fn, s, s_int))
    if mode == 2:
        return -math.log1p(-math.exp(logx * math.log(fn)))
    # mode 3: t = n^(1-s)
    t = fn * _inv_pow_nb(fn, s, s_int)
    return math.log1p((1.0 - 1.0 / fn) * t / (1.0 - t))


@njit(cache=True, nogil=True)
def _log_sum_range_nb(lo, hi, step, s, s_int, mode, logx):
    total = 0.0
    comp = 0.0
    count = 0
    n = lo
    while n <= hi:
        y = _factor_nb(n, s, s_int, mode, logx) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        count += 1
        n += step
    return total, count


@njit(cache=True, nogil=True)
def _base_primes_nb(limit):
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=np.uint8)
    flags[0] = 0
    flags[1] = 0
    i = 2
    while i * i <= limit:
        if flags[i]:
            for m in range(i * i, limit + 1, i):
                flags[m] = 0
        i += 1
    return np.flatnonzero(flags).astype(np.int64)


@njit(cache=True, nogil=True)
def _log_sum_primes_nb(lo_bound, hi, s, s_int, mode, logx, segment):
    total = 0.0
    comp = 0.0
    count = 0
    if hi < 2 or lo_bound > hi:
        return total, count
    root = int(math.sqrt(hi))
    while root * root > hi:
        root -= 1
    while (root + 1) * (root + 1) <= hi:
        root += 1
    base = _base_primes_nb(root)
    lo = max(2, lo_bound)
    mark = np.empty(segment, dtype=np.uint8)
    while lo <= hi:
        top = min(lo + segment - 1, hi)
        width = top - lo + 1
        mark[:width] = 1
        for p in base:
            if p * p > top:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            for m in range(start, top + 1, p):
                mark[m - lo] = 0
        for i in range(width):
            if mark[i]:
                y = _factor_nb(lo + i, s, s_int, mode, logx) - comp
                t = total + y
                comp = (t - total) - y
                total = t
                count += 1
        lo = top + 1
    return total, count


@njit(cache=True, nogil=True)
def _complete_homogeneous_nb(x, k):
    h = np.zeros(k + 1)
    h[0] = 1.0
    for v in x:
        for j in range(1, k + 1):
            h[j] += v * h[j - 1]
    return h


@njit(cache=True, nogil=True)
def _multiplicative_table_nb(limit):
    c = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        c[1] = 1
    for n in range(2, limit + 1):
        for m in range(1, limit // n + 1):
            c[m * n] += c[m]
    return c


# --------------------------------------------------------------------------
# numpy path
# --------------------------------------------------------------------------


def _factor_np(n: np.ndarray, s: float, mode: int, logx: float) -> np.ndarray:
    fn = n.astype(np.float64)
    if mode == EULER:
        return -np.log1p(-np.power(fn, -s))
    if mode == DISTINCT:
        return np.log1p(np.power(fn, -s))
    if mode == LOGX:
        return -np.log1p(-np.exp(logx * np.log(fn)))
    t = np.power(fn, 1.0 - s)
    return np.log1p((1.0 - 1.0 / fn) * t / (1.0 - t))


def _log_sum_range_np(lo, hi, step, s, mode, logx):
    if lo > hi:
        return 0.0, 0
    partials = []
    count = 0
    span = _CHUNK * step
    start = lo
    while start <= hi:
        stop = min(start + span, hi + 1)
        n = np.arange(start, stop, step, dtype=np.int64)
        partials.append(float(np.sum(_factor_np(n, s, mode, logx))))
        count += n.size
        start += span
    return math.fsum(partials), count


def _base_primes_np(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return np.flatnonzero(flags).astype(np.int64)


def _log_sum_primes_np(lo_bound, hi, s, mode, logx, segment=_CHUNK):
    if hi < 2 or lo_bound > hi:
        return 0.0, 0
    base = _base_primes_np(math.isqrt(hi))
    partials = []
    count = 0
    lo = max(2, lo_bound)
    while lo <= hi:
        top = min(lo + segment - 1, hi)
        mark = np.ones(top - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > top:
                break
            start = max(p * p, -(-lo // p) * p)
            mark[start - lo :: p] = False
        primes = np.flatnonzero(mark) + lo
        if primes.size:
            partials.append(float(np.sum(_factor_np(primes, s, mode, logx))))
            count += primes.size
        lo = top + 1
    return math.fsum(partials), count


def _complete_homogeneous_np(x: np.ndarray, k: int) -> np.ndarray:
    # Newton's identities: j h_j = sum_{r=1}^{j} p_r h_{j-r}
    power_sums = np.zeros(k + 1)
    xr = np.ones_like(x)
    for r in range(1, k + 1):
        xr = xr * x
        power_sums[r] = math.fsum(xr)
    h = np.zeros(k + 1)
    h[0] = 1.0
    for j in range(1, k + 1):
        h[j] = math.fsum(power_sums[r] * h[j - r] for r in range(1, j + 1)) / j
    return h


def _multiplicative_table_np(limit: int) -> np.ndarray:
    # Same in-place recurrence c[m n] += c[m] (n ascending, m ascending) as
    # the compiled kernel, done in slices whose sources are already final.
    c = np.zeros(limit + 1, dtype=np.int64)
    if limit < 1:
        return c
    c[1] = 1
    root = math.isqrt(limit)
    for n in range(2, root + 1):
        a, top = 1, limit // n
        while a <= top:
            b = min(a * n, top + 1)
            c[a * n : b * n : n] += c[a:b]
            a = b
    # for n > root every source index m <= limit // n is below root and final
    for m in range(1, limit // (root + 1) + 1):
        c[(root + 1) * m : (limit // m) * m + 1 : m] += c[m]
    return c


# --------------------------------------------------------------------------
# dispatch
# --------------------------------------------------------------------------


def log_sum_range(lo, hi, step, s, mode=EULER, logx=0.0, backend=None):
    """Sum of the log-factor ``mode`` over ``n = lo, lo+step, ... <= hi``.

    Returns ``(sum, number_of_terms)``.
    """
    if lo < 1 or step < 1:
        raise ValueError("lo and step must be positive")
    if _resolve(backend) == "numba":
        return _log_sum_range_nb(
            int(lo), int(hi), int(step), float(s), _int_exponent(s), int(mode), float(logx)
        )
    return _log_sum_range_np(int(lo), int(hi), int(step), float(s), int(mode), float(logx))


def log_sum_primes(lo, hi, s, mode=EULER, logx=0.0, backend=None):
    """Sum of the log-factor ``mode`` over primes ``lo <= p <= hi``."""
    if _resolve(backend) == "numba":
        return _log_sum_primes_nb(
            int(lo), int(hi), float(s), _int_exponent(s), int(mode), float(logx), _SEGMENT
        )
    return _log_sum_primes_np(int(lo), int(hi), float(s), int(mode), float(logx))


def complete_homogeneous(x, k, backend=None):
    """``h_0..h_k`` of the values ``x`` (complete homogeneous symmetric sums)."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    if _resolve(backend) == "numba":
        return _complete_homogeneous_nb(x, int(k))
    return _complete_homogeneous_np(x, int(k))


def multiplicative_table(limit, backend=None):
    """Array ``c`` with ``c[v]`` = number of factorizations of ``v`` into
    nonincreasing factors >= 2 (``c[1] = 1``), for ``v <= limit``."""
    if _resolve(backend) == "numba":
        return _multiplicative_table_nb(int(limit))
    return _multiplicative_table_np(int(limit))
