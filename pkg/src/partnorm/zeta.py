"""Partition zeta functions: sums of ``N(lam)^-s`` over families of
partitions, evaluated through Euler products, Dirichlet series and the
fixed-length formulas, in floating point and (for even integer ``s``) as
exact rational multiples of powers of pi.

Every truncated float evaluation returns an :class:`EvalResult` whose
``tail_bound`` is a rigorous bound on the truncation error, or ``None``
when no such bound is known.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import _config, _kernels
from .partitions import ALL, Partition, divisors, enumerate_partitions, is_prime
from .report import VerifyReport, fmt_value
from .series import require_enumerable
from .stats import macmahon_coeff

__all__ = [
    "PiValue",
    "EvalResult",
    "PartSetSpec",
    "bernoulli",
    "riemann_zeta",
    "riemann_zeta_even_exact",
    "partition_zeta_product",
    "distinct_zeta",
    "change_of_variables_check",
    "multiplicative_partitions",
    "multiplicative_partition_table",
    "nuclear_zeta_dirichlet",
    "fixed_length_zeta_faa",
    "fixed_length_zeta_direct",
    "fixed_length_zeta_closed_s2",
    "golden_ratio_series",
    "phi_partition",
    "phi_divisor_sum_check",
    "phi_factor_identity",
    "phi_dirichlet_check",
]


# --------------------------------------------------------------------------
# value types
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PiValue:
    """``coeff * pi**power`` with an exact rational ``coeff``."""

    coeff: Fraction
    power: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.power < 0:
            raise ValueError("power of pi must be nonnegative")

    def __add__(self, other: PiValue) -> PiValue:
        if not isinstance(other, PiValue):
            return NotImplemented
        if other.coeff == 0:
            return self
        if self.coeff == 0:
            return other
        if other.power != self.power:
            raise ValueError(f"cannot add pi^{self.power} and pi^{other.power} terms exactly")
        return PiValue(self.coeff + other.coeff, self.power)

    def __mul__(self, other) -> PiValue:
        if isinstance(other, PiValue):
            return PiValue(self.coeff * other.coeff, self.power + other.power)
        if isinstance(other, (int, Fraction)):
            return PiValue(self.coeff * other, self.power)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PiValue:
        if e < 0:
            raise ValueError("negative powers would need negative powers of pi")
        return PiValue(self.coeff**e, self.power * e)

    def __truediv__(self, other) -> PiValue:
        if isinstance(other, (int, Fraction)):
            return PiValue(self.coeff / other, self.power)
        return NotImplemented

    def __float__(self) -> float:
        return float(self.coeff) * math.pi**self.power

    def __str__(self) -> str:
        return f"{fmt_value(self.coeff)} * pi^{self.power}"

    @classmethod
    def parse(cls, text: str) -> PiValue:
        """Inverse of ``str``: ``"7/360 * pi^4"``."""
        coeff, _, tail = text.partition("*")
        tail = tail.strip()
        if not tail.startswith("pi^"):
            raise ValueError(f"not a pi value: {text!r}")
        return cls(Fraction(coeff.strip()), int(tail[3:]))


@dataclass(frozen=True)
class EvalResult:
    value: float
    tail_bound: float | None
    terms_used: int
    cutoff: int | None = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "tail_bound": self.tail_bound,
            "terms_used": self.terms_used,
            "cutoff": self.cutoff,
        }


@dataclass(frozen=True)
class PartSetSpec:
    """Set of allowed parts for an Euler product.

    ``kind`` is one of ``primes``, ``even``, ``from`` (integers >= ``base``),
    ``list`` (explicit ``members``) or ``all`` (every positive integer,
    meaningful only for distinct-part products).
    """

    kind: str
    base: int = 2
    members: tuple[int, ...] = ()

    @classmethod
    def primes(cls) -> PartSetSpec:
        return cls("primes")

    @classmethod
    def even(cls) -> PartSetSpec:
        return cls("even")

    @classmethod
    def integers_from(cls, base: int) -> PartSetSpec:
        if base < 2:
            raise ValueError("an Euler product over parts needs base >= 2")
        return cls("from", base=base)

    @classmethod
    def explicit(cls, members: Iterable[int]) -> PartSetSpec:
        ms = tuple(sorted(set(int(m) for m in members)))
        if not ms or ms[0] < 2:
            raise ValueError("explicit part sets need members >= 2")
        return cls("list", members=ms)

    @classmethod
    def all_integers(cls) -> PartSetSpec:
        return cls("all", base=1)

    @classmethod
    def parse(cls, text: str) -> PartSetSpec:
        key = text.strip().lower()
        if key in ("primes", "prime"):
            return cls.primes()
        if key in ("even", "evens"):
            return cls.even()
        if key == "nuclear":
            return cls.integers_from(2)
        if key == "all":
            return cls.all_integers()
        if key.startswith("from:"):
            return cls.integers_from(int(key[5:]))
        if key.startswith("list:"):
            return cls.explicit(int(t) for t in key[5:].split(",") if t.strip())
        raise ValueError(f"unknown part set {text!r}")

    def contains(self, n: int) -> bool:
        if self.kind == "primes":
            return is_prime(n)
        if self.kind == "even":
            return n >= 2 and n % 2 == 0
        if self.kind in ("from", "all"):
            return n >= self.base
        return n in self.members

    def _require_euler(self):
        if self.kind == "all":
            raise ValueError("1 may not be a part in an Euler product; use distinct_zeta")

    def log_sum(self, s: float, lo: int, hi: int, mode: int, logx: float = 0.0):
        """``(sum, count)`` of the log-factor over members in ``[lo, hi]``."""
        if self.kind == "list":
            ns = [n for n in self.members if lo <= n <= hi]
            if not ns:
                return 0.0, 0
            vals = _kernels._factor_np(np.array(ns, dtype=np.int64), s, mode, logx)
            return math.fsum(vals), len(ns)
        if self.kind == "primes":
            return _kernels.log_sum_primes(lo, hi, s, mode, logx)
        if self.kind == "even":
            start = max(lo, 2)
            start += start % 2
            return _kernels.log_sum_range(start, hi, 2, s, mode, logx)
        return _kernels.log_sum_range(max(lo, self.base), hi, 1, s, mode, logx)

    def power_tail(self, s: float, cutoff: int, count: int | None = None) -> float:
        """Upper bound for ``sum n^-s`` over members ``n > cutoff``.

        For primes, ``count`` is the number of primes up to ``cutoff`` (a
        lower estimate is used when it is not known).
        """
        if self.kind == "list":
            return 0.0 if cutoff >= self.members[-1] else math.inf
        if self.kind == "even":
            half = max(cutoff // 2, 1)
            return 2.0**-s * half ** (1 - s) / (s - 1)
        if self.kind == "primes" and cutoff >= 17:
            return _prime_tail(s, cutoff, _prime_count_lower(cutoff) if count is None else count)
        cutoff = max(cutoff, 1)
        return cutoff ** (1 - s) / (s - 1)

    def cutoff_for(self, s: float, budget: float) -> int:
        """A cutoff whose ``power_tail`` is at most ``budget``."""
        if self.kind == "list":
            return self.members[-1]
        if self.kind == "even":
            half = (budget * (s - 1) * 2.0**s) ** (-1 / (s - 1))
            return 2 * max(1, math.ceil(half))
        crude = max(2, math.ceil((budget * (s - 1)) ** (-1 / (s - 1))))
        if self.kind != "primes" or crude < 17:
            return crude
        lo, hi = 17, crude
        if self.power_tail(s, lo) <= budget:
            return lo
        while hi - lo > max(1, lo // 1000):
            mid = (lo + hi) // 2
            if self.power_tail(s, mid) <= budget:
                hi = mid
            else:
                lo = mid
        return hi


# pi(x) <= x/log x * (1 + _DUSART/log x) for all x > 1
_DUSART = 1.2762


def _prime_count_lower(x: int) -> float:
    # pi(x) >= x / log x for x >= 17
    return x / math.log(x)


def _prime_tail(s: float, cutoff: int, count: float) -> float:
    """Bound on ``sum_{p > M} p^-s`` by partial summation:
    ``-pi(M) M^-s + s * int_M^inf pi(x) x^(-s-1) dx`` with the upper bound for pi."""
    L = math.log(cutoff)
    integral = s * (1 / L + _DUSART / L**2) * cutoff ** (1 - s) / (s - 1)
    return max(integral - count * cutoff**-s, 0.0)


def _check_s(s: float, lower: float = 1.0, what: str = "s") -> float:
    s = float(s)
    if not s > lower:
        raise ValueError(f"{what} must be > {lower:g}, got {s:g}")
    return s


def _cap(cutoff: int, tol: float) -> None:
    limit = _config.max_terms()
    if cutoff > limit:
        raise ValueError(
            f"tol={tol:g} needs a truncation at {cutoff:.3e}, beyond PARTNORM_MAX_TERMS={limit}"
        )


_ROUNDOFF_ULPS = 8


def _truncated_product(X: PartSetSpec, s: float, tol: float, mode: int, tail_s: float,
                       geometric: bool, logx: float = 0.0) -> EvalResult:
    """exp of a log-sum of factors over ``X``, extended until the bound on the
    missing factors, ``value * expm1(log_tail)``, is at most ``tol``.

    Each omitted log-factor is at most ``y`` (or ``y/(1-y)`` when
    ``geometric``) with ``y = n^-tail_s``, so ``log_tail`` follows from
    :meth:`PartSetSpec.power_tail`.
    """
    value_guess = 1.0
    total, count, done = 0.0, 0, 0
    while True:
        # compensated summation plus exp: a few ulps of the value
        roundoff = _ROUNDOFF_ULPS * sys.float_info.epsilon * value_guess
        if tol <= 2 * roundoff:
            raise ValueError(f"tol={tol:g} is below floating-point resolution for this product")
        budget = math.log1p((tol - roundoff) / value_guess)
        cutoff = X.cutoff_for(tail_s, budget)
        if done:
            cutoff = max(cutoff, done + done // 8 + 1)
        _cap(cutoff, tol)
        if cutoff > done:
            part, c = X.log_sum(s, done + 1, cutoff, mode, logx)
            total += part
            count += c
            done = cutoff
        value = math.exp(total)
        log_tail = X.power_tail(tail_s, done, count)
        if geometric:
            log_tail /= 1 - (done + 1) ** -tail_s
        bound = value * math.expm1(log_tail) + _ROUNDOFF_ULPS * sys.float_info.epsilon * value
        if bound <= tol:
            return EvalResult(value, bound, count, done)
        value_guess = value * math.exp(log_tail)


# --------------------------------------------------------------------------
# Riemann zeta
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number ``B_m`` (``B_1 = -1/2``) from
    ``sum_{k<=m} C(m+1, k) B_k = 0``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return Fraction(1)
    if m > 1 and m % 2:
        return Fraction(0)
    acc = sum((math.comb(m + 1, k) * bernoulli(k) for k in range(m)), Fraction(0))
    return -acc / (m + 1)


def riemann_zeta_even_exact(j: int) -> PiValue:
    """``zeta(2j)`` as a rational multiple of ``pi^(2j)``."""
    if j < 1:
        raise ValueError("j must be >= 1")
    coeff = (-1) ** (j + 1) * bernoulli(2 * j) * Fraction(2 ** (2 * j - 1), math.factorial(2 * j))
    return PiValue(coeff, 2 * j)


def riemann_zeta(s: float, tol: float = 1e-15) -> EvalResult:
    """``zeta(s)`` for real ``s > 1`` by Euler–Maclaurin summation.

    For real ``s`` the remainder after the last correction term is bounded
    by the first omitted term, which is reported as ``tail_bound``.
    """
    s = _check_s(s)
    n_head = 8
    while n_head <= 1 << 22:
        head = math.fsum(n ** -s for n in range(1, n_head))
        N = float(n_head)
        terms = [N ** (1 - s) / (s - 1), 0.5 * N**-s]
        rising = s  # s (s+1) ... (s+2k-2)
        prev = math.inf
        for k in range(1, 60):
            t = float(bernoulli(2 * k) / math.factorial(2 * k)) * rising * N ** (-s - 2 * k + 1)
            if abs(t) > prev:
                break
            if abs(t) <= tol:
                value = head + math.fsum(terms)
                return EvalResult(value, abs(t), n_head - 1 + k, n_head)
            terms.append(t)
            prev = abs(t)
            rising *= (s + 2 * k - 1) * (s + 2 * k)
        n_head *= 2
    raise ValueError(f"could not reach tol={tol:g} for s={s:g}")


# --------------------------------------------------------------------------
# Euler products
# --------------------------------------------------------------------------


@lru_cache(maxsize=64)
def partition_zeta_product(X: PartSetSpec, s: float, tol: float = 1e-10) -> EvalResult:
    """``prod_{n in X} (1 - n^-s)^-1``, the partition zeta function of
    partitions with parts in ``X``."""
    s = _check_s(s)
    X._require_euler()
    # -log(1-y) <= y / (1-y)
    return _truncated_product(X, s, tol, _kernels.EULER, s, True)


@lru_cache(maxsize=16)
def distinct_zeta(s: float, tol: float = 1e-10) -> EvalResult:
    """``prod_{n>=1} (1 + n^-s)``, summing ``N(lam)^-s`` over distinct-part partitions."""
    s = _check_s(s)
    return _truncated_product(PartSetSpec.all_integers(), s, tol, _kernels.DISTINCT, s, False)


def change_of_variables_check(X: PartSetSpec, s: float, tol: float = 1e-10) -> VerifyReport:
    """``prod (1 - x^(log n))^-1`` with ``x = e^-s`` against the Euler product."""
    s = _check_s(s)
    X._require_euler()
    ref = partition_zeta_product(X, s, tol)
    x = math.exp(-s)
    part, _ = X.log_sum(s, 1, ref.cutoff, _kernels.LOGX, math.log(x))
    direct = math.exp(part)
    return VerifyReport.numeric(
        f"change-of-vars[{X.kind},s={s:g}]", direct, ref.value, 2 * tol + 1e-12,
        notes=f"x=e^-{s:g}, both truncated at {ref.cutoff}",
    )


# --------------------------------------------------------------------------
# nuclear partitions / multiplicative partitions
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _factorizations(rest: int, cap: int) -> int:
    if rest == 1:
        return 1
    return sum(_factorizations(rest // d, d) for d in divisors(rest) if 2 <= d <= cap)


def multiplicative_partitions(nu: int) -> int:
    """Number of partitions without 1s whose norm is ``nu``."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    return _factorizations(nu, nu)


def multiplicative_partition_table(limit: int) -> np.ndarray:
    """``c[nu]`` for ``nu <= limit`` from the Dirichlet-series product
    ``prod_{n>=2} 1/(1 - n^-s)`` (``c[0]`` unused)."""
    return _kernels.multiplicative_table(limit)


def nuclear_zeta_dirichlet(s: float, nu_max: int) -> EvalResult:
    """Partial sum ``sum_{nu <= nu_max} P(nu)/nu^s``; no tail bound is known."""
    s = _check_s(s)
    if nu_max < 1:
        raise ValueError("nu_max must be >= 1")
    c = multiplicative_partition_table(nu_max)
    nu = np.arange(1, nu_max + 1, dtype=np.float64)
    value = math.fsum(c[1:] * nu**-s)
    return EvalResult(value, None, nu_max, nu_max)


# --------------------------------------------------------------------------
# fixed length
# --------------------------------------------------------------------------


def fixed_length_zeta_faa(s, k: int, exact: bool = False, tol: float = 1e-14):
    """Sum of ``N(lam)^-s`` over partitions of length ``k``, as

        sum_{mu |- k} prod_j zeta(j s)^{m_j} / (N(mu) prod m_j!)

    ``exact=True`` needs an even positive integer ``s`` and returns a
    :class:`PiValue` of power ``s*k``; otherwise an :class:`EvalResult`.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    require_enumerable(k)
    if exact:
        if int(s) != s or s < 2 or int(s) % 2:
            raise ValueError("the exact path needs an even positive integer s")
        s = int(s)
        if k == 0:
            return PiValue(Fraction(1), 0)
        zs = {j: riemann_zeta_even_exact(j * s // 2) for j in range(1, k + 1)}
        total = PiValue(Fraction(0), s * k)
        for mu in enumerate_partitions(k, ALL):
            term = PiValue(macmahon_coeff(mu), 0)
            for j, m in mu.freq:
                term = term * zs[j] ** m
            total = total + term
        return total
    s = _check_s(s)
    if k == 0:
        return EvalResult(1.0, 0.0, 0)
    zs = {j: riemann_zeta(j * s, tol) for j in range(1, k + 1)}
    value_terms, upper_terms = [], []
    for mu in enumerate_partitions(k, ALL):
        w = float(macmahon_coeff(mu))
        lo = hi = w
        for j, m in mu.freq:
            z = zs[j]
            lo *= z.value**m
            hi *= (z.value + z.tail_bound + 4e-16 * z.value) ** m
        value_terms.append(lo)
        upper_terms.append(hi)
    value = math.fsum(value_terms)
    bound = math.fsum(upper_terms) - value
    return EvalResult(value, bound, len(value_terms))


def fixed_length_zeta_direct(s: float, k: int, cutoff: int) -> EvalResult:
    """Sum of ``N(lam)^-s`` over partitions of length ``k`` with parts
    ``<= cutoff``.

    A lower bound that increases with ``cutoff``.  The omitted partitions
    have largest part ``a > cutoff`` and contribute at most
    ``cutoff^(1-s)/(s-1) * zeta(s)^(k-1)``, reported as ``tail_bound``.
    """
    s = _check_s(s)
    if k < 0 or cutoff < 1:
        raise ValueError("need k >= 0 and cutoff >= 1")
    if k == 0:
        return EvalResult(1.0, 0.0, 0, cutoff)
    x = np.arange(1, cutoff + 1, dtype=np.float64) ** -s
    h = _kernels.complete_homogeneous(x, k)
    z = riemann_zeta(s)
    bound = cutoff ** (1 - s) / (s - 1) * (z.value + z.tail_bound) ** (k - 1)
    return EvalResult(float(h[k]), bound, cutoff, cutoff)


def fixed_length_zeta_closed_s2(k: int) -> PiValue:
    """``(2^(2k-1) - 1) / 2^(2k-2) * zeta(2k)`` exactly."""
    if k < 1:
        raise ValueError("the closed form holds for k >= 1 only")
    return riemann_zeta_even_exact(k) * Fraction(2 ** (2 * k - 1) - 1, 2 ** (2 * k - 2))


def golden_ratio_series(terms: int | None = None, tol: float = 1e-15) -> EvalResult:
    """``sum_{k < terms} zeta_P({2}^k) / 100^k`` from the exact fixed-length values.

    Each term with ``k >= 1`` is below ``2 zeta(2) / 100^k``, which bounds
    the tail.  With ``terms=None`` enough terms are taken to push that bound
    under ``tol``.
    """
    z2 = math.pi**2 / 6

    def tail(K: int) -> float:
        return 2 * z2 * 100.0**-K / (1 - 1 / 100) if K >= 1 else math.inf

    if terms is None:
        terms = 1
        while tail(terms) > tol:
            terms += 1
    if terms < 1:
        raise ValueError("need at least one term")
    vals = []
    for k in range(terms):
        pv = fixed_length_zeta_faa(2, k, exact=True)
        vals.append(float(pv.coeff / Fraction(100) ** k) * math.pi**pv.power)
    return EvalResult(math.fsum(vals), tail(terms), terms)


# --------------------------------------------------------------------------
# partition phi
# --------------------------------------------------------------------------


def phi_partition(lam: Partition) -> Fraction:
    """``N(lam) * prod over distinct parts (1 - 1/part)``."""
    out = Fraction(lam.norm)
    for p in lam.distinct_parts:
        out *= 1 - Fraction(1, p)
    return out


def phi_divisor_sum_check(lam: Partition) -> VerifyReport:
    """``sum over subpartitions delta of phi(delta) == N(lam)``."""
    count = math.prod(m + 1 for _, m in lam.freq)
    ceiling = _config.enum_ceiling()
    if count > ceiling:
        raise ValueError(f"{count} subpartitions exceeds PARTNORM_ENUM_CEILING={ceiling}")
    total = sum((phi_partition(d) for d in lam.subpartitions()), Fraction(0))
    return VerifyReport.exact(f"phi-sum[{lam}]", total, Fraction(lam.norm))


def _phi_factor_sides(n: int, s: int) -> tuple[Fraction, Fraction]:
    t = Fraction(1, n ** (s - 1))  # n^(1-s)
    lhs = 1 + (1 - Fraction(1, n)) * t / (1 - t)
    rhs = (1 - Fraction(1, n**s)) / (1 - t)
    return lhs, rhs


def phi_factor_identity(n: int, s: int) -> VerifyReport:
    """Per-part factor of the phi Dirichlet series, exactly, for integer ``s > 2``."""
    if int(s) != s or s <= 2:
        raise ValueError("the exact factor check needs an integer s > 2")
    if n < 2:
        raise ValueError("parts must be >= 2")
    lhs, rhs = _phi_factor_sides(n, int(s))
    return VerifyReport.exact(f"phi-factor[n={n},s={s}]", lhs, rhs)


def phi_dirichlet_check(X: PartSetSpec, s: float, tol: float = 1e-10) -> VerifyReport:
    """``sum_{lam in P_X} phi(lam)/N(lam)^s`` against
    ``zeta_X(s-1) / zeta_X(s)``.

    The left side is the product over ``n in X`` of the geometric sums
    ``1 + (1 - 1/n) n^(1-s) / (1 - n^(1-s))``.  Finite ``X`` with integer
    ``s`` is compared exactly; otherwise the truncated product is compared
    with the ratio of two independently truncated Euler products (for
    primes, with Euler–Maclaurin values of the Riemann zeta function).
    """
    s = _check_s(s, 2.0)
    X._require_euler()
    label = f"phi-dirichlet[{X.kind}{list(X.members) if X.members else ''},s={s:g}]"
    if X.kind == "list" and s == int(s):
        lhs = rhs = Fraction(1)
        for n in X.members:
            a, _ = _phi_factor_sides(n, int(s))
            lhs *= a
            rhs *= (1 - Fraction(1, n ** int(s))) / (1 - Fraction(1, n ** (int(s) - 1)))
        return VerifyReport.exact(label, lhs, rhs)
    # log of each factor is at most -log(1 - t) <= t/(1-t), t = n^(1-s)
    left = _truncated_product(X, s, 0.9 * tol, _kernels.PHI, s - 1, True)
    if X.kind == "primes":
        num, den = riemann_zeta(s - 1), riemann_zeta(s)
        source = "Riemann zeta"
    else:
        num = partition_zeta_product(X, s - 1, tol / 20)
        den = partition_zeta_product(X, s, tol / 20)
        source = "Euler products"
    right = num.value / den.value
    return VerifyReport.numeric(label, left.value, right, tol,
                                notes=f"lhs truncated at {left.cutoff}; rhs from {source}")

