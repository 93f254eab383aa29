"""Truncated power series over the rationals and the exact q-series
identities built on them.

Everything here is exact: coefficients are :class:`fractions.Fraction`
(or plain ``int`` where that is all that is needed).  A :class:`Series`
of order ``N`` holds the coefficients of ``q^0 .. q^N``.
"""

from __future__ import annotations

import json
import math
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from . import _config
from .partitions import ALL, Partition, enumerate_partitions, sigma
from .report import VerifyReport

__all__ = [
    "Series",
    "pentagonal_p",
    "pentagonal_table",
    "require_enumerable",
    "euler_partition_series",
    "weighted_partition_series",
    "weighted_distinct_series",
    "reciprocal_norm_sums",
    "macmahon_partial_fraction_check",
    "fine_identity_check",
    "sigma_power_expansion",
    "sigma_power_product",
    "p_dot",
]

Rational = int | Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class Series:
    """Power series truncated after ``q^order`` with rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        values = [_frac(c) for c in coeffs]
        if order is not None:
            values = (values + [Fraction(0)] * (order + 1))[: order + 1]
        if not values:
            raise ValueError("a series needs at least the constant coefficient")
        limit = _config.max_series_order()
        if len(values) - 1 > limit:
            raise ValueError(
                f"order {len(values) - 1} exceeds PARTNORM_MAX_SERIES_ORDER={limit}"
            )
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff: Rational = 1) -> Series:
        c = [0] * (order + 1)
        if degree <= order:
            c[degree] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} is outside 0..{self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1])

    def _check(self, other: Series) -> None:
        if not isinstance(other, Series):
            raise TypeError("both operands must be Series")
        if other.order != self.order:
            raise ValueError(
                f"orders differ ({self.order} vs {other.order}); truncate explicitly"
            )

    def __add__(self, other: Series) -> Series:
        self._check(other)
        return Series(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: Series) -> Series:
        self._check(other)
        return Series(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> Series:
        return Series(-a for a in self.coeffs)

    def __mul__(self, other) -> Series:
        if isinstance(other, (int, Fraction)):
            return Series(a * other for a in self.coeffs)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = self.order
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return Series(out)

    __rmul__ = __mul__

    def reciprocal(self) -> Series:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal needs a nonzero constant term")
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, self.order + 1):
            b.append(-inv0 * sum((a[i] * b[k - i] for i in range(1, k + 1) if a[i]), Fraction(0)))
        return Series(b)

    def pow(self, e: Rational) -> Series:
        """``self ** e`` for integer ``e`` (negative needs a unit constant
        term) or rational ``e`` (needs constant term 1)."""
        e = _frac(e)
        if e.denominator == 1:
            k = e.numerator
            base = self if k >= 0 else self.reciprocal()
            k = abs(k)
            result = Series.one(self.order)
            while k:
                if k & 1:
                    result = result * base
                k >>= 1
                if k:
                    base = base * base
            return result
        a = self.coeffs
        if a[0] != 1:
            raise ValueError("rational powers need constant term 1")
        # b' a = e a' b, solved term by term
        b = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = sum(((e + 1) * k - n) * a[k] * b[n - k] for k in range(1, n + 1) if a[k])
            b.append(Fraction(acc) / n)
        return Series(b)

    __pow__ = pow

    def to_json(self) -> str:
        """JSON array of ``{"num": str, "den": str}`` objects."""
        return json.dumps(
            [{"num": str(c.numerator), "den": str(c.denominator)} for c in self.coeffs],
            separators=(",", ":"),
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> Series:
        return cls(Fraction(int(d["num"]), int(d["den"])) for d in json.loads(text))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"Series([{shown}{more}], order={self.order})"


# --------------------------------------------------------------------------
# partition counts
# --------------------------------------------------------------------------

_P_TABLE = [1]


def pentagonal_table(n: int) -> list[int]:
    """``[p(0), ..., p(n)]`` from Euler's pentagonal-number recurrence."""
    p = _P_TABLE
    for m in range(len(p), n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p.append(total)
    return p[: n + 1]


def pentagonal_p(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return pentagonal_table(n)[n]


def require_enumerable(n: int) -> None:
    """Raise if enumerating the partitions of ``n`` would pass the ceiling."""
    ceiling = _config.enum_ceiling()
    count = pentagonal_p(n)
    if count > ceiling:
        raise ValueError(
            f"p({n}) = {count} partitions exceeds the enumeration ceiling {ceiling} "
            "(set PARTNORM_ENUM_CEILING to raise it)"
        )


def _weights(w, order: int) -> list[Rational]:
    if isinstance(w, Mapping):
        return [w[n] for n in range(1, order + 1)]
    if callable(w):
        return [w(n) for n in range(1, order + 1)]
    return [w] * order


def weighted_partition_series(order: int, w: Mapping | Callable[[int], Rational] | Rational) -> Series:
    """Coefficients of ``prod_{n=1}^{order} 1/(1 - w(n) q^n)``.

    The ``q^N`` coefficient is the sum over partitions of ``N`` of the
    product of the weights of their parts.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c: list[Rational] = [1] + [0] * order
    for n, wn in enumerate(_weights(w, order), start=1):
        if not wn:
            continue
        for j in range(n, order + 1):
            if c[j - n]:
                c[j] += wn * c[j - n]
    return Series(c)


def weighted_distinct_series(order: int, w: Mapping | Callable[[int], Rational] | Rational) -> Series:
    """Coefficients of ``prod_{n=1}^{order} (1 + w(n) q^n)``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c: list[Rational] = [1] + [0] * order
    for n, wn in enumerate(_weights(w, order), start=1):
        if not wn:
            continue
        for j in range(order, n - 1, -1):
            if c[j - n]:
                c[j] += wn * c[j - n]
    return Series(c)


def euler_partition_series(order: int) -> Series:
    return weighted_partition_series(order, 1)


def reciprocal_norm_sums(order: int, distinct: bool = False) -> list[Fraction]:
    """``sum 1/N(lam)`` over partitions of ``n`` (optionally distinct parts),
    for ``n = 0..order``.

    Same coefficients as ``weighted_partition_series(order, 1/n)`` but run
    over integers scaled by ``order!``: every intermediate coefficient of
    ``q^j`` times ``j!`` is integral because a norm of a partition of ``j``
    divides ``j!``, so the divisions below are exact.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    limit = _config.max_series_order()
    if order > limit:
        raise ValueError(f"order {order} exceeds PARTNORM_MAX_SERIES_ORDER={limit}")
    scale = math.factorial(order)
    a = [scale] + [0] * order
    for m in range(1, order + 1):
        if distinct:
            for j in range(order, m - 1, -1):
                if a[j - m]:
                    a[j] += a[j - m] // m
        else:
            for j in range(m, order + 1):
                if a[j - m]:
                    a[j] += a[j - m] // m
    return [Fraction(x, scale) for x in a]


def p_dot(n: int) -> int:
    """Number of dotted Young diagrams of size ``n``: ``sum N(lam)`` over ``lam |- n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return int(weighted_partition_series(n, lambda m: m)[n])


# --------------------------------------------------------------------------
# identity checks
# --------------------------------------------------------------------------


def _macmahon(lam: Partition) -> Fraction:
    den = lam.norm
    for _, m in lam.freq:
        den *= math.factorial(m)
    return Fraction(1, den)


def macmahon_partial_fraction_check(n: int, q: Rational) -> VerifyReport:
    """Exact check of MacMahon's partial fractions at a rational ``q``.

    ``prod_{j<=n} 1/(1-q^j)`` against the sum over ``lam |- n`` of
    ``1 / (N(lam) prod m_i! prod (1-q^i)^{m_i})``.
    """
    q = _frac(q)
    ceiling = _config.pf_ceiling()
    if n > ceiling:
        raise ValueError(f"n={n} exceeds PARTNORM_PF_CEILING={ceiling}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not (0 < abs(q) < 1):
        raise ValueError("q must satisfy 0 < |q| < 1")
    lhs = Fraction(1)
    for j in range(1, n + 1):
        lhs /= 1 - q**j
    rhs = Fraction(0)
    for lam in enumerate_partitions(n):
        term = _macmahon(lam)
        for i, m in lam.freq:
            term /= (1 - q**i) ** m
        rhs += term
    return VerifyReport.exact(f"macmahon-pf[n={n},q={q}]", lhs, rhs)


def fine_identity_check(n: int) -> VerifyReport:
    """``sum_{lam |- n} 1/(N(lam) prod m_i!) == 1`` exactly."""
    require_enumerable(n)
    total = sum((_macmahon(lam) for lam in enumerate_partitions(n)), Fraction(0))
    return VerifyReport.exact(f"fine[n={n}]", total, Fraction(1))


def _sign(sign) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "minus"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def sigma_power_expansion(c: Rational, sign, order: int) -> Series:
    """Series whose ``q^n`` coefficient is

        sum_{lam |- n} (±c)^len(lam) prod sigma(i)^{m_i} / (N(lam) prod m_i!)

    built by enumerating partitions.  It equals ``prod (1-q^n)^{∓c}``.
    """
    c = _frac(c)
    sgn = _sign(sign)
    require_enumerable(order)
    base = sgn * c
    sig = {i: sigma(i) for i in range(1, order + 1)}
    coeffs = []
    for n in range(order + 1):
        total = Fraction(0)
        for lam in enumerate_partitions(n, ALL):
            term = _macmahon(lam) * base**lam.length
            for i, m in lam.freq:
                term *= sig[i] ** m
            total += term
        coeffs.append(total)
    return Series(coeffs)


def sigma_power_product(c: Rational, sign, order: int) -> Series:
    """``prod_{n=1}^{order} (1-q^n)^{∓c}`` by direct series arithmetic."""
    exponent = -_sign(sign) * _frac(c)
    result = Series.one(order)
    for n in range(1, order + 1):
        factor = Series([1] + [0] * (n - 1) + [-1], order) if n <= order else Series.one(order)
        result = result * factor.pow(exponent)
    return result
