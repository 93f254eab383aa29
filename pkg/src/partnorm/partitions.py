"""Integer partitions in frequency form, restricted classes, enumeration.

A :class:`Partition` stores sorted ``(part, multiplicity)`` pairs; the
descending part list is a derived view.  Enumeration yields partitions in
lexicographically decreasing order of their part lists, so ``(4)`` comes
before ``(3, 1)`` comes before ``(2, 2)``.

Also home to the small number-theory helpers the rest of the package
leans on (trial-division factorization, divisor sums, primality).
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from collections.abc import Callable, Iterable, Iterator
from functools import reduce
from itertools import product
from operator import mul

__all__ = [
    "Partition",
    "PartitionClass",
    "ClassTag",
    "ALL",
    "DISTINCT",
    "ODD_PARTS",
    "EVEN_PARTS",
    "PRIME_PARTS",
    "NUCLEAR",
    "ROGERS_RAMANUJAN",
    "GOLLNITZ_GORDON",
    "SCHUR",
    "allowed_parts",
    "class_from_name",
    "from_parts",
    "norm",
    "size",
    "length",
    "largest_part",
    "rank",
    "delete_part",
    "enumerate_partitions",
    "iter_part_tuples",
    "subpartitions",
    "nuclear_partitions_with_norm",
    "factorize",
    "sigma",
    "is_prime",
    "divisors",
]


class Partition:
    """An integer partition, immutable, in frequency representation."""

    __slots__ = ("_freq", "_size", "_length")

    def __init__(self, freq: Iterable[tuple[int, int]] = ()):
        pairs = sorted((int(p), int(m)) for p, m in freq)
        merged: list[tuple[int, int]] = []
        for p, m in pairs:
            if p <= 0:
                raise ValueError(f"parts must be positive, got {p}")
            if m < 0:
                raise ValueError(f"multiplicity of {p} is negative")
            if m == 0:
                continue
            if merged and merged[-1][0] == p:
                raise ValueError(f"part {p} listed twice")
            merged.append((p, m))
        self._freq = tuple(merged)
        self._size = sum(p * m for p, m in merged)
        self._length = sum(m for _, m in merged)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        parts = list(parts)
        for p in parts:
            if int(p) != p or p <= 0:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        return cls(Counter(int(p) for p in parts).items())

    @classmethod
    def _trusted(cls, freq: tuple[tuple[int, int], ...]) -> Partition:
        # freq already sorted, positive and merged
        self = object.__new__(cls)
        self._freq = freq
        self._size = sum(p * m for p, m in freq)
        self._length = sum(m for _, m in freq)
        return self

    @classmethod
    def _from_desc(cls, parts: tuple[int, ...]) -> Partition:
        freq: list[tuple[int, int]] = []
        for p in reversed(parts):
            if freq and freq[-1][0] == p:
                freq[-1] = (p, freq[-1][1] + 1)
            else:
                freq.append((p, 1))
        return cls._trusted(tuple(freq))

    @property
    def freq(self) -> tuple[tuple[int, int], ...]:
        return self._freq

    @property
    def size(self) -> int:
        return self._size

    @property
    def length(self) -> int:
        return self._length

    @property
    def parts(self) -> tuple[int, ...]:
        """Parts in nonincreasing order."""
        out: list[int] = []
        for p, m in reversed(self._freq):
            out.extend([p] * m)
        return tuple(out)

    @property
    def norm(self) -> int:
        return reduce(mul, (p**m for p, m in self._freq), 1)

    @property
    def largest_part(self) -> int:
        return self._freq[-1][0] if self._freq else 0

    @property
    def rank(self) -> int:
        return self.largest_part - self._length

    @property
    def distinct_parts(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._freq)

    def multiplicity(self, part: int) -> int:
        for p, m in self._freq:
            if p == part:
                return m
        return 0

    def delete_part(self, part: int) -> Partition:
        if not self.multiplicity(part):
            raise ValueError(f"{part} is not a part of {self}")
        return Partition._trusted(
            tuple((p, m - (p == part)) for p, m in self._freq if not (p == part and m == 1))
        )

    def subpartitions(self) -> Iterator[Partition]:
        """Every sub-multiset of the parts, ∅ first and ``self`` last."""
        ranges = [range(m + 1) for _, m in self._freq]
        for ms in product(*ranges):
            yield Partition._trusted(
                tuple((p, k) for (p, _), k in zip(self._freq, ms) if k)
            )

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._freq == other._freq

    def __hash__(self) -> int:
        return hash(self._freq)

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition.from_parts({list(self.parts)})"

    def __str__(self) -> str:
        if not self._freq:
            return "<>"
        body = " ".join(str(p) if m == 1 else f"{p}^{m}" for p, m in self._freq)
        return f"<{body}>"


EMPTY = Partition()


def from_parts(parts: Iterable[int]) -> Partition:
    return Partition.from_parts(parts)


def norm(lam: Partition) -> int:
    return lam.norm


def size(lam: Partition) -> int:
    return lam.size


def length(lam: Partition) -> int:
    return lam.length


def largest_part(lam: Partition) -> int:
    return lam.largest_part


def rank(lam: Partition) -> int:
    return lam.rank


def delete_part(lam: Partition, part: int) -> Partition:
    return lam.delete_part(part)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    return lam.subpartitions()


# --------------------------------------------------------------------------
# number theory helpers
# --------------------------------------------------------------------------


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, primes ascending."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def sigma(n: int) -> int:
    """Sum of the divisors of ``n``."""
    total = 1
    for p, e in factorize(n):
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


# --------------------------------------------------------------------------
# restricted classes
# --------------------------------------------------------------------------


class ClassTag(enum.Enum):
    ALL = "all"
    DISTINCT = "distinct"
    ODD_PARTS = "odd"
    EVEN_PARTS = "even"
    PRIME_PARTS = "prime"
    NUCLEAR = "nuclear"
    ROGERS_RAMANUJAN = "rr"
    GOLLNITZ_GORDON = "gg"
    SCHUR = "schur"
    ALLOWED_PARTS = "parts"


class PartitionClass:
    """A family of partitions described by allowed parts plus a rule on
    consecutive parts ``a > b`` (``a`` the larger).

    Membership is decidable for every partition; ∅ belongs to every class.
    """

    __slots__ = ("tag", "name", "min_gap", "_allows", "_pair_ok")

    def __init__(
        self,
        tag: ClassTag,
        name: str,
        *,
        min_gap: int = 0,
        allows: Callable[[int], bool] | None = None,
        pair_ok: Callable[[int, int], bool] | None = None,
    ):
        self.tag = tag
        self.name = name
        self.min_gap = min_gap
        self._allows = allows
        self._pair_ok = pair_ok

    def allows(self, part: int) -> bool:
        return part >= 1 and (self._allows is None or self._allows(part))

    def pair_ok(self, larger: int, smaller: int) -> bool:
        if larger - smaller < self.min_gap:
            return False
        return self._pair_ok is None or self._pair_ok(larger, smaller)

    def contains(self, lam: Partition) -> bool:
        parts = lam.parts
        if not all(self.allows(p) for p in parts):
            return False
        return all(self.pair_ok(a, b) for a, b in zip(parts, parts[1:]))

    __contains__ = contains

    def __repr__(self) -> str:
        return f"PartitionClass({self.name!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionClass):
            return NotImplemented
        return self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)


def _gg_pair(a: int, b: int) -> bool:
    return not (a % 2 == 0 and b % 2 == 0 and a - b == 2)


def _schur_pair(a: int, b: int) -> bool:
    return not (a % 3 == 0 and b % 3 == 0 and a - b == 3)


ALL = PartitionClass(ClassTag.ALL, "all")
DISTINCT = PartitionClass(ClassTag.DISTINCT, "distinct", min_gap=1)
ODD_PARTS = PartitionClass(ClassTag.ODD_PARTS, "odd", allows=lambda p: p % 2 == 1)
EVEN_PARTS = PartitionClass(ClassTag.EVEN_PARTS, "even", allows=lambda p: p % 2 == 0)
PRIME_PARTS = PartitionClass(ClassTag.PRIME_PARTS, "prime", allows=is_prime)
NUCLEAR = PartitionClass(ClassTag.NUCLEAR, "nuclear", allows=lambda p: p >= 2)
ROGERS_RAMANUJAN = PartitionClass(ClassTag.ROGERS_RAMANUJAN, "rr", min_gap=2)
GOLLNITZ_GORDON = PartitionClass(ClassTag.GOLLNITZ_GORDON, "gg", min_gap=2, pair_ok=_gg_pair)
SCHUR = PartitionClass(ClassTag.SCHUR, "schur", min_gap=3, pair_ok=_schur_pair)

_NAMED = {c.name: c for c in (ALL, DISTINCT, ODD_PARTS, EVEN_PARTS, PRIME_PARTS,
                              NUCLEAR, ROGERS_RAMANUJAN, GOLLNITZ_GORDON, SCHUR)}


def allowed_parts(parts: Iterable[int] | Callable[[int], bool], name: str | None = None) -> PartitionClass:
    """Partitions whose parts all come from an explicit set or satisfy a predicate."""
    if callable(parts):
        return PartitionClass(ClassTag.ALLOWED_PARTS, name or f"parts:{parts!r}", allows=parts)
    allowed = frozenset(int(p) for p in parts)
    if any(p < 1 for p in allowed):
        raise ValueError("allowed parts must be positive")
    label = name or "parts:" + ",".join(map(str, sorted(allowed)))
    return PartitionClass(ClassTag.ALLOWED_PARTS, label, allows=allowed.__contains__)


def class_from_name(name: str) -> PartitionClass:
    """Parse ``all``, ``distinct``, ``odd``, ``even``, ``prime``, ``nuclear``,
    ``rr``, ``gg``, ``schur`` or ``parts:2,3,5``."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]
    if key.startswith("parts:"):
        body = key[len("parts:"):]
        try:
            values = [int(tok) for tok in body.split(",") if tok.strip()]
        except ValueError:
            raise ValueError(f"bad part list in {name!r}") from None
        if not values:
            raise ValueError(f"empty part list in {name!r}")
        return allowed_parts(values)
    raise ValueError(f"unknown partition class {name!r}")


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------


def _all_desc(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    # successor rule for lexicographically decreasing order
    first = n if largest is None else largest
    if n == 0:
        if largest in (None, 0):
            yield ()
        return
    if first < 1 or first > n:
        return
    a = [first]
    rest = n - first
    while rest > 0:
        k = min(first, rest)
        a.append(k)
        rest -= k
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a or (largest is not None and len(a) == 1):
            return
        k = a[-1] - 1
        a[-1] = k
        r = ones + 1
        while r > k:
            a.append(k)
            r -= k
        if r:
            a.append(r)


def _restricted_desc(n: int, cls: PartitionClass, largest: int | None) -> Iterator[tuple[int, ...]]:
    feasible_memo: dict[tuple[int, int], bool] = {}

    def candidates(remaining: int, prev: int):
        top = remaining if prev == 0 else min(remaining, prev - cls.min_gap)
        for p in range(top, 0, -1):
            if cls.allows(p) and (prev == 0 or cls.pair_ok(prev, p)):
                yield p

    def feasible(remaining: int, prev: int) -> bool:
        if remaining == 0:
            return True
        key = (remaining, prev)
        hit = feasible_memo.get(key)
        if hit is None:
            hit = any(feasible(remaining - p, p) for p in candidates(remaining, prev))
            feasible_memo[key] = hit
        return hit

    if n == 0:
        if largest in (None, 0):
            yield ()
        return
    if largest is None:
        firsts = candidates(n, 0)
    else:
        firsts = iter([largest] if 1 <= largest <= n and cls.allows(largest) else [])
    path: list[int] = []
    rems = [n]
    iters = [firsts]
    while iters:
        p = next(iters[-1], None)
        if p is None:
            iters.pop()
            rems.pop()
            if path:
                path.pop()
            continue
        rem = rems[-1] - p
        if not feasible(rem, p):
            continue
        if rem == 0:
            yield (*path, p)
            continue
        path.append(p)
        rems.append(rem)
        iters.append(candidates(rem, p))


def iter_part_tuples(n: int, cls: PartitionClass = ALL, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Descending part tuples of the partitions of ``n`` in ``cls``.

    Same order as :func:`enumerate_partitions`; skips building
    :class:`Partition` objects.  ``largest`` restricts to one value of the
    largest part, which splits the stream into independent pieces.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if cls is ALL:
        return _all_desc(n, largest)
    return _restricted_desc(n, cls, largest)


def enumerate_partitions(n: int, cls: PartitionClass = ALL, largest: int | None = None) -> Iterator[Partition]:
    """Every partition of ``n`` in ``cls``, lexicographically decreasing."""
    return (Partition._from_desc(t) for t in iter_part_tuples(n, cls, largest))


def nuclear_partitions_with_norm(nu: int) -> Iterator[Partition]:
    """All partitions without 1s whose parts multiply to ``nu``.

    Exhaustive descent over nonincreasing divisor chains; ``nu = 1`` gives ∅.
    """
    if nu < 1:
        raise ValueError(f"norm must be >= 1, got {nu}")

    def descend(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 1:
            yield ()
            return
        for d in reversed(divisors(rest)):
            if 2 <= d <= cap:
                for tail in descend(rest // d, d):
                    yield (d,) + tail

    for parts in descend(nu, nu):
        yield Partition._from_desc(parts)
