import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from partnorm.partitions import (
    ALL, DISTINCT, EMPTY, ODD_PARTS, ROGERS_RAMANUJAN, enumerate_partitions, from_parts,
)
from partnorm.stats import (
    EULER_GAMMA, Source, brute_extremal_norm, brute_min_size_for_norm, dotted_count,
    expected_norm, iter_macmahon_samples, k_dotted_count, lehmer_sum, lehmer_sum_distinct,
    macmahon_coeff, macmahon_expected_multiplicity, macmahon_probabilities, max_norm,
    max_norm_distinct, max_norm_odd, max_norm_rr, min_size_for_norm, multicolor_count,
    rr_witness, sample_macmahon, sample_macmahon_multiplicities, triangular_decomposition,
)

# largest product of parts over partitions of n, n = 0..20 (OEIS A000792)
MAX_NORM = [1, 1, 2, 3, 4, 6, 9, 12, 18, 27, 36, 54, 81, 108, 162, 243, 324, 486, 729, 972, 1458]


def P(*parts):
    return from_parts(parts)


def test_max_norm_examples():
    r = max_norm(10)
    assert r.value == 36 and set(r.witnesses) == {P(4, 3, 3), P(3, 3, 2, 2)}
    assert max_norm(1).witnesses == (P(1),)
    assert max_norm(6).value == 9 and max_norm(6).witnesses == (P(3, 3),)
    assert max_norm(0).witnesses == (EMPTY,)
    assert [max_norm(n).value for n in range(21)] == MAX_NORM


def test_odd_examples():
    assert max_norm_odd(8).witnesses == (P(5, 3),) and max_norm_odd(8).value == 15
    assert max_norm_odd(9).value == 27
    assert max_norm_odd(2).witnesses == (P(1, 1),)


def test_distinct_examples():
    r = max_norm_distinct(7)
    assert r.witnesses == (P(4, 3),) and r.value == 12 and r.formula_value == 12
    assert max_norm_distinct(2).witnesses == (P(2),)
    r8 = max_norm_distinct(8)
    assert r8.witnesses == (P(5, 3),) and r8.value == 15 and r8.source is Source.BRUTE_FORCE
    assert r8.notes


def test_distinct_gaps():
    gaps = [n for n in range(2, 60) if triangular_decomposition(n) is None]
    assert gaps == [(k + 1) * (k + 2) // 2 - 2 for k in range(2, 10)]
    assert gaps[:6] == [4, 8, 13, 19, 26, 34]


def test_rr_examples():
    assert max_norm_rr(6).witnesses == (P(4, 2),) and max_norm_rr(6).value == 8
    assert max_norm_rr(7).witnesses == (P(5, 2),) and max_norm_rr(7).value == 10
    assert max_norm_rr(9).witnesses == (P(6, 3),) and max_norm_rr(9).value == 18


@pytest.mark.parametrize("k", range(1, 6))
def test_rr_case_v_formula_is_twice_the_witness(k):
    # n = k(k+1) + 2k; witness (2k+2, 2k, ..., 4)
    n = k * (k + 1) + 2 * k
    r = max_norm_rr(n)
    assert r.witnesses == (rr_witness(k, 2 * k),)
    assert r.witnesses[0].parts == tuple(range(2 * k + 2, 3, -2))
    assert r.value == 2**k * math.factorial(k + 1) == brute_extremal_norm(n, ROGERS_RAMANUJAN).value
    assert r.formula_value == 2 * r.value
    assert "case v" in r.notes


@pytest.mark.parametrize("fn,cls", [(max_norm, ALL), (max_norm_odd, ODD_PARTS),
                                    (max_norm_distinct, DISTINCT), (max_norm_rr, ROGERS_RAMANUJAN)],
                         ids=["all", "odd", "distinct", "rr"])
def test_closed_forms_against_oracle(fn, cls):
    for n in range(1, 41):
        r = fn(n, check=True)
        oracle = brute_extremal_norm(n, cls)
        assert r.value == oracle.value and set(r.witnesses) == set(oracle.witnesses), n
        assert all(w.norm == r.value and w.size == n and w in cls for w in r.witnesses)
        if r.source is Source.CLOSED_FORM:
            assert r.agreement is True


def test_brute_examples():
    assert brute_extremal_norm(10, ALL).value == 36 and len(brute_extremal_norm(10, ALL).witnesses) == 2
    for n in range(1, 12):
        assert brute_extremal_norm(n, ALL, "min").witnesses == (from_parts([1] * n),)
    for n in range(3, 15):
        r = brute_extremal_norm(n, DISTINCT, "min")
        assert r.value == n - 1 and r.witnesses == (P(n - 1, 1),)
    with pytest.raises(ValueError, match="no partitions in class"):
        brute_extremal_norm(2, ROGERS_RAMANUJAN.__class__(ROGERS_RAMANUJAN.tag, "odd-rr", min_gap=2,
                                                          allows=lambda p: p % 2 == 1))


def test_brute_parallel_split_is_deterministic():
    for cls in (ALL, DISTINCT, ROGERS_RAMANUJAN):
        assert brute_extremal_norm(30, cls, jobs=4) == brute_extremal_norm(30, cls)


def test_min_size_examples():
    r = min_size_for_norm(12)
    assert r.size == 7 and set(r.witnesses) == {P(3, 2, 2), P(4, 3)}
    assert min_size_for_norm(1).size == 0 and min_size_for_norm(1).witnesses == (EMPTY,)
    assert min_size_for_norm(7).witnesses == (P(7),)


def test_min_size_exhaustive():
    for nu in range(1, 301):
        a, b = min_size_for_norm(nu), brute_min_size_for_norm(nu)
        assert a.size == b.size and set(a.witnesses) == set(b.witnesses), nu
        assert all(w.norm == nu and w.size == a.size and 1 not in w.parts for w in a.witnesses)
        assert len(a.beta_range) == len(a.witnesses)


def test_macmahon_coefficients():
    assert macmahon_coeff(P(2, 1)) == Fraction(1, 2)
    assert macmahon_coeff(P(1, 1)) == Fraction(1, 2)
    assert macmahon_coeff(EMPTY) == 1
    assert macmahon_expected_multiplicity(2, 1) == 1
    assert macmahon_expected_multiplicity(2, 2) == Fraction(1, 2)
    assert macmahon_expected_multiplicity(5, 3) == Fraction(1, 3)
    for n in range(1, 19):
        for i in range(1, n + 1):
            assert macmahon_expected_multiplicity(n, i) == Fraction(1, i)


def test_macmahon_matches_cycle_counts():
    # permutations of 6 points with each cycle type, by direct count
    from itertools import permutations
    counts = {}
    for perm in permutations(range(6)):
        seen, lens = set(), []
        for start in range(6):
            if start in seen:
                continue
            j, L = start, 0
            while j not in seen:
                seen.add(j)
                j = perm[j]
                L += 1
            lens.append(L)
        lam = from_parts(lens)
        counts[lam] = counts.get(lam, 0) + 1
    assert {k: Fraction(v, 720) for k, v in counts.items()} == macmahon_probabilities(6)


def test_sampler():
    assert all(lam == P(1) for lam in iter_macmahon_samples(1, 20))
    rows = sample_macmahon_multiplicities(20, 100_000, seed=7)
    assert (rows @ np.arange(1, 21) == 20).all()
    mean, se = rows[:, 0].mean(), rows[:, 0].std(ddof=1) / math.sqrt(len(rows))
    assert abs(mean - 1) < 3 * se
    a = sample_macmahon_multiplicities(9, 50, seed=3)
    assert (a == sample_macmahon_multiplicities(9, 50, seed=3)).all()
    assert sample_macmahon(12, seed=5) == sample_macmahon(12, seed=5)
    two = sample_macmahon_multiplicities(2, 40_000, seed=11)
    assert abs((two[:, 1] == 1).mean() - 0.5) < 0.01


def test_dotted_counts():
    lam = P(4, 3, 3, 1)
    assert dotted_count(lam) == 36
    assert k_dotted_count(lam, 2) == 0
    assert k_dotted_count(P(4, 3, 3), 2) == 6 * 3 * 3
    assert multicolor_count(P(5, 5, 3, 3, 3, 1)) == 8100


def test_lehmer_examples():
    assert lehmer_sum(3) == Fraction(11, 6)
    assert lehmer_sum_distinct(3) == Fraction(5, 6)
    assert lehmer_sum(0) == 1


def test_lehmer_matches_enumeration():
    for n in range(26):
        assert lehmer_sum(n) == sum(Fraction(1, lam.norm) for lam in enumerate_partitions(n))
        assert lehmer_sum_distinct(n) == sum(Fraction(1, lam.norm) for lam in enumerate_partitions(n, DISTINCT))


def test_lehmer_trend_small():
    target = math.exp(-EULER_GAMMA)
    d = [abs(float(lehmer_sum(n) / n) - target) for n in (50, 200)]
    assert d[1] < d[0]


def test_expected_norm():
    assert expected_norm(1).value == 1
    assert expected_norm(2).value == pytest.approx(math.sqrt(2), rel=1e-15)
    assert expected_norm(3).value == pytest.approx(2 ** 0.5 * 3 ** (1 / 3), rel=1e-15)
    assert expected_norm(3).log_sum == pytest.approx(math.log(2) / 2 + math.log(3) / 3, rel=1e-15)


@given(st.integers(1, 14))
def test_expected_norm_is_macmahon_geometric_mean(n):
    log_mean = math.fsum(float(macmahon_coeff(lam)) * math.log(lam.norm) for lam in enumerate_partitions(n))
    assert log_mean == pytest.approx(expected_norm(n).log_sum, rel=1e-12, abs=1e-14)


def test_arithmetic_mean_differs():
    # the product formula describes exp(E[log N]); E[N] itself is larger
    arith = sum(macmahon_coeff(lam) * lam.norm for lam in enumerate_partitions(2))
    assert arith == Fraction(3, 2) and expected_norm(2).value < 1.5


@given(st.integers(0, 18))
def test_fine_sum(n):
    assert sum(macmahon_coeff(lam) for lam in enumerate_partitions(n)) == 1
