"""Smoke tests for the partnorm extension module."""

import math
from fractions import Fraction

import pytest

import partnorm as pn


def test_partition_basics():
    lam = pn.Partition([3, 1, 3, 4])
    assert lam.size == 11
    assert lam.length == 4
    assert lam.parts == [4, 3, 3, 1]
    assert lam.norm() == 36
    assert lam.rank == 0
    assert lam.freq == [(1, 1), (3, 2), (4, 1)]

    empty = pn.Partition()
    assert empty.size == 0
    assert empty.norm() == 1

    assert lam.delete_part(3) == pn.Partition([4, 3, 1])
    with pytest.raises(ValueError):
        pn.Partition([0, 2])
    with pytest.raises(ValueError):
        lam.delete_part(5)


def test_enumeration():
    assert len(pn.enumerate_partitions(4, "all")) == 5
    rr7 = pn.enumerate_partitions(7, "rr")
    assert [p.parts for p in rr7] == [[7], [6, 1], [5, 2]]
    assert pn.pentagonal_p(50) == 204226
    assert [int(c) for c in pn.euler_partition_coeffs(10)] == [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42,
    ]
    with pytest.raises(ValueError):
        pn.enumerate_partitions(4, "nosuch")


def test_norm_statistics():
    r = pn.max_norm(10)
    assert r.value == 36
    assert [w.parts for w in r.witnesses] == [[4, 3, 3], [3, 3, 2, 2]]
    assert r.source == pn.ExtremalSource.ClosedForm

    gap = pn.max_norm_distinct(8)
    assert gap.source == pn.ExtremalSource.BruteForce
    assert gap.value == 15

    ms = pn.min_size_for_norm(12)
    assert ms.size == 7
    assert {tuple(w.parts) for w in ms.witnesses} == {(3, 2, 2), (4, 3)}

    assert pn.macmahon_coeff(pn.Partition([2, 1])) == Fraction(1, 2)
    assert pn.macmahon_expected_multiplicity(5, 3) == Fraction(1, 3)
    assert pn.lehmer_sum(3) == Fraction(11, 6)
    assert pn.lehmer_sum_distinct(3) == Fraction(5, 6)
    assert pn.multicolor_count(pn.Partition([5, 5, 3, 3, 3, 1])) == 8100
    assert pn.p_dot(4) == 14


def test_sampling_determinism():
    a = pn.sample_macmahon_many(12, 5, seed=99)
    b = pn.sample_macmahon_many(12, 5, seed=99)
    assert [p.parts for p in a] == [p.parts for p in b]
    assert all(p.size == 12 for p in a)


def test_exact_zeta_values():
    z = pn.fixed_length_zeta_faa_exact(2, 2)
    assert z.coeff == Fraction(7, 360)
    assert z.power == 4
    assert str(z) == "7/360 * pi^4"
    for k in range(1, 5):
        assert pn.fixed_length_zeta_faa_exact(2, k) == pn.fixed_length_zeta_closed_s2(k)
    assert pn.riemann_zeta_even_exact(1).coeff == Fraction(1, 6)
    assert pn.bernoulli_number(4) == Fraction(-1, 30)


def test_numeric_zeta_paths():
    prod = pn.partition_zeta_product("primes", 2.0, 1e-6)
    assert abs(prod.value - math.pi**2 / 6) <= 1e-6
    assert prod.tail_bound <= 1e-6

    nuc = pn.nuclear_zeta_dirichlet(3.0, 500)
    assert nuc.tail_bound is None

    gold = pn.golden_ratio_series(10)
    assert abs(gold.value - pn.golden_ratio_target()) < 1e-12

    direct = pn.fixed_length_zeta_direct(2.0, 2, 2000)
    exact = pn.fixed_length_zeta_faa_exact(2, 2).to_float()
    assert direct.value <= exact
    assert abs(direct.value - exact) / exact < 1e-3

    with pytest.raises(ValueError):
        pn.partition_zeta_product("primes", 1.0, 1e-6)


def test_phi_and_subpartitions():
    lam = pn.Partition([2, 2])
    assert pn.phi_partition(lam) == 2
    assert len(pn.subpartitions(lam)) == 3
    assert pn.phi_divisor_sum_check(lam)["status"] == "ExactPass"


def test_verify_suites():
    names = pn.verify_suite_names()
    assert "fine" in names and "extremal-rr" in names
    reports = pn.run_verify_suite("fine", n_max=12)
    assert len(reports) == 13
    assert all(r["status"] == "ExactPass" for r in reports)
    assert pn.verify_passes(reports)

    rr = pn.run_verify_suite("extremal-rr", n_max=12)
    flagged = [r for r in rr if r["status"] == "Discrepancy"]
    assert flagged and all(r["paper_flagged"] for r in flagged)
    assert pn.verify_passes(rr, allow_paper_flags=True)
    assert not pn.verify_passes(rr, allow_paper_flags=False)
