import pytest

from genkummer import kummer
from genkummer.graded import HodgeDiamond, InexactDivisionError, diamond_of_abelian_surface, tensor
from genkummer.kummer import (
    expected_euler_characteristic,
    kummer_diamond_via_corollary,
    kummer_diamond_via_theorem,
    product_motive,
    semi_small_defect,
    strata_catalog,
    stratum_motive,
    verify_suite,
)
from genkummer.motive import MotiveTerm, realize
from genkummer.partitions import Partition, enumerate_partitions, torsion_component_count
from oracles import basis_of, binomial_row, poly_divide, sigma1, super_sym_bruteforce

D_A = diamond_of_abelian_surface()


def P(*parts):
    return Partition(parts)


def test_strata_n2():
    report = strata_catalog(2)
    s2, s11 = report.strata
    assert s2.partition == P(2)
    assert (s2.torsion_multiplicity, s2.dim_total_stratum, s2.dim_fiber) == (16, 1, 1)
    assert (s11.torsion_multiplicity, s11.dim_total_stratum, s11.dim_fiber) == (1, 2, 0)
    assert report.total_strata_count == 17
    assert report.semi_small_verified


def test_strata_n1_and_n3():
    (only,) = strata_catalog(1).strata
    assert (only.dim_base_stratum, only.dim_total_stratum, only.dim_fiber, only.tate_shift) == (0, 0, 0, 0)
    assert strata_catalog(3).total_strata_count == 83
    with pytest.raises(ValueError):
        strata_catalog(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_stratum_invariants(n):
    report = strata_catalog(n)
    assert [s.partition for s in report.strata] == enumerate_partitions(n)
    assert report.total_strata_count == sum(torsion_component_count(p) for p in enumerate_partitions(n))
    for s in report.strata:
        assert s.dim_total_stratum == s.dim_base_stratum + s.dim_fiber
        assert (2 * n - 2) - s.dim_base_stratum == 2 * s.dim_fiber
        assert 0 <= s.dim_fiber <= n - 1
        assert s.is_semi_small()


def test_semi_small_defect():
    assert semi_small_defect(4, 2, 1) == 0
    assert semi_small_defect(4, 0, 1) == 2
    assert semi_small_defect(4, 2, 2) < 0


def test_product_motive():
    expr = product_motive(2)
    assert expr.terms == (MotiveTerm(((2, 1),), 1, 16), MotiveTerm(((1, 2),), 0, 1))
    assert realize(expr).betti() == (1, 4, 28, 92, 134, 92, 28, 4, 1)
    assert product_motive(1).terms == (MotiveTerm(((1, 1),), 0, 1),)
    with pytest.raises(ValueError):
        product_motive(0)


def test_stratum_motive_examples():
    assert stratum_motive(P(1, 1), 2).betti() == (1, 0, 6, 0, 1)
    assert stratum_motive(P(2), 2) == HodgeDiamond.unit()
    assert stratum_motive(P(2, 1), 3).betti() == (1, 4, 6, 4, 1)
    with pytest.raises(ValueError):
        stratum_motive(P(2, 1), 4)


def test_kummer_diamond_examples():
    k3 = kummer_diamond_via_theorem(2)
    assert k3.betti() == (1, 0, 22, 0, 1)
    assert (k3[1, 1], k3[2, 0], k3[0, 2]) == (20, 1, 1)
    assert kummer_diamond_via_corollary(2) == k3
    assert kummer_diamond_via_theorem(3).betti()[2] == 7
    assert kummer_diamond_via_theorem(1) == HodgeDiamond.unit()
    assert kummer_diamond_via_corollary(4).euler() == 448
    assert kummer_diamond_via_corollary(2).max_degree() == 4


def _betti_oracle(n):
    """Betti numbers of K^[n] from brute-force symmetric powers and univariate division."""
    basis = dict(D_A.items())
    sym_betti = {}
    for k in range(1, n + 1):
        b = [0] * (4 * k + 1)
        for (p, q), h in super_sym_bruteforce(basis, k).items():
            b[p + q] += h
        sym_betti[k] = b
    total = [0] * (4 * n + 1)
    for lam in enumerate_partitions(n):
        poly = [1]
        for count in lam.multiplicities.values():
            prod = [0] * (len(poly) + len(sym_betti[count]) - 1)
            for i, x in enumerate(poly):
                for j, y in enumerate(sym_betti[count]):
                    prod[i + j] += x * y
            poly = prod
        shift = 2 * (n - lam.length)
        for i, x in enumerate(poly):
            total[i + shift] += torsion_component_count(lam) * x
    return tuple(int(x) for x in poly_divide(total, binomial_row(4)))


@pytest.mark.parametrize("n", range(2, 6))
def test_betti_against_independent_oracle(n):
    assert kummer_diamond_via_corollary(n).betti() == _betti_oracle(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_routes_and_product_formula(n):
    corollary = kummer_diamond_via_corollary(n)
    assert kummer_diamond_via_theorem(n) == corollary
    assert tensor(D_A, corollary) == realize(product_motive(n))


@pytest.mark.parametrize("n", range(2, 11))
def test_structure(n):
    d = kummer_diamond_via_corollary(n)
    top = 2 * (n - 1)
    for (p, q), h in d.items():
        assert 0 <= p <= top and 0 <= q <= top
        assert d[q, p] == h == d[top - p, top - q]
    b = d.betti()
    assert (b[0], b[1], b[-1], len(b) - 1) == (1, 0, 1, 4 * (n - 1))
    assert d[2, 0] == 1
    assert b[2] == (22 if n == 2 else 7)


@pytest.mark.parametrize("n", range(2, 9))
def test_euler(n):
    assert kummer_diamond_via_corollary(n).euler() == n**3 * sigma1(n) == expected_euler_characteristic(n)


def test_verify_suite():
    assert verify_suite(2).passed
    report = verify_suite(10)
    assert report.passed
    assert {c.n for c in report.checks} == set(range(2, 11))
    with pytest.raises(ValueError):
        verify_suite(1)


def test_verify_suite_reports_failures(monkeypatch):
    monkeypatch.setattr(kummer, "kummer_diamond_via_theorem", lambda n: HodgeDiamond.unit())
    report = verify_suite(3)
    assert not report.passed
    assert {(c.n, c.name) for c in report.failures()} == {(2, "route_equality"), (3, "route_equality")}


def test_verify_suite_reports_inexact_division(monkeypatch):
    def broken(lam):
        raise InexactDivisionError("boom")

    monkeypatch.setattr(kummer, "stratum_motive", broken)
    report = verify_suite(2)
    assert not report.passed
    assert report.failures()[0].name == "exact_divisibility"
