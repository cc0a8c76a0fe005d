import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genkummer.graded import HodgeDiamond, diamond_of_abelian_surface, direct_sum, sym_power, tensor
from genkummer.motive import MotiveExpr, MotiveTerm, motive_of_sym_quotient, realize, realize_term
from genkummer.partitions import Partition, enumerate_partitions

D_A = diamond_of_abelian_surface()


@pytest.mark.parametrize(
    "parts, factors, text",
    [
        ((1, 1), ((1, 2),), "Sym^2 h(A)"),
        ((2, 1), ((1, 1), (2, 1)), "h(A) (x) h(A)"),
        ((2, 2, 1), ((1, 1), (2, 2)), "Sym^2 h(A) (x) h(A)"),
    ],
)
def test_motive_of_sym_quotient(parts, factors, text):
    expr = motive_of_sym_quotient(Partition(parts))
    assert len(expr) == 1
    (term,) = expr.terms
    assert term.sym_factors == factors
    assert (term.tate_shift, term.multiplicity) == (0, 1)
    assert str(term) == text
    assert term.partition() == Partition(parts)


def test_realize_examples():
    assert realize(motive_of_sym_quotient(Partition((1, 1)))).betti() == (1, 4, 12, 28, 38, 28, 12, 4, 1)
    assert realize(MotiveExpr((MotiveTerm((), 3, 1),))) == HodgeDiamond({(3, 3): 1})
    cor_n2 = MotiveExpr((MotiveTerm(((1, 2),), 0, 1), MotiveTerm(((2, 1),), 1, 16)))
    assert realize(cor_n2).betti() == (1, 4, 28, 92, 134, 92, 28, 4, 1)


def test_realize_product_of_powers():
    term = MotiveTerm(((1, 1), (2, 2)))
    assert realize_term(term) == tensor(sym_power(D_A, 2), D_A)


def test_term_validation():
    with pytest.raises(ValueError):
        MotiveTerm(((1, 1),), -1, 1)
    with pytest.raises(ValueError):
        MotiveTerm(((1, 1),), 0, 0)
    with pytest.raises(ValueError):
        MotiveTerm(((0, 1),))


def test_terms_merge():
    t = MotiveTerm(((1, 2),), 1, 3)
    expr = MotiveExpr((t, t, MotiveTerm(((2, 1),), 1, 1)))
    assert len(expr) == 2
    assert expr.terms[0].multiplicity == 6
    assert expr.summand_count() == 7


def test_json_round_trip():
    expr = MotiveExpr((MotiveTerm(((1, 2), (3, 1)), 2, 16),), label="x")
    obj = json.loads(expr.dumps())
    assert obj == {
        "label": "x",
        "terms": [{"multiplicity": 16, "parts_multiplicities": {"1": 2, "3": 1}, "tate_shift": 2}],
    }
    assert MotiveExpr.from_json(obj) == expr


terms = st.builds(
    lambda parts, shift, mult: MotiveTerm.of_partition(Partition.from_parts(parts), shift, mult),
    st.lists(st.integers(1, 3), min_size=1, max_size=3),
    st.integers(0, 2),
    st.integers(1, 5),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(terms, max_size=3), st.lists(terms, max_size=3))
def test_realize_is_additive(xs, ys):
    e1, e2 = MotiveExpr(tuple(xs)), MotiveExpr(tuple(ys))
    assert realize(e1 + e2) == direct_sum(realize(e1), realize(e2), 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(terms, max_size=4))
def test_merging_preserves_realization(ts):
    unmerged = HodgeDiamond()
    for t in ts:
        unmerged = direct_sum(unmerged, realize_term(t), t.multiplicity)
    assert realize(MotiveExpr(tuple(ts))) == unmerged


@pytest.mark.parametrize("n", range(1, 8))
def test_sym_quotients_have_zero_euler(n):
    for lam in enumerate_partitions(n):
        assert realize(motive_of_sym_quotient(lam)).euler() == 0
