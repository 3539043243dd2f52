from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

import oracles
from semimatroids.matroid import Matroid, matroid_polynomials
from semimatroids.poly import (
    BiPoly,
    T,
    UniPoly,
    WhitneySeq,
    eval_uni,
    is_log_concave,
    is_unimodal,
    poly_from_json,
    poly_to_json,
    shape_report,
    specialize_bi,
    substitute_product,
    whitney_sequence,
)

unipolys = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=6).map(UniPoly)
bipolys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-9, 9), max_size=6
).map(BiPoly)


def test_zero_polynomial_has_sentinel_degree():
    assert UniPoly().degree == -1
    assert UniPoly({3: 0}).is_zero()
    assert UniPoly({2: 1, 0: 0}).terms() == [(2, 1)]


def test_eval_examples():
    # t^2 - 4t + 3 is chi(U_{2,4}), rebuilt from the 16-term subset sum
    fam = {oracles.mask_to_set(X): r for X, r in Matroid.uniform(2, 4).rank_table.items()}
    p = UniPoly.from_descending([1, -4, 3])
    assert oracles.to_sympy(p) == oracles.chi(fam)
    assert eval_uni(p, 3) == 0
    assert eval_uni(UniPoly(), 7) == 0
    assert eval_uni(UniPoly.constant(1), -1) == 1
    assert eval_uni(p, Fraction(1, 2)) == Fraction(5, 4)


def test_u24_matroid_polynomials_match_subset_sum_oracle():
    M = Matroid.uniform(2, 4)
    fam = {oracles.mask_to_set(X): r for X, r in M.rank_table.items()}
    chi, tut = matroid_polynomials(M)
    assert oracles.to_sympy(chi) == oracles.chi(fam)
    assert oracles.to_sympy(tut) == oracles.tutte(fam)
    assert chi == UniPoly.from_descending([1, -4, 3])
    assert tut == BiPoly({(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1})


def test_specialize_examples():
    semi = BiPoly({(2, 0): 1, (1, 0): 2, (0, 0): 3})
    assert specialize_bi(semi, 1 - T, 0, 2) == UniPoly.from_descending([1, -4, 6])
    assert specialize_bi(BiPoly.constant(1), T * T, 1 + T, 5) == UniPoly.constant(-1)
    assert specialize_bi(BiPoly.constant(1), T * T, 1 + T, 0) == 1
    mat = BiPoly({(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1})
    assert specialize_bi(mat, 1 - T, 0, 2) == UniPoly.from_descending([1, -4, 3])


def test_whitney_examples():
    assert whitney_sequence(UniPoly.from_descending([1, -4, 6]), 2).values == (1, 4, 6)
    assert whitney_sequence(UniPoly.from_descending([1, -4, 3]), 2).values == (1, 4, 3)
    assert whitney_sequence(UniPoly.constant(1), 0).values == (1,)
    assert whitney_sequence(UniPoly(), 3).values == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        whitney_sequence(UniPoly.from_descending([1, 0, 0, 0]), 2)
    with pytest.raises(ValueError):
        WhitneySeq((1, 2), 3)


@pytest.mark.parametrize("w", [(1, 4, 6), (1, 3, 2), (1, 1)])
def test_shape_examples(w):
    rep = shape_report(WhitneySeq(w, len(w) - 1))
    assert rep.alternating_nonzero and rep.unimodal and rep.log_concave and rep.ok


def test_shape_negatives():
    assert not is_unimodal([1, 3, 1, 3])
    assert not is_log_concave([1, 1, 4])
    assert not shape_report(WhitneySeq((1, 0, 1), 2)).alternating_nonzero
    assert not shape_report(WhitneySeq((2, 3), 1)).alternating_nonzero


def test_rendering_and_json_round_trip():
    p = UniPoly.from_descending([1, -4, 3])
    assert str(p) == "t**2 - 4*t + 3"
    assert poly_to_json(p) == [[0, "3"], [1, "-4"], [2, "1"]]
    b = BiPoly({(1, 0): 2, (0, 2): -1})
    assert poly_to_json(b) == [[[0, 2], "-1"], [[1, 0], "2"]]
    assert poly_from_json(poly_to_json(b)) == b
    assert str(UniPoly()) == "0"


def test_substitute_product():
    p = UniPoly.from_descending([1, -4, 3])
    assert substitute_product(p) == BiPoly({(2, 2): 1, (1, 1): -4, (0, 0): 3})


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        UniPoly({-1: 2})
    with pytest.raises(ValueError):
        UniPoly({1: Fraction(1, 2)})
    with pytest.raises(ValueError):
        (T ** -1)


@given(unipolys, unipolys, unipolys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p - p).is_zero()
    assert p + 0 == p and p * 1 == p


@given(unipolys, unipolys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(unipolys, unipolys)
def test_multiplication_matches_sympy(p, q):
    assert oracles.to_sympy(p * q) == sp.expand(oracles.to_sympy(p) * oracles.to_sympy(q))


@given(bipolys, bipolys)
def test_bipoly_subs_matches_sympy(p, q):
    t, s = oracles.t, oracles.s
    expected = sp.expand(oracles.to_sympy(p).subs({t: 1 - t, s: 0}))
    assert oracles.to_sympy(specialize_bi(p, 1 - T, 0)) == expected
    assert oracles.to_sympy(p * q) == sp.expand(oracles.to_sympy(p) * oracles.to_sympy(q))
    assert p.subs(t=0).subs(s=0) == BiPoly.constant(p.coeff(0, 0))


@given(st.lists(st.integers(0, 50), min_size=1, max_size=6))
def test_whitney_reconstruction_is_identity(ws):
    w = WhitneySeq(tuple(ws), len(ws) - 1)
    assert whitney_sequence(w.to_poly(), w.rank) == w
