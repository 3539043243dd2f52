from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import braid3
from semimatroids import _bits
from semimatroids import arrangement as arr
from semimatroids.arrangement import Arrangement, Hyperplane
from semimatroids.linalg import GF, QQ, dot
from semimatroids.matroid import CapError
from semimatroids.poly import BiPoly, T, UniPoly, eval_uni
from semimatroids.semimatroid import characteristic, flats

TWO_POINTS = Arrangement(1, [([1], 0), ([1], 1)])
DOUBLE_ZERO = Arrangement(1, [([1], 0), ([1], 0)])


def oracle_family(A):
    fam = oracles.arrangement_family(A.normals, A.offsets)
    return {oracles.set_to_mask(X): r for X, r in fam.items()}


# construction


def test_construction():
    A = Arrangement(2, [Hyperplane((1, 0), 0), ([0, 1], "1/2")])
    assert A.offsets == [0, Fraction(1, 2)] and A.field == QQ
    with pytest.raises(ValueError):
        Arrangement(2, [([1], 0)])
    with pytest.raises(CapError):
        Arrangement(1, [([1], k) for k in range(21)])
    assert Arrangement(2, [([1, 1], 3)], GF(2)).offsets == [1]


# central family and semimatroid


def test_central_family_examples():
    assert arr.central_family(TWO_POINTS) == {0: 0, 1: 1, 2: 1}
    B = braid3()
    assert set(arr.central_family(B)) == set(range(8))
    loop = Arrangement(2, [([0, 0], 0), ([1, 0], 0)])
    fam = arr.central_family(loop)
    assert fam[0b01] == 0 and arr.semimatroid_of(loop).has_loop()
    assert 0b01 not in arr.central_family(Arrangement(1, [([0], 1)]))


def test_central_family_matches_sympy(arrangement_corpus):
    for A in arrangement_corpus:
        assert arr.central_family(A) == oracle_family(A)


def test_semimatroid_examples():
    S = arr.semimatroid_of(TWO_POINTS)
    assert characteristic(S) == T - 2 and arr.characteristic_by_sum(TWO_POINTS) == T - 2
    assert arr.characteristic_by_sum(braid3()) == UniPoly.from_descending([1, -3, 2, 0])
    loop = Arrangement(2, [([0, 0], 0), ([1, 0], 0)])
    assert arr.characteristic_by_sum(loop).is_zero()


def test_polynomial_examples():
    p = arr.arrangement_polynomials(TWO_POINTS)
    assert p.agree and p.chi == T - 2 and p.tutte == BiPoly({(1, 0): 1, (0, 0): 1})
    p = arr.arrangement_polynomials(Arrangement(3, []))
    assert p.agree and p.chi == T**3
    p = arr.arrangement_polynomials(braid3())
    assert p.agree and p.tutte == BiPoly({(2, 0): 1, (1, 0): 1, (0, 1): 1})


def test_intersection_poset_is_flat_lattice(arrangement_corpus):
    for A in arrangement_corpus[:60]:
        S = arr.semimatroid_of(A)
        L = arr.intersection_semilattice(A)
        P = L.poset
        image = {X: A.intersection_key(X) for X in flats(S)}
        assert sorted(image.values()) == sorted(L.keys)
        for X, kx in image.items():
            for Y, ky in image.items():
                assert (X & ~Y == 0) == P.leq(P.index(kx), P.index(ky))


# restriction and localization


def test_localization_restriction_examples():
    B = braid3()
    loc, res = arr.localization_restriction(B, 0b001)
    assert len(loc) == 1 and not res.degenerate
    # on x1 = x2 the traces of x3 = x2 and x3 = x1 coincide
    assert res.arrangement.dim == 2 and res.characteristic() == T * (T - 1)
    _, res = arr.localization_restriction(B, 0b001, all_hyperplanes=True)
    assert res.degenerate and res.characteristic().is_zero()
    loc, res = arr.localization_restriction(B, 0)
    assert len(loc) == 0 and res.arrangement.dim == 3 and len(res.arrangement) == 3
    loc, res = arr.localization_restriction(TWO_POINTS, 0b01)
    assert len(loc) == 1 and len(res.arrangement) == 0 and res.arrangement.dim == 0
    assert res.characteristic() == 1


def test_localization_restriction_rejects_non_flats():
    with pytest.raises(ValueError):
        arr.localization_restriction(TWO_POINTS, 0b11)
    with pytest.raises(ValueError):
        arr.localization_restriction(DOUBLE_ZERO, 0b01)


def test_restriction_chart_is_faithful(arrangement_corpus):
    # each trace, pulled back through the chart, is the parent hyperplane
    for A in arrangement_corpus[:40]:
        for X in arr.central_family(A):
            res = arr.restriction_at(A, X)
            for k, e in enumerate(res.labels):
                h = A.hyperplanes[e]
                t = res.arrangement.hyperplanes[k]
                assert list(t.normal) == [dot(h.normal, b) for b in res.basis]
                assert t.offset == h.offset - dot(h.normal, res.base)


def test_restriction_is_contraction(arrangement_corpus):
    from semimatroids.semimatroid import contract

    for A in arrangement_corpus[:40]:
        S = arr.semimatroid_of(A)
        for X in flats(S):
            res = arr.restriction_at(A, X)
            C = contract(S, X)
            assert characteristic(C).shift(res.arrangement.dim - C.r) == res.characteristic()


def test_hcf_examples():
    for A in (TWO_POINTS, braid3(), Arrangement(2, [])):
        T_A, a, b = arr.hcf_sides(A)
        assert a == T_A and b == T_A


# circuits and the discriminantal arrangement


def test_affine_circuit_examples():
    assert arr.affine_circuits(DOUBLE_ZERO) == [0b11]
    assert arr.affine_circuits(TWO_POINTS) == []
    assert arr.affine_circuits(braid3()) == [0b111]
    # x=0, x=1, x=2: every pair has empty intersection
    assert arr.affine_circuits(Arrangement(1, [([1], 0), ([1], 1), ([1], 2)])) == []


def test_circuit_vector_examples():
    assert arr.circuit_vectors(DOUBLE_ZERO) == [arr.CircuitVector(0b11, (1, -1))]
    assert arr.circuit_vectors(braid3()) == [arr.CircuitVector(0b111, (1, 1, -1))]
    assert arr.circuit_vectors(Arrangement(2, [([1, 0], 0), ([0, 1], 0)])) == []
    with pytest.raises(ValueError):
        arr.circuit_vectors(TWO_POINTS)


def test_circuit_vectors_are_kernel_vectors(central_corpus):
    for A in central_corpus:
        for cv in arr.circuit_vectors(A):
            assert cv.coefficients[min(_bits.elements(cv.circuit))] == 1
            support = _bits.from_elements(e for e, c in enumerate(cv.coefficients) if c)
            assert support == cv.circuit
            for i in range(A.dim):
                assert sum(c * n[i] for c, n in zip(cv.coefficients, A.normals)) == 0


def test_discriminantal_examples():
    d = arr.discriminantal(DOUBLE_ZERO)
    assert d.dim == 2 and d.normals == [[1, -1]]
    assert len(arr.discriminantal(Arrangement(2, [([1, 0], 0), ([0, 1], 0)]))) == 0
    d = arr.discriminantal(braid3())
    assert d.dim == 3 and d.normals == [[1, 1, -1]]
    # three copies of x=0: circuits {1,2},{1,3},{2,3} give three distinct normals
    assert len(arr.discriminantal(Arrangement(1, [([1], 0)] * 3))) == 3


def test_discriminantal_has_one_hyperplane_per_circuit(central_corpus):
    # distinct circuits have distinct supports, so no two normalized vectors coincide
    for A in central_corpus:
        d = arr.discriminantal(A)
        assert d.dim == len(A) and d.is_central()
        assert sorted(map(tuple, d.normals)) == sorted(cv.coefficients for cv in arr.circuit_vectors(A))
        assert len(d) == len(arr.normal_matroid(A).circuits())


def test_translation_assigning_examples():
    alpha = arr.assigning_of_translation(DOUBLE_ZERO, [0, 1])
    assert alpha.labels == {0b11: 1}
    assert arr.assigning_of_translation(DOUBLE_ZERO, [0, 0]).labels == {0b11: 0}
    assert arr.assigning_of_translation(braid3(), [1, 0, 0]).labels == {0b111: 1}
    assert arr.translate(DOUBLE_ZERO, [0, 1]).offsets == [0, 1]


SMALL_CENTRAL = [
    DOUBLE_ZERO,
    braid3(),
    Arrangement(1, [([1], 0)] * 3),
    Arrangement(2, [([1, 0], 0), ([0, 1], 0), ([1, 1], 0), ([1, -1], 0)]),
]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL_CENTRAL), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_translation_assigning_routes_agree(A_o, a):
    a = a[: len(A_o)]
    assert arr.assigning_by_affine_circuits(A_o, a) == arr.assigning_by_circuit_vectors(A_o, a)


# classification


def test_representative_point_examples():
    delta = arr.discriminantal(DOUBLE_ZERO)
    assert arr.representative_point(delta, 0b1) == [1, 1]
    assert arr.representative_point(delta, 0) == [1, 2]
    empty = Arrangement(3, [])
    assert arr.representative_point(empty, 0) == [0, 0, 0]


def test_classification_examples():
    classes = arr.classify_translations(DOUBLE_ZERO)
    assert len(classes) == 2
    assert {len(c.semimatroid.central) for c in classes} == {3, 4}
    assert len(arr.classify_translations(Arrangement(2, [([1, 0], 0), ([0, 1], 0)]))) == 1
    classes = arr.classify_translations(braid3())
    assert len(classes) == 2
    labels = sorted(c.assigning.labels[0b111] for c in classes)
    assert labels == [0, 1]
    with pytest.raises(ValueError):
        arr.classify_translations(TWO_POINTS)
    with pytest.raises(ValueError):
        arr.classify_translations(DOUBLE_ZERO.reduce_mod(3))


def test_representatives_lie_in_their_strata(central_corpus):
    for A_o in central_corpus:
        delta = arr.discriminantal(A_o)
        for c in arr.classify_translations(A_o):
            assert arr.stratum_of(delta, c.representative) == c.flat


# finite fields


def test_count_examples():
    assert arr.count_points_finite_field(braid3().reduce_mod(5)) == 60
    assert arr.count_points_finite_field(TWO_POINTS.reduce_mod(5)) == 3
    loop = Arrangement(2, [([0, 0], 0), ([1, 0], 0)], GF(3))
    assert arr.count_points_finite_field(loop) == 0
    with pytest.raises(ValueError):
        arr.count_points_finite_field(TWO_POINTS)
    with pytest.raises(CapError):
        arr.count_points_finite_field(Arrangement(8, [], GF(11)))


def test_reduce_mod_clears_denominators():
    A = Arrangement(1, [([Fraction(1, 2)], Fraction(1, 3))]).reduce_mod(5)
    # x/2 = 1/3 becomes 3x = 2
    assert A.normals == [[3]] and A.offsets == [2]


def test_count_matches_brute_force_oracle(arrangement_corpus):
    for A in arrangement_corpus[:40]:
        for q in (2, 3):
            Aq = A.reduce_mod(q)
            expected = oracles.count_points(Aq.normals, Aq.offsets, q, A.dim)
            assert arr.count_points_finite_field(Aq, chunk=7) == expected
            assert expected == eval_uni(arr.characteristic_by_sum(Aq), q)
