import random

import pytest

from invsemi.errors import (
    MemberAlready,
    NotCoprime,
    NotInApery,
    NotMember,
    NotMinimalGlue,
)
from invsemi.gluing import (
    GluingSpec,
    find_gluing_decompositions,
    glue,
    glued_inverse_polynomial,
    glued_monomial_check,
    symmetric_extension_test,
    to_canonical_coordinates,
)
from invsemi.invpoly import inverse_polynomial
from invsemi.semigroup import NumericalSemigroup


def NS(gens):
    return NumericalSemigroup(gens)


def test_glue_section3_example1():
    spec = GluingSpec(NS([3, 4]), NS([2, 3]), 5, 7)
    res = glue(spec)
    assert res.semigroup.generators == (14, 15, 20, 21)
    assert res.predicted.frobenius == 5 * 5 + 7 * 1 + 35 == 67
    assert res.predicted.is_symmetric

    J82 = glued_inverse_polynomial(spec, 8, 6)
    # block coordinates (15, 20 | 14, 21): X2^2 (X3^3 + X4^2)
    assert J82.terms == {(0, 2, 3, 0): 1, (0, 2, 0, 2): 1}
    J88 = glued_inverse_polynomial(spec, 12, 4)
    assert J88.terms == {(4, 0, 2, 0): 1, (0, 3, 2, 0): 1}


def test_glue_with_naturals():
    spec = GluingSpec(NS([2, 3]), NS([1]), 2, 5)
    res = glue(spec)
    assert res.semigroup.generators == (4, 5, 6)
    assert res.predicted.frobenius == 7
    assert res.predicted.pseudo_frobenius == (7,)

    # PF(<d1 H, d2>) = d1 f + d2 (d1 - 1)
    spec2 = GluingSpec(NS([5, 6, 9]), NS([1]), 5, 31)
    res2 = glue(spec2)
    assert res2.semigroup.generators == (25, 30, 31, 45)
    assert res2.predicted.frobenius == 5 * 13 + 31 * 4 == 189
    J214 = glued_inverse_polynomial(spec2, 18, 4)
    assert J214.terms == {(0, 3, 0, 4): 1, (0, 0, 2, 4): 1}
    J220 = glued_inverse_polynomial(spec2, 44, 0)
    assert J220.num_terms() == 5
    assert all(a[3] == 0 for a in J220.terms)


def test_glue_validation_errors():
    with pytest.raises(NotCoprime):
        glue(GluingSpec(NS([2, 3]), NS([1]), 2, 4))
    with pytest.raises(NotMember):
        glue(GluingSpec(NS([2, 5]), NS([2, 3]), 7, 3))  # 3 not in <2,5>
    with pytest.raises(NotMinimalGlue):
        # 4*3 = 12 is redundant next to 3 and 8
        glue(GluingSpec(NS([2, 3]), NS([1]), 4, 3))
    with pytest.raises(NotMinimalGlue):
        # scaled lists collide: 3*2 = 2*3
        glue(GluingSpec(NS([2, 3]), NS([2, 3]), 3, 2))


def test_glued_product_formula_trivial():
    spec = GluingSpec(NS([3, 4]), NS([2, 3]), 5, 7)
    J0 = glued_inverse_polynomial(spec, 0, 0)
    assert J0.terms == {(0, 0, 0, 0): 1}


def test_glued_product_formula_random():
    rng = random.Random(99)
    specs = [
        GluingSpec(NS([3, 4]), NS([2, 3]), 5, 7),
        GluingSpec(NS([2, 3]), NS([1]), 2, 5),
        GluingSpec(NS([5, 6, 9]), NS([1]), 5, 31),
        GluingSpec(NS([2, 5]), NS([3, 4]), 7, 9),
    ]
    for spec in specs:
        for _ in range(4):
            m1 = rng.choice([0] + list(spec.h1.generators))
            m2 = rng.choice([0] + list(spec.h2.generators))
            glued_inverse_polynomial(spec, m1, m2)  # raises on any mismatch


def test_glued_monomial_check():
    spec = GluingSpec(NS([2, 3]), NS([1]), 2, 5)
    chk = glued_monomial_check(spec, 1, -1, 2)
    assert chk.equal
    assert chk.degree == 7 + 2 * 2
    assert chk.lhs.terms == {(0, 1, 1): 1}
    assert chk.lhs_monomial == chk.factor1_monomial

    chk0 = glued_monomial_check(spec, 1, -1, 0)
    assert chk0.both_zero and chk0.equal

    with pytest.raises(NotInApery):
        glued_monomial_check(spec, 1, -1, 5)  # 5 = d2 not in Ap(H1, 5)
    with pytest.raises(NotMember):
        glued_monomial_check(spec, 2, -1, 2)


def test_glued_monomial_check_nontrivial_second_block():
    spec = GluingSpec(NS([3, 4]), NS([2, 3]), 5, 7)
    for h in (0, 3, 4):
        chk = glued_monomial_check(spec, 5, 1, h)
        assert chk.hypothesis_sharp and chk.equal
    # h = 6 passes the Apery condition but not the sharp one: a second
    # term of the product formula survives and the single product fails
    chk6 = glued_monomial_check(spec, 5, 1, 6)
    assert not chk6.hypothesis_sharp
    assert not chk6.equal


def test_glued_monomial_check_mirrored():
    spec = GluingSpec(NS([3, 4]), NS([2, 3]), 5, 7)
    for h in (0, 2, 3):
        chk = glued_monomial_check(spec, 5, 1, h, side="h2")
        assert chk.hypothesis_sharp and chk.equal


def test_gorenstein_transfer():
    sym = GluingSpec(NS([3, 4]), NS([2, 3]), 5, 7)
    assert glue(sym).predicted.is_symmetric
    nonsym = GluingSpec(NS([3, 4, 5]), NS([1]), 2, 7)
    res = glue(nonsym)
    assert not res.predicted.is_symmetric
    assert res.predicted.type == NS([3, 4, 5]).type


def test_symmetric_extension_nonsymmetric_case():
    res = symmetric_extension_test(NS([3, 7]), 2, 5)
    # reference <3, 5, 7> is not symmetric: both lifted PF numbers appear
    assert not res.is_symmetric
    assert res.reference.pseudo_frobenius == (2, 4)
    for f in res.reference.pseudo_frobenius:
        assert 2 * f + 5 in res.semigroup.pseudo_frobenius


def test_symmetric_extension_symmetric_case():
    # <4,5> plus 6 gives the symmetric <4,5,6>; scale by 5
    res = symmetric_extension_test(NS([4, 5]), 5, 6)
    assert res.reference.generators == (4, 5, 6)
    assert res.is_symmetric
    assert res.predicted_pf == 5 * 7 + 4 * 6 == res.semigroup.frobenius


def test_symmetric_extension_errors():
    with pytest.raises(MemberAlready):
        symmetric_extension_test(NS([5, 6, 9]), 5, 31)  # 31 = 25 + 6
    with pytest.raises(MemberAlready):
        symmetric_extension_test(NS([2, 3]), 2, 5)
    with pytest.raises(NotCoprime):
        symmetric_extension_test(NS([3, 4]), 2, 6)


def test_decompositions_complete_intersection():
    specs = find_gluing_decompositions(NS([10, 14, 15, 21]))
    assert specs
    for spec in specs:
        res = glue(spec)
        assert res.semigroup.generators == (10, 14, 15, 21)


def test_block_coordinate_mapping():
    spec = GluingSpec(NS([3, 4]), NS([2, 3]), 5, 7)
    J = glued_inverse_polynomial(spec, 8, 6)
    H = NS(spec.scaled_generators())
    mapped = to_canonical_coordinates(J, spec.block_to_canonical())
    assert mapped == inverse_polynomial(H, 82)
