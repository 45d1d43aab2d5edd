import pytest

from invsemi.bresinsky import (
    alpha_table,
    annihilation_spot_check,
    pfaffian_of_minor,
    pfaffian_structure,
    two_factorization_witness,
    verify_4gor,
)
from invsemi.errors import (
    IsCompleteIntersection,
    NotFourGenerated,
    NotSymmetric,
)
from invsemi.factorization import deg_h, minimal_generators
from invsemi.semigroup import NumericalSemigroup, iter_symmetric_semigroups


def NS(gens):
    return NumericalSemigroup(gens)


def _pairs_by_value(H, pairs):
    """Binomial pairs keyed by generator values, order-free."""
    out = set()
    for a, b in pairs:
        da = frozenset((g, x) for g, x in zip(H.generators, a) if x)
        db = frozenset((g, x) for g, x in zip(H.generators, b) if x)
        out.add(frozenset((da, db)))
    return out


def test_alpha_table_golden():
    t1 = alpha_table(NS([41, 99, 70, 53]))  # canonical (41, 53, 70, 99)
    assert t1.alphas == (3, 20, 2, 11)
    assert t1.pairwise_distinct()

    t2 = alpha_table(NS([43, 20, 27, 37]))  # canonical (20, 27, 37, 43)
    assert t2.alphas == (4, 7, 2, 4)
    assert t2.pairwise_distinct()

    t3 = alpha_table(NS([2, 3]))
    assert t3.alphas == (3, 2)


def test_alpha_table_outside_factorizations():
    t = alpha_table(NS([41, 99, 70, 53]))
    for i, facts in enumerate(t.outside_factorizations):
        for a in facts:
            assert a[i] == 0
            assert deg_h(NS([41, 99, 70, 53]), a) == t.products[i]


def test_pfaffian_structure_41_family():
    H = NS([41, 99, 70, 53])
    s = pfaffian_structure(H)
    assert s.relabeled_generators == (41, 99, 70, 53)
    assert s.alpha == (3, 11, 2, 20)
    assert s.alpha_off == {
        "21": 2,
        "31": 1,
        "32": 1,
        "42": 10,
        "13": 1,
        "43": 1,
        "24": 19,
        "14": 1,
    }
    printed = {
        # f1 = x1^3 - x3 x4, ..., f5 = x1^2 x3 - x2 x4 in the labeling (41,99,70,53)
        frozenset({frozenset({(41, 3)}), frozenset({(70, 1), (53, 1)})}),
        frozenset({frozenset({(99, 11)}), frozenset({(41, 2), (53, 19)})}),
        frozenset({frozenset({(70, 2)}), frozenset({(41, 1), (99, 1)})}),
        frozenset({frozenset({(53, 20)}), frozenset({(99, 10), (70, 1)})}),
        frozenset({frozenset({(41, 2), (70, 1)}), frozenset({(99, 1), (53, 1)})}),
    }
    assert _pairs_by_value(H, s.generators) == printed
    # and they are exactly the minimal generators
    assert _pairs_by_value(H, minimal_generators(H).generators) == printed


def test_pfaffian_structure_43_family():
    H = NS([43, 20, 27, 37])
    s = pfaffian_structure(H)
    # a valid relabeling with all offsets positive and the sum identities
    a = s.alpha
    off = s.alpha_off
    assert a[0] == off["21"] + off["31"]
    assert a[1] == off["32"] + off["42"]
    assert a[2] == off["13"] + off["43"]
    assert a[3] == off["24"] + off["14"]
    assert all(v >= 1 for v in off.values())
    assert _pairs_by_value(H, s.generators) == _pairs_by_value(
        H, minimal_generators(H).generators
    )


def test_pfaffian_minor_expansion():
    H = NS([41, 99, 70, 53])
    s = pfaffian_structure(H)
    for i in range(5):
        poly = pfaffian_of_minor(s.skew_matrix, i)
        a, b = s.generators[i]
        assert poly in ({a: 1, b: -1}, {a: -1, b: 1})


def test_pfaffian_errors():
    with pytest.raises(NotFourGenerated):
        pfaffian_structure(NS([3, 4, 5]))
    with pytest.raises(NotSymmetric):
        pfaffian_structure(NS([19, 20, 21, 22]))
    with pytest.raises(IsCompleteIntersection):
        pfaffian_structure(NS([10, 14, 15, 21]))


def test_two_factorization_witness_golden():
    H = NS([41, 99, 70, 53])
    w = two_factorization_witness(H)
    assert w.index == 0
    assert set(w.factorizations) == {(0, 0, 1, 10), (0, 20, 0, 0)}

    w2 = two_factorization_witness(NS([5, 6, 7, 8]))
    assert w2.all_witnesses  # at least one witness exists

    # the 43-family has four factorizations at Frobenius plus 43, and a
    # two-term witness at a different generator
    H3 = NS([43, 20, 27, 37])
    w3 = two_factorization_witness(H3)
    assert w3.all_witnesses
    assert 3 not in w3.all_witnesses  # 43 sits at canonical position 3

    with pytest.raises(IsCompleteIntersection):
        two_factorization_witness(NS([10, 14, 15, 21]))


def test_verify_4gor_golden():
    cert = verify_4gor(NS([41, 99, 70, 53]))
    assert cert.mu == 5
    assert cert.j_branch == "two-term"
    assert set(cert.j_terms) == {(0, 0, 1, 10), (0, 20, 0, 0)}

    cert2 = verify_4gor(NS([43, 20, 27, 37]))
    assert cert2.mu == 5

    cert3 = verify_4gor(NS([5, 6, 7, 8]))
    assert cert3.mu == 5
    assert annihilation_spot_check(
        NS([5, 6, 7, 8]), cert3.structure, seed=7
    )


def test_verify_4gor_divisibility_branch_direct():
    """The geometric ladder appears whenever the offsets divide; the
    printed 43-family polynomial is the four-term ladder."""
    from invsemi.invpoly import inverse_polynomial

    H = NS([43, 20, 27, 37])
    J = inverse_polynomial(H, 179 + 43)
    assert set(J.terms) == {(k, 2 * k, 2 * (3 - k), 0) for k in range(4)}


def test_four_generated_suite_small():
    ci_count = 0
    noncis = 0
    for H in iter_symmetric_semigroups(9, 35):
        if H.embedding_dim != 4:
            continue
        mu = minimal_generators(H).mu
        assert mu in (3, 5)
        if mu == 3:
            ci_count += 1
            with pytest.raises(IsCompleteIntersection):
                pfaffian_structure(H)
        else:
            noncis += 1
            cert = verify_4gor(H)
            assert cert.mu == 5
            assert annihilation_spot_check(H, cert.structure, seed=1)
    assert ci_count and noncis
