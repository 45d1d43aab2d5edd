import random

import pytest

from invsemi.errors import NotApplicable
from invsemi.factorization import (
    betti_candidate_degrees,
    deg_h,
    denumerant,
    factorization_components,
    factorizations,
    has_unique_factorization,
    minimal_generators,
    mu_modulo,
    verify_generation_modulo,
)
from invsemi.semigroup import NumericalSemigroup
from invsemi.structure import is_free

from conftest import oracle_factorizations


def test_factorizations_golden():
    H = NumericalSemigroup([5, 6, 9])
    assert factorizations(H, 44) == [
        (1, 2, 3),
        (1, 5, 1),
        (4, 1, 2),
        (4, 4, 0),
        (7, 0, 1),
    ]


def test_factorizations_trivial():
    H = NumericalSemigroup([3, 4, 5])
    assert factorizations(H, 0) == [(0, 0, 0)]
    assert factorizations(H, 1) == []
    assert factorizations(H, -4) == []
    assert has_unique_factorization(H, 0)


def test_factorizations_4gor_witness():
    H = NumericalSemigroup([41, 99, 70, 53])
    facts = factorizations(H, 1019 + 41)
    # canonical coordinates (41, 53, 70, 99)
    assert facts == [(0, 0, 1, 10), (0, 20, 0, 0)]


def test_factorizations_match_oracle(random_semigroups):
    rng = random.Random(5)
    for H in random_semigroups:
        for _ in range(3):
            h = rng.randrange(0, 3 * H.generators[-1])
            got = factorizations(H, h)
            assert got == oracle_factorizations(H.generators, h)
            assert got == sorted(got)
            assert denumerant(H, h) == len(got)
            for a in got:
                assert deg_h(H, a) == h


def test_minimal_generators_plane_cusp():
    pres = minimal_generators(NumericalSemigroup([2, 3]))
    assert pres.mu == 1
    assert pres.generators == (((3, 0), (0, 2)),)
    assert pres.betti_degrees == (6,)


def test_minimal_generators_4gor_ex2():
    H = NumericalSemigroup([43, 20, 27, 37])  # canonical (20, 27, 37, 43)
    pres = minimal_generators(H)
    assert pres.mu == 5
    # the printed five binomials, translated to canonical coordinates
    printed = {
        frozenset({(0, 0, 0, 4), (0, 5, 1, 0)}),  # x1^4 - x3^5 x4
        frozenset({(4, 0, 0, 0), (0, 0, 1, 1)}),  # x2^4 - x1 x4
        frozenset({(0, 7, 0, 0), (3, 0, 0, 3)}),  # x3^7 - x1^3 x2^3
        frozenset({(0, 0, 2, 0), (1, 2, 0, 0)}),  # x4^2 - x2 x3^2
        frozenset({(3, 0, 1, 0), (0, 2, 0, 1)}),  # x1 x3^2 - x2^3 x4
    }
    assert {frozenset(p) for p in pres.generators} == printed


def test_minimal_generators_double_gluing():
    pres = minimal_generators(NumericalSemigroup([10, 14, 15, 21]))
    assert pres.mu == 3


def test_minimal_generators_not_applicable():
    with pytest.raises(NotApplicable):
        minimal_generators(NumericalSemigroup([1]))


def test_generator_pairs_homogeneous_incomparable(small_family):
    for H in small_family[:160]:
        if H.embedding_dim < 2:
            continue
        pres = minimal_generators(H)
        for a, b in pres.generators:
            assert deg_h(H, a) == deg_h(H, b)
            assert any(x < y for x, y in zip(a, b))
            assert any(x > y for x, y in zip(a, b))


def test_betti_witness_disconnected(small_family):
    for H in small_family[:120]:
        if H.embedding_dim < 2:
            continue
        pres = minimal_generators(H)
        for d in set(pres.betti_degrees):
            comps = factorization_components(factorizations(H, d))
            assert len(comps) >= 2


def test_mu_consistency_across_variables(small_family):
    picks = [H for H in small_family if H.embedding_dim >= 2][::9]
    for H in picks[:24]:
        pres = minimal_generators(H)
        for i in range(H.embedding_dim):
            assert mu_modulo(H, i) == pres.mu
        assert verify_generation_modulo(H, pres, 0)


def test_mu_free_semigroups(small_family):
    for H in small_family[:200]:
        if H.embedding_dim < 2:
            continue
        if is_free(H) is not None:
            assert minimal_generators(H).mu == H.embedding_dim - 1


def test_betti_degrees_within_candidates(small_family):
    for H in small_family[:100]:
        if H.embedding_dim < 2:
            continue
        pres = minimal_generators(H)
        cands = set(betti_candidate_degrees(H))
        assert set(pres.betti_degrees) <= cands
