"""Freeness, same-degree complete intersections, the H_{e,c} family and
the classification of symmetric semigroups of small multiplicity.

A semigroup is free (telescopic) when some ordering of the generators
makes each one, after clearing the gcd of its predecessors, a member of
the semigroup they generate.  Freeness is characterized among symmetric
semigroups by some inverse polynomial at Frobenius-plus-element being a
monomial; same-degree complete intersections are exactly the semigroups
whose inverse polynomial at Frobenius-plus-generator is a monomial for
every generator.  For multiplicity up to embedding dimension plus three
the inverse polynomial at Frobenius plus multiplicity takes one of a
short list of shapes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

from .errors import (
    AlphaTooSmall,
    BothOdd,
    MultiplicityOutOfRange,
    NoShapeMatch,
    NotCoprimeAlphas,
    NotSymmetric,
    TheoremViolation,
)
from .factorization import ExpVec, denumerant, factorizations, minimal_generators
from .invpoly import InversePolynomial, inverse_polynomial
from .semigroup import NumericalSemigroup, reachable_mask


# -- freeness -----------------------------------------------------------------


@dataclass(frozen=True)
class FreenessWitness:
    """Generator ordering with its gcd chain and telescopic Frobenius."""

    ordering: tuple[int, ...]  # indices into the canonical generator tuple
    reordered: tuple[int, ...]
    gcd_chain: tuple[int, ...]  # d_2, ..., d_{e+1}
    telescopic_frobenius: int


def _scaled_member(value: int, gens: tuple[int, ...]) -> bool:
    g = 0
    for x in gens:
        g = gcd(g, x)
    if value % g:
        return False
    reduced = tuple(sorted(x // g for x in gens))
    v = value // g
    return bool((reachable_mask(reduced, v) >> v) & 1)


def is_free(H: NumericalSemigroup) -> FreenessWitness | None:
    """Search generator orderings for the telescopic condition.

    The gcd chain strictly decreases along any valid ordering (otherwise
    a generator would be redundant), which prunes the search; the first
    witness in lexicographic index order is returned and validated
    against the closed Frobenius formula.
    """
    gens = H.generators
    e = len(gens)
    if e == 1:
        witness = FreenessWitness(
            ordering=(0,), reordered=gens, gcd_chain=(1,), telescopic_frobenius=-1
        )
        return witness

    order: list[int] = []

    def rec(current_gcd: int) -> list[int] | None:
        if len(order) == e:
            return list(order)
        for idx in range(e):
            if idx in order:
                continue
            g = gens[idx]
            if not order:
                order.append(idx)
                found = rec(g)
                if found:
                    return found
                order.pop()
                continue
            nxt = gcd(current_gcd, g)
            if nxt >= current_gcd:
                continue
            prefix = tuple(gens[i] for i in order)
            if not _scaled_member(g // nxt, tuple(x // current_gcd for x in prefix)):
                continue
            order.append(idx)
            found = rec(nxt)
            if found:
                return found
            order.pop()
        return None

    found = rec(0)
    if found is None:
        return None
    reordered = tuple(gens[i] for i in found)
    chain = []
    running = reordered[0]
    for i in range(1, e):
        running = gcd(running, reordered[i])
        chain.append(running)
    # gcd_chain holds d_2 ... d_{e+1} with d_2 the first generator
    gcd_chain = (reordered[0],) + tuple(chain)
    if gcd_chain[-1] != 1:
        raise TheoremViolation("telescopic chain does not reach 1", chain=gcd_chain)
    telescopic = (
        sum(
            (gcd_chain[i - 1] // gcd_chain[i] - 1) * reordered[i]
            for i in range(1, e)
        )
        - reordered[0]
    )
    if telescopic != H.frobenius:
        raise TheoremViolation(
            "telescopic Frobenius formula failed",
            generators=gens,
            ordering=found,
            telescopic=telescopic,
            direct=H.frobenius,
        )
    return FreenessWitness(
        ordering=tuple(found),
        reordered=reordered,
        gcd_chain=gcd_chain,
        telescopic_frobenius=telescopic,
    )


@dataclass(frozen=True)
class MonomialCriterionCertificate:
    denumerants: tuple[int, ...]
    monomial_indices: tuple[int, ...]
    free: bool
    witness: FreenessWitness | None
    equivalent: bool


def monomial_criterion(H: NumericalSemigroup) -> MonomialCriterionCertificate:
    """For symmetric semigroups: free iff some inverse polynomial at
    Frobenius plus a generator is a monomial.

    Checking generators suffices: a unique factorization at Frobenius
    plus any element contracts down to one at Frobenius plus a generator
    in its support.
    """
    if not H.is_symmetric:
        raise NotSymmetric(f"{H!r} is not symmetric")
    frob = H.frobenius
    dens = tuple(denumerant(H, frob + g) for g in H.generators)
    mono = tuple(i for i, d in enumerate(dens) if d == 1)
    witness = is_free(H)
    free = witness is not None
    has_monomial = bool(mono)
    if free != has_monomial:
        raise TheoremViolation(
            "freeness and monomial criterion disagree",
            generators=H.generators,
            denumerants=dens,
            free=free,
        )
    return MonomialCriterionCertificate(
        denumerants=dens,
        monomial_indices=mono,
        free=free,
        witness=witness,
        equivalent=True,
    )


# -- same-degree complete intersections ---------------------------------------


def alpha_values(H: NumericalSemigroup) -> tuple[int, ...]:
    """Least positive multiple of each generator lying in the span of the
    others."""
    gens = H.generators
    out = []
    for i, n in enumerate(gens):
        others = tuple(g for j, g in enumerate(gens) if j != i)
        if not others:
            out.append(1)  # 1*1 = empty-sum convention never used downstream
            continue
        alpha = 1
        while not _scaled_member(alpha * n, others):
            alpha += 1
        out.append(alpha)
    return tuple(out)


def ci_same_degree(H: NumericalSemigroup) -> tuple[int, ...] | None:
    """Detect a complete intersection generated in a single degree.

    Present exactly when every inverse polynomial at Frobenius plus a
    generator is a monomial; then alpha_i * n_i is one common degree d,
    the alphas are pairwise coprime and each generator is the product of
    the other alphas.  Absent otherwise (for example when all those
    inverse polynomials are monomials but the degrees alpha_i * n_i
    disagree, which happens for non-symmetric semigroups).
    """
    gens = H.generators
    e = len(gens)
    if e < 2:
        return None
    frob = H.frobenius
    if any(denumerant(H, frob + g) != 1 for g in gens):
        return None
    alphas = alpha_values(H)
    degrees = {a * g for a, g in zip(alphas, gens)}
    if len(degrees) != 1:
        if H.is_symmetric:
            raise TheoremViolation(
                "monomial inverse polynomials without a common degree",
                generators=gens,
                alphas=alphas,
            )
        return None
    d = degrees.pop()
    for x, y in itertools.combinations(alphas, 2):
        if gcd(x, y) != 1:
            return None
    if any(a < 2 for a in alphas):
        return None
    if d != prod(alphas):
        return None
    for j, g in enumerate(gens):
        if g != prod(alphas) // alphas[j]:
            return None
    if minimal_generators(H).mu != e - 1:
        raise TheoremViolation(
            "same-degree structure without complete intersection count",
            generators=gens,
        )
    return alphas


def construct_from_alphas(alphas: tuple[int, ...] | list[int]) -> NumericalSemigroup:
    """Semigroup generated by the products of all alphas but one.

    Requires at least two pairwise coprime factors, all greater than 1.
    Detection round-trips on the result.
    """
    alphas = tuple(alphas)
    if len(alphas) < 2:
        raise AlphaTooSmall("need at least two factors")
    for a in alphas:
        if a < 2:
            raise AlphaTooSmall(f"factor {a} is too small")
    for x, y in itertools.combinations(alphas, 2):
        if gcd(x, y) != 1:
            raise NotCoprimeAlphas(f"{x} and {y} share a factor")
    total = prod(alphas)
    H = NumericalSemigroup([total // a for a in alphas])
    detected = ci_same_degree(H)
    if detected is None or sorted(detected) != sorted(alphas):
        raise TheoremViolation(
            "same-degree construction did not round-trip",
            alphas=alphas,
            detected=detected,
        )
    return H


# -- the H_{e,c} family --------------------------------------------------------


@dataclass(frozen=True)
class HecResult:
    semigroup: NumericalSemigroup
    e: int
    c: int
    predicted_frobenius: int
    predicted_J: InversePolynomial
    branch: str


def _hec_generators(e: int, c: int) -> list[int]:
    if c == 1:
        return list(range(e + 1, 2 * e + 1))
    if c % 2 == 0:
        base = c * c + (e + 2) * c
        return [e + c, e + c + 1] + [(base + 2 * (i - 1)) // 2 for i in range(3, e + 1)]
    base = c * c + (e + 3) * c - e
    return [e + c, e + c + 2] + [(base + 4 * (i - 1)) // 2 for i in range(3, e + 1)]


def _hec_frobenius(e: int, c: int) -> int:
    if c == 1:
        return 2 * e + 1
    if c % 2 == 0:
        return c * c + (e + 1) * c + 1
    return c * c + (e + 2) * c + 2


def _pair_terms(e: int, head: ExpVec | None, pairs: list[tuple[int, int]],
                square: int | None) -> dict[ExpVec, int]:
    terms: dict[ExpVec, int] = {}

    def put(vec: list[int]) -> None:
        terms[tuple(vec)] = 1

    if head is not None:
        terms[head] = 1
    for i, j in pairs:
        vec = [0] * e
        vec[i - 1] += 1
        vec[j - 1] += 1
        put(vec)
    if square is not None:
        vec = [0] * e
        vec[square - 1] = 2
        put(vec)
    return terms


def _hec_predicted_terms(e: int, c: int) -> dict[ExpVec, int]:
    ep = e // 2
    if c == 1:
        if e % 2 == 0:
            pairs = [(k, e + 2 - k) for k in range(2, ep + 1)]
            return _pair_terms(e, None, pairs, ep + 1)
        pairs = [(k, e + 2 - k) for k in range(2, ep + 2)]
        return _pair_terms(e, None, pairs, None)
    head = [0] * e
    head[1] = c + 1
    if e % 2 == 0:
        pairs = [(k, e + 3 - k) for k in range(3, ep + 2)]
        return _pair_terms(e, tuple(head), pairs, None)
    pairs = [(k, e + 3 - k) for k in range(3, ep + 2)]
    return _pair_terms(e, tuple(head), pairs, ep + 2)


def construct_H_ec(e: int, c: int) -> HecResult:
    """The symmetric family with multiplicity e + c in embedding dimension e.

    Requires e > 1, c > 0 and at least one of them even.  The predicted
    Frobenius number and the predicted shape of the inverse polynomial at
    Frobenius plus multiplicity are asserted against direct computation.
    """
    if e < 2 or c < 1:
        raise MultiplicityOutOfRange("need e > 1 and c > 0")
    if e % 2 == 1 and c % 2 == 1:
        raise BothOdd("one of e and c must be even")
    gens = _hec_generators(e, c)
    H = NumericalSemigroup(gens)
    branch = "c=1" if c == 1 else ("c even" if c % 2 == 0 else "c odd, e even")
    if H.generators != tuple(sorted(gens)):
        raise TheoremViolation(
            "family generators are not minimal", e=e, c=c, generators=gens
        )
    if H.multiplicity != e + c or H.embedding_dim != e:
        raise TheoremViolation(
            "family shape mismatch", e=e, c=c, generators=H.generators
        )
    if not H.is_symmetric:
        raise TheoremViolation("family member is not symmetric", e=e, c=c)
    frob = _hec_frobenius(e, c)
    if frob != H.frobenius:
        raise TheoremViolation(
            "family Frobenius formula failed",
            e=e,
            c=c,
            predicted=frob,
            direct=H.frobenius,
        )
    predicted = InversePolynomial(e, _hec_predicted_terms(e, c), frob + e + c)
    direct = inverse_polynomial(H, frob + e + c)
    if predicted != direct:
        raise TheoremViolation(
            "family inverse polynomial mismatch",
            e=e,
            c=c,
            predicted=sorted(predicted.terms),
            direct=sorted(direct.terms),
        )
    return HecResult(
        semigroup=H,
        e=e,
        c=c,
        predicted_frobenius=frob,
        predicted_J=predicted,
        branch=branch,
    )


# -- small multiplicity classification ----------------------------------------


@dataclass(frozen=True)
class ShapeTag:
    multiplicity_class: int  # n_1 as e+1, e+2 or e+3
    variant: str  # "1" .. "6b"
    terms: tuple[ExpVec, ...]


def classify_small_multiplicity(H: NumericalSemigroup) -> ShapeTag:
    """Match the inverse polynomial at Frobenius plus multiplicity against
    the catalogue of shapes available when the multiplicity is at most
    the embedding dimension plus three.

    Shapes for classes e+1 and e+2 are rigid in the sorted generator
    order; class e+3 allows arbitrary placement of the indices in the
    cubic term and the quadratic pairs (every variable appearing exactly
    once), plus one rigid quartic shape in even dimension.  A symmetric
    input in range that matches nothing raises loudly.
    """
    if not H.is_symmetric:
        raise NotSymmetric(f"{H!r} is not symmetric")
    e = H.embedding_dim
    n1 = H.multiplicity
    if n1 not in (e + 1, e + 2, e + 3):
        raise MultiplicityOutOfRange(
            f"multiplicity {n1} is not within 3 of the embedding dimension {e}"
        )
    frob = H.frobenius
    J = inverse_polynomial(H, frob + n1)
    terms = tuple(sorted(J.terms))
    ep = e // 2
    if n1 == e + 1:
        if e % 2 == 1:
            expected = _pair_terms(
                e, None, [(k, e + 2 - k) for k in range(2, ep + 2)], None
            )
            variant = "1"
        else:
            expected = _pair_terms(
                e, None, [(k, e + 2 - k) for k in range(2, ep + 1)], ep + 1
            )
            variant = "2"
        if set(expected) == set(J.terms):
            _assert_pair_sums(H, frob + e + 1)
            return ShapeTag(n1, variant, terms)
        raise NoShapeMatch(
            "no catalogue shape in class e+1", generators=H.generators, terms=terms
        )
    if n1 == e + 2:
        # one pure cube plus a perfect matching of the remaining indices;
        # the cube may sit at any position (3 n_i = Fr + n_1 decides it),
        # not only at n_2
        variant = "3" if e % 2 == 1 else "4"
        if _matches_power_shape(e, J, 3):
            _assert_head_pair_sums(H, frob + e + 2, 3, J)
            return ShapeTag(n1, variant, terms)
        raise NoShapeMatch(
            "no catalogue shape in class e+2", generators=H.generators, terms=terms
        )
    # class e+3: either the flexible cubic shape or (even e) the quartic one
    if _matches_cubic_shape(e, J):
        return ShapeTag(n1, "5", terms)
    if e % 2 == 0 and _matches_power_shape(e, J, 4):
        _assert_head_pair_sums(H, frob + e + 3, 4, J)
        return ShapeTag(n1, "6b", terms)
    raise NoShapeMatch(
        "no catalogue shape in class e+3", generators=H.generators, terms=terms
    )


def _matches_power_shape(e: int, J: InversePolynomial, power: int) -> bool:
    """One pure power X_i^power, all other terms X_kX_l (k = l allowed for
    odd catalogue rows), every index in 2..e appearing exactly once, the
    first variable absent."""
    used = [0] * e
    power_seen = 0
    for a in J.terms:
        if a[0] != 0:
            return False
        order = sum(a)
        support = [i for i, x in enumerate(a) if x > 0]
        for i in support:
            used[i] += 1
        if order == power and len(support) == 1:
            power_seen += 1
        elif order == 2 and len(support) in (1, 2):
            continue
        else:
            return False
    if power_seen != 1:
        return False
    return all(u == 1 for u in used[1:]) and used[0] == 0


def _matches_cubic_shape(e: int, J: InversePolynomial) -> bool:
    """One term X_i^2 X_j (i != j), all others quadratic, every variable
    in 2..e used exactly once, first variable absent."""
    used = [0] * e
    cubic_seen = 0
    for a in J.terms:
        if a[0] != 0:
            return False
        order = sum(a)
        support = [i for i, x in enumerate(a) if x > 0]
        for i in support:
            used[i] += 1
        if order == 3:
            if sorted(a[i] for i in support) != [1, 2]:
                return False
            cubic_seen += 1
        elif order == 2:
            if len(support) not in (1, 2):
                return False
        else:
            return False
    if cubic_seen != 1:
        return False
    return all(u == 1 for u in used[1:]) and used[0] == 0


def _assert_pair_sums(H: NumericalSemigroup, target: int) -> None:
    gens = H.generators
    e = len(gens)
    for k in range(2, e // 2 + 2):
        if k >= e + 2 - k:
            break
        if gens[k - 1] + gens[e + 2 - k - 1] != target:
            raise TheoremViolation(
                "pair sums in class e+1 are not constant",
                generators=gens,
                k=k,
                target=target,
            )


def _assert_head_pair_sums(
    H: NumericalSemigroup, target: int, power: int, J: InversePolynomial
) -> None:
    """The pure power and every pair hit the same degree, and the pairing
    matches the remaining indices smallest against largest."""
    gens = H.generators
    head_index = None
    pairs = []
    for a in J.terms:
        support = [i for i, x in enumerate(a) if x > 0]
        if sum(a) == power and len(support) == 1:
            head_index = support[0]
        elif len(support) == 2:
            pairs.append(tuple(support))
        else:
            pairs.append((support[0], support[0]))
    if head_index is None or power * gens[head_index] != target:
        raise TheoremViolation(
            "pure-power degree mismatch", generators=gens, target=target
        )
    for i, j in pairs:
        if gens[i] + gens[j] != target:
            raise TheoremViolation(
                "pair sums are not constant", generators=gens, target=target
            )
    rest = sorted(set(range(1, len(gens))) - {head_index})
    want = []
    while rest:
        if len(rest) == 1:
            want.append((rest[0], rest[0]))
            rest = []
        else:
            want.append((rest[0], rest[-1]))
            rest = rest[1:-1]
    if sorted(pairs) != sorted(want):
        raise TheoremViolation(
            "pairing is not the sorted matching", generators=gens, pairs=pairs
        )
