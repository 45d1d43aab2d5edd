"""Pfaffian structure of symmetric 4-generated non-complete-intersection
semigroups.

For such a semigroup the defining ideal has exactly five minimal
generators: four binomials relating a pure power of each variable to a
product of two others, and one mixed binomial; they are the maximal
Pfaffians of a 5x5 skew-symmetric matrix of monomials.  The exponents
are determined by the least self-multiples alpha_i together with a
table of positive offsets alpha_ij satisfying alpha_1 = alpha_21 +
alpha_31 and its three rotations.  This module finds the structure by
searching relabelings, certifies the degree identities of the matrix,
and verifies the two-factorization description of the inverse
polynomial at Frobenius plus the first (relabeled) generator.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (
    IsCompleteIntersection,
    NotApplicable,
    NoWitness,
    NotFourGenerated,
    NotSymmetric,
    StructureNotFound,
    TheoremViolation,
)
from .factorization import (
    BinomialIdealPresentation,
    ExpVec,
    deg_h,
    denumerant,
    factorization_components,
    factorizations,
    minimal_generators,
)
from .invpoly import InversePolynomial, contract_monomial, inverse_polynomial
from .semigroup import NumericalSemigroup
from .structure import alpha_values


@dataclass(frozen=True)
class AlphaTable:
    """Least positive self-multiples with their outside factorizations."""

    alphas: tuple[int, ...]
    products: tuple[int, ...]  # alpha_i * n_i
    outside_factorizations: tuple[tuple[ExpVec, ...], ...]

    def pairwise_distinct(self) -> bool:
        return len(set(self.products)) == len(self.products)


def alpha_table(H: NumericalSemigroup) -> AlphaTable:
    if H.embedding_dim < 2:
        raise NotApplicable("need at least two generators")
    alphas = alpha_values(H)
    products = tuple(a * g for a, g in zip(alphas, H.generators))
    outside = []
    for i, p in enumerate(products):
        facts = tuple(a for a in factorizations(H, p) if a[i] == 0)
        if not facts:
            raise TheoremViolation(
                "alpha multiple lacks an outside factorization",
                generators=H.generators,
                index=i,
            )
        outside.append(facts)
    return AlphaTable(
        alphas=alphas, products=products, outside_factorizations=tuple(outside)
    )


# -- the skew-symmetric matrix -------------------------------------------------

OFF_KEYS = ("21", "31", "32", "42", "13", "43", "24", "14")


@dataclass(frozen=True)
class PfaffianStructure:
    index_permutation: tuple[int, ...]  # position p holds a canonical index
    relabeled_generators: tuple[int, ...]
    alpha: tuple[int, ...]  # in relabeled positions
    alpha_off: dict[str, int]
    generators: tuple[tuple[ExpVec, ExpVec], ...]  # canonical coordinates
    skew_matrix: tuple[tuple[object, ...], ...]  # entries None or (sign, ExpVec)

    def __post_init__(self):
        object.__setattr__(self, "alpha_off", dict(self.alpha_off))


def _vec(e: int, assignments: dict[int, int]) -> ExpVec:
    v = [0] * e
    for idx, val in assignments.items():
        v[idx] = val
    return tuple(v)


def _positive_two_var_factorizations(
    value: int, g1: int, g2: int
) -> list[tuple[int, int]]:
    out = []
    for i in range(1, value // g1 + 1):
        rest = value - i * g1
        if rest >= g2 and rest % g2 == 0:
            out.append((i, rest // g2))
    return out


def _theorem_binomials(
    perm: tuple[int, ...], e4: tuple[int, ...], alpha: tuple[int, ...], off: dict[str, int]
) -> list[tuple[ExpVec, ExpVec]]:
    """The five binomials in canonical coordinates for a relabeling.

    perm[p] is the canonical index playing position p (0-based positions
    for generators n_1..n_4)."""
    e = 4
    p = perm

    def mono(*pairs) -> ExpVec:
        return _vec(e, {p[pos]: exp for pos, exp in pairs})

    f1 = (mono((0, alpha[0])), mono((2, off["13"]), (3, off["14"])))
    f2 = (mono((1, alpha[1])), mono((3, off["24"]), (0, off["21"])))
    f3 = (mono((2, alpha[2])), mono((0, off["31"]), (1, off["32"])))
    f4 = (mono((3, alpha[3])), mono((1, off["42"]), (2, off["43"])))
    f5 = (mono((0, off["21"]), (2, off["43"])), mono((1, off["32"]), (3, off["14"])))
    return [f1, f2, f3, f4, f5]


def _skew_matrix(
    perm: tuple[int, ...], off: dict[str, int]
) -> tuple[tuple[object, ...], ...]:
    e = 4
    p = perm

    def mono(pos: int, key: str):
        return _vec(e, {p[pos]: off[key]})

    x1_31 = mono(0, "31")
    x1_21 = mono(0, "21")
    x2_32 = mono(1, "32")
    x2_42 = mono(1, "42")
    x3_43 = mono(2, "43")
    x3_13 = mono(2, "13")
    x4_24 = mono(3, "24")
    x4_14 = mono(3, "14")
    n = None
    rows = (
        (n, (-1, x3_43), n, (-1, x2_32), (-1, x4_24)),
        ((1, x3_43), n, (1, x4_14), n, (-1, x1_31)),
        (n, (-1, x4_14), n, (-1, x1_21), (-1, x2_42)),
        ((1, x2_32), n, (1, x1_21), n, (-1, x3_13)),
        ((1, x4_24), (1, x1_31), (1, x2_42), (1, x3_13), n),
    )
    return rows


def _poly_mul(a, b):
    """Product of sparse sign-monomial polynomials: dict ExpVec -> int."""
    out: dict[ExpVec, int] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _entry_poly(entry) -> dict[ExpVec, int]:
    if entry is None:
        return {}
    sign, vec = entry
    return {vec: sign}


def pfaffian_of_minor(matrix, removed: int) -> dict[ExpVec, int]:
    """Pfaffian of the 4x4 skew minor obtained by deleting one row/column."""
    keep = [i for i in range(5) if i != removed]

    def m(i, j):
        return _entry_poly(matrix[keep[i]][keep[j]])

    term = lambda x, y: _poly_mul(m(*x), m(*y))
    out: dict[ExpVec, int] = {}
    for coeff, (x, y) in (
        (1, ((0, 1), (2, 3))),
        (-1, ((0, 2), (1, 3))),
        (1, ((0, 3), (1, 2))),
    ):
        for k, v in term(x, y).items():
            out[k] = out.get(k, 0) + coeff * v
    return {k: v for k, v in out.items() if v}


def _same_binomial_up_to_sign(poly: dict[ExpVec, int], pair) -> bool:
    a, b = pair
    return poly in ({a: 1, b: -1}, {a: -1, b: 1})


def pfaffian_structure(H: NumericalSemigroup) -> PfaffianStructure:
    """Search the 24 relabelings for the offset table, lexicographically
    least first, and certify the result.

    Certification: the four sum identities, homogeneity of all five
    binomials, equality of the Betti degree multiset with the minimal
    presentation, an actual spanning connection at each Betti degree, the
    degree identity of the matrix entries, and agreement of the minor
    Pfaffians with the binomials up to sign.
    """
    if H.embedding_dim != 4:
        raise NotFourGenerated(f"{H!r} has {H.embedding_dim} generators")
    if not H.is_symmetric:
        raise NotSymmetric(f"{H!r} is not symmetric")
    pres = minimal_generators(H)
    if pres.mu == 3:
        raise IsCompleteIntersection("defining ideal is a complete intersection")
    if pres.mu != 5:
        raise TheoremViolation(
            "four-generated symmetric semigroup with unexpected mu",
            generators=H.generators,
            mu=pres.mu,
        )
    gens = H.generators
    alphas_c = alpha_values(H)
    for perm in itertools.permutations(range(4)):
        n = [gens[perm[p]] for p in range(4)]
        alpha = [alphas_c[perm[p]] for p in range(4)]
        c1 = _positive_two_var_factorizations(alpha[0] * n[0], n[2], n[3])
        c2 = _positive_two_var_factorizations(alpha[1] * n[1], n[3], n[0])
        c3 = _positive_two_var_factorizations(alpha[2] * n[2], n[0], n[1])
        c4 = _positive_two_var_factorizations(alpha[3] * n[3], n[1], n[2])
        for (a13, a14), (a24, a21), (a31, a32), (a42, a43) in itertools.product(
            c1, c2, c3, c4
        ):
            off = {
                "21": a21,
                "31": a31,
                "32": a32,
                "42": a42,
                "13": a13,
                "43": a43,
                "24": a24,
                "14": a14,
            }
            if alpha[0] != a21 + a31 or alpha[1] != a32 + a42:
                continue
            if alpha[2] != a13 + a43 or alpha[3] != a24 + a14:
                continue
            if a21 * n[0] + a43 * n[2] != a32 * n[1] + a14 * n[3]:
                continue
            structure = _certify(H, pres, tuple(perm), tuple(alpha), off)
            if structure is not None:
                return structure
    raise StructureNotFound(
        "no relabeling admits the Pfaffian offset table",
        generators=H.generators,
    )


def _certify(
    H: NumericalSemigroup,
    pres: BinomialIdealPresentation,
    perm: tuple[int, ...],
    alpha: tuple[int, ...],
    off: dict[str, int],
) -> PfaffianStructure | None:
    gens = H.generators
    binomials = _theorem_binomials(perm, gens, alpha, off)
    degrees = []
    for a, b in binomials:
        da, db = deg_h(H, a), deg_h(H, b)
        if da != db:
            return None
        degrees.append(da)
    if sorted(degrees) != sorted(pres.betti_degrees):
        return None
    # at every Betti degree the supplied binomials must join all graph components
    by_degree: dict[int, list[tuple[ExpVec, ExpVec]]] = {}
    for (a, b), d in zip(binomials, degrees):
        by_degree.setdefault(d, []).append((a, b))
    for d, pairs in by_degree.items():
        facts = factorizations(H, d)
        comps = factorization_components(facts)
        comp_of = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        parent = list(range(len(comps)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            if a not in comp_of or b not in comp_of:
                return None
            ra, rb = find(comp_of[a]), find(comp_of[b])
            if ra == rb:
                return None  # redundant connection, not minimal
            parent[rb] = ra
        if len({find(i) for i in range(len(comps))}) != 1:
            return None
    matrix = _skew_matrix(perm, off)
    frob = H.frobenius
    total = frob + sum(gens)
    fdeg = degrees
    for i in range(5):
        for j in range(5):
            entry = matrix[i][j]
            if entry is None:
                continue
            _, vec = entry
            if total != deg_h(H, vec) + fdeg[i] + fdeg[j]:
                raise TheoremViolation(
                    "matrix degree identity failed",
                    generators=gens,
                    entry=(i, j),
                )
    for i in range(5):
        pf = pfaffian_of_minor(matrix, i)
        if not _same_binomial_up_to_sign(pf, binomials[i]):
            raise TheoremViolation(
                "minor Pfaffian does not reproduce its binomial",
                generators=gens,
                index=i,
            )
    return PfaffianStructure(
        index_permutation=perm,
        relabeled_generators=tuple(gens[p] for p in perm),
        alpha=alpha,
        alpha_off=off,
        generators=tuple((a, b) if a > b else (b, a) for a, b in binomials),
        skew_matrix=matrix,
    )


# -- two-factorization witnesses ------------------------------------------------


@dataclass(frozen=True)
class TwoFactorizationWitness:
    index: int  # 0-based position in the canonical generator tuple
    factorizations: tuple[ExpVec, ExpVec]
    all_witnesses: tuple[int, ...]


def two_factorization_witness(H: NumericalSemigroup) -> TwoFactorizationWitness:
    """Some generator n_i with exactly two factorizations of Fr(H) + n_i.

    All witness indices are reported; their absence for a symmetric
    non-complete-intersection contradicts the structure theory and is
    fatal.
    """
    if H.embedding_dim != 4:
        raise NotFourGenerated(f"{H!r} has {H.embedding_dim} generators")
    if not H.is_symmetric:
        raise NotSymmetric(f"{H!r} is not symmetric")
    if minimal_generators(H).mu == 3:
        raise IsCompleteIntersection("defining ideal is a complete intersection")
    frob = H.frobenius
    witnesses = []
    first_pair = None
    for i, g in enumerate(H.generators):
        facts = factorizations(H, frob + g)
        if len(facts) == 2:
            witnesses.append(i)
            if first_pair is None:
                first_pair = (i, (facts[0], facts[1]))
    if first_pair is None:
        raise NoWitness(
            "no generator has exactly two factorizations at Frobenius plus it",
            generators=H.generators,
        )
    return TwoFactorizationWitness(
        index=first_pair[0],
        factorizations=first_pair[1],
        all_witnesses=tuple(witnesses),
    )


# -- the bundled certificate -----------------------------------------------------


@dataclass(frozen=True)
class FourGorensteinCertificate:
    structure: PfaffianStructure
    witness: TwoFactorizationWitness
    stated_factorizations_hold: bool
    j_branch: str
    j_terms: tuple[ExpVec, ...]
    degree_identity: bool
    no_unique_factorization: bool
    apery_membership: tuple[tuple[int, int], ...]
    mu: int


def _ladder_terms(
    H: NumericalSemigroup, perm: tuple[int, ...], alpha, off
) -> set[ExpVec]:
    """Geometric ladder for the inverse polynomial at Fr + n_1 in the
    divisibility branch: repeatedly trade x_2^a42 x_3^a43 for x_4^alpha4."""
    e = 4
    terms = set()
    j = 0
    while True:
        e2 = alpha[1] - 1 - j * off["42"]
        e3 = alpha[2] - 1 - j * off["43"]
        if e2 < 0 or e3 < 0:
            break
        e4 = off["14"] - 1 + j * alpha[3]
        terms.add(_vec(e, {perm[1]: e2, perm[2]: e3, perm[3]: e4}))
        j += 1
    return terms


def verify_4gor(H: NumericalSemigroup) -> FourGorensteinCertificate:
    """Bundle of structural checks for a symmetric non-complete-intersection
    semigroup with four generators.

    Covers: the two stated factorizations at Frobenius plus the relabeled
    first generator, the two-branch shape of its inverse polynomial
    (matched against direct enumeration), the matrix degree identity, the
    no-unique-factorization and Apery-placement facts behind the
    relabeling, and the generator count five.
    """
    structure = pfaffian_structure(H)
    witness = two_factorization_witness(H)
    perm = structure.index_permutation
    alpha = structure.alpha
    off = structure.alpha_off
    gens = H.generators
    n = structure.relabeled_generators
    frob = H.frobenius
    target = frob + n[0]
    # (a) the two stated factorizations
    first = (alpha[1] - 1) * n[1] + (alpha[2] - 1) * n[2] + (off["14"] - 1) * n[3]
    second = (
        (off["32"] - 1) * n[1]
        + (off["13"] - 1) * n[2]
        + (alpha[3] + off["14"] - 1) * n[3]
    )
    stated = first == target and second == target
    if not stated:
        raise TheoremViolation(
            "stated factorizations at Frobenius plus first generator failed",
            generators=gens,
            relabeling=perm,
        )
    # (b) branch shape of the inverse polynomial
    J = inverse_polynomial(H, target)
    divisible = off["42"] <= off["32"] - 1 and off["43"] <= off["13"] - 1
    if not divisible:
        expected = {
            _vec(4, {perm[1]: alpha[1] - 1, perm[2]: alpha[2] - 1, perm[3]: off["14"] - 1}),
            _vec(
                4,
                {
                    perm[1]: off["32"] - 1,
                    perm[2]: off["13"] - 1,
                    perm[3]: alpha[3] + off["14"] - 1,
                },
            ),
        }
        branch = "two-term"
    else:
        expected = _ladder_terms(H, perm, alpha, off)
        branch = "geometric-ladder"
    if set(J.terms) != expected:
        raise TheoremViolation(
            "branch shape of the inverse polynomial failed",
            generators=gens,
            branch=branch,
            expected=sorted(expected),
            direct=sorted(J.terms),
        )
    # (d) no unique factorization anywhere, and the Apery placements
    nouf = all(denumerant(H, frob + g) >= 2 for g in gens)
    if not nouf:
        raise TheoremViolation(
            "some Frobenius-plus-generator has unique factorization",
            generators=gens,
        )
    table = alpha_table(H)
    if not table.pairwise_distinct():
        raise TheoremViolation(
            "alpha multiples are not pairwise distinct", generators=gens
        )
    placements = _apery_placements(H, table)
    _check_nuf_conditions(H, table, placements)
    mu = minimal_generators(H).mu
    if mu != 5:
        raise TheoremViolation("generator count is not five", generators=gens)
    return FourGorensteinCertificate(
        structure=structure,
        witness=witness,
        stated_factorizations_hold=stated,
        j_branch=branch,
        j_terms=tuple(sorted(J.terms)),
        degree_identity=True,
        no_unique_factorization=nouf,
        apery_membership=placements,
        mu=mu,
    )


def _apery_placements(
    H: NumericalSemigroup, table: AlphaTable
) -> tuple[tuple[int, int], ...]:
    """Pairs (i, j) with alpha_j * n_j in the Apery set of n_i."""
    out = []
    for i, gi in enumerate(H.generators):
        for j, p in enumerate(table.products):
            if i == j:
                continue
            if H.contains(p) and not H.contains(p - gi):
                out.append((i, j))
    return tuple(out)


def _check_nuf_conditions(H, table, placements) -> None:
    gens = H.generators
    by_i: dict[int, list[int]] = {}
    for i, j in placements:
        by_i.setdefault(i, []).append(j)
    for i in range(4):
        js = by_i.get(i, [])
        if not js:
            raise TheoremViolation(
                "no alpha multiple lands in some Apery set", generators=gens, i=i
            )
        values = {table.products[j] for j in js}
        if len(values) != 1:
            raise TheoremViolation(
                "distinct alpha multiples share an Apery set",
                generators=gens,
                i=i,
            )
        if len(js) > 2:
            raise TheoremViolation(
                "more than two alpha multiples in one Apery set",
                generators=gens,
                i=i,
            )
        j = js[0]
        frob = H.frobenius
        count = 0
        for a in factorizations(H, frob + gens[i]):
            if a[i] == 0 and a[j] < table.alphas[j]:
                count += 1
        if count != 1:
            raise TheoremViolation(
                "bounded factorization at Frobenius plus generator not unique",
                generators=gens,
                i=i,
                j=j,
                count=count,
            )
    # relabeling pattern: a 4-cycle or the paired cases must occur
    if not _has_nuf_pattern(placements):
        raise TheoremViolation(
            "no relabeling realizes the cyclic or paired Apery pattern",
            generators=gens,
            placements=placements,
        )


def _has_nuf_pattern(placements) -> bool:
    pset = set(placements)
    for perm in itertools.permutations(range(4)):
        cyclic = (perm[0], perm[3]) in pset and all(
            (perm[i + 1], perm[i]) in pset for i in range(3)
        )
        paired = (
            (perm[0], perm[3]) in pset
            and (perm[3], perm[0]) in pset
            and (perm[1], perm[2]) in pset
            and (perm[2], perm[1]) in pset
        )
        if cyclic or paired:
            return True
    return False


def annihilation_spot_check(
    H: NumericalSemigroup, structure: PfaffianStructure, seed: int = 0, samples: int = 12
) -> bool:
    """The five structure binomials kill the inverse polynomial of random
    elements (membership of the binomials in the defining ideal)."""
    rng = random.Random(seed)
    frob = H.frobenius
    for _ in range(samples):
        m = rng.randrange(0, 2 * frob + 2)
        if not H.contains(m):
            continue
        J = inverse_polynomial(H, m)
        for a, b in structure.generators:
            if not (contract_monomial(a, J) - contract_monomial(b, J)).is_zero():
                return False
    return True
