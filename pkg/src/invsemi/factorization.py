"""Factorizations of semigroup elements and minimal binomial presentations.

A factorization of h is an exponent vector a with sum(a_i * n_i) = h.
Exponent vectors are plain tuples.  The defining binomial ideal of the
semigroup ring is presented by its minimal generators, found degree by
degree from the connectivity of the factorization graph; an independent
count of the minimal number of generators is available through exact
linear algebra on graded pieces of the Artinian reduction modulo one
variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionMismatch, NotApplicable, TheoremViolation
from .intlinalg import int_rank
from .semigroup import NumericalSemigroup, reachable_mask

ExpVec = tuple[int, ...]


def deg_h(H: NumericalSemigroup, a: ExpVec) -> int:
    """H-degree of an exponent vector: sum of a_i * n_i."""
    if len(a) != H.embedding_dim:
        raise DimensionMismatch(
            f"vector of length {len(a)} against embedding dimension {H.embedding_dim}"
        )
    return sum(c * g for c, g in zip(a, H.generators))


def vec_order(a: ExpVec) -> int:
    return sum(a)


def factorizations(H: NumericalSemigroup, h: int) -> list[ExpVec]:
    """All factorizations of h in H, in ascending lexicographic order.

    Empty when h is not an element.  The search is pruned by membership
    masks of the suffix submonoids, so the cost is proportional to the
    output.
    """
    if h < 0:
        return []
    gens = H.generators
    e = len(gens)
    out: list[ExpVec] = []
    suffix = tuple(gens[i:] for i in range(e))
    masks = [reachable_mask(s, h) for s in suffix]
    vec = [0] * e

    def rec(i: int, rem: int) -> None:
        if i == e - 1:
            q, r = divmod(rem, gens[i])
            if r == 0:
                vec[i] = q
                out.append(tuple(vec))
                vec[i] = 0
            return
        g = gens[i]
        mask = masks[i + 1]
        for c in range(rem // g + 1):
            sub = rem - c * g
            if (mask >> sub) & 1:
                vec[i] = c
                rec(i + 1, sub)
        vec[i] = 0

    if (masks[0] >> h) & 1:
        rec(0, h)
    return out


def denumerant(H: NumericalSemigroup, h: int) -> int:
    return len(factorizations(H, h))


def has_unique_factorization(H: NumericalSemigroup, h: int) -> bool:
    return denumerant(H, h) == 1


def factorization_components(facts: Sequence[ExpVec]) -> list[list[ExpVec]]:
    """Connected components of the factorization graph.

    Vertices are factorizations; two are adjacent when their supports
    intersect.  Components are returned sorted by their lexicographically
    least member, each component sorted as well.
    """
    n = len(facts)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    if n:
        e = len(facts[0])
        for v in range(e):
            prev = None
            for idx, a in enumerate(facts):
                if a[v] > 0:
                    if prev is not None:
                        union(prev, idx)
                    prev = idx
    groups: dict[int, list[ExpVec]] = {}
    for idx, a in enumerate(facts):
        groups.setdefault(find(idx), []).append(a)
    comps = [sorted(g) for g in groups.values()]
    comps.sort(key=lambda g: g[0])
    return comps


@dataclass(frozen=True)
class BinomialIdealPresentation:
    """Minimal binomial generators of the defining ideal, degree-sorted."""

    generators: tuple[tuple[ExpVec, ExpVec], ...]
    mu: int
    betti_degrees: tuple[int, ...]


def betti_candidate_degrees(H: NumericalSemigroup, pivot: int = 0) -> list[int]:
    """Degrees that can carry a minimal generator.

    Every degree whose factorization graph is disconnected lies in
    Ap(H, n) or in Ap(H, n) + n_i for the pivot generator n: a degree d
    outside both sets has a factorization through n sharing support with
    every other factorization.
    """
    n = H.generators[pivot]
    ap = H.apery(n).elements
    cands = set(ap)
    for w in ap:
        for g in H.generators:
            cands.add(w + g)
    return sorted(d for d in cands if H.contains(d))


def minimal_generators(H: NumericalSemigroup) -> BinomialIdealPresentation:
    """A minimal homogeneous binomial generating system of the defining ideal.

    At each disconnected degree the lexicographically least factorization
    of every component is taken as representative and the components are
    joined in a star, which is one valid minimal choice.  Pairs are
    oriented descending, sorted by degree then lexicographically.
    """
    if H.embedding_dim < 2:
        raise NotApplicable("the defining ideal is zero for embedding dimension 1")
    pairs: list[tuple[int, tuple[ExpVec, ExpVec]]] = []
    bettis: list[int] = []
    for d in betti_candidate_degrees(H):
        facts = factorizations(H, d)
        if len(facts) < 2:
            continue
        comps = factorization_components(facts)
        if len(comps) < 2:
            continue
        base = comps[0][0]
        for comp in comps[1:]:
            rep = comp[0]
            a, b = (base, rep) if base > rep else (rep, base)
            pairs.append((d, (a, b)))
            bettis.append(d)
    pairs.sort(key=lambda item: (item[0], item[1]))
    gens = tuple(p for _, p in pairs)
    return BinomialIdealPresentation(
        generators=gens, mu=len(gens), betti_degrees=tuple(sorted(bettis))
    )


# -- independent count of minimal generators ---------------------------------


def _monomials_avoiding(H: NumericalSemigroup, d: int, avoid: int) -> list[ExpVec]:
    return [a for a in factorizations(H, d) if a[avoid] == 0]


def mu_modulo(H: NumericalSemigroup, avoid: int) -> int:
    """Minimal generator count of the defining ideal, computed in the
    Artinian quotient by the variable ``avoid`` with exact linear algebra.

    For each candidate degree d the graded piece of the reduced ideal has
    dimension (#monomials - 1) when d survives in the quotient and
    #monomials otherwise; subtracting the rank of the piece generated in
    lower degrees counts the new generators at d.
    """
    if H.embedding_dim < 2:
        raise NotApplicable("the defining ideal is zero for embedding dimension 1")
    n = H.generators[avoid]
    mu = 0
    for d in betti_candidate_degrees(H, pivot=avoid):
        mons = _monomials_avoiding(H, d, avoid)
        if not mons:
            continue
        in_ap = not H.contains(d - n)
        dim_ideal = len(mons) - 1 if in_ap else len(mons)
        if dim_ideal == 0:
            continue
        col = {a: i for i, a in enumerate(mons)}
        rows: list[list[int]] = []
        for j, g in enumerate(H.generators):
            if j == avoid:
                continue
            prev = _monomials_avoiding(H, d - g, avoid)
            if not prev:
                continue
            prev_in_ap = not H.contains(d - g - n)
            if prev_in_ap:
                basis = [
                    (prev[t], prev[t + 1]) for t in range(len(prev) - 1)
                ]
                for a, b in basis:
                    row = [0] * len(col)
                    row[col[_shift(a, j)]] += 1
                    row[col[_shift(b, j)]] -= 1
                    rows.append(row)
            else:
                for a in prev:
                    row = [0] * len(col)
                    row[col[_shift(a, j)]] = 1
                    rows.append(row)
        mu += dim_ideal - int_rank(rows)
    return mu


def _shift(a: ExpVec, j: int) -> ExpVec:
    lst = list(a)
    lst[j] += 1
    return tuple(lst)


def verify_generation_modulo(
    H: NumericalSemigroup, pres: BinomialIdealPresentation, avoid: int = 0
) -> bool:
    """Check that a presentation generates the full reduced ideal.

    Degree by degree, the span of the multiples of the given generators
    (with the variable ``avoid`` sent to zero) must fill the graded piece
    of the kernel; degrees above the candidate bound cannot carry new
    generators, so agreement on candidates certifies generation.
    """
    n = H.generators[avoid]
    reduced: list[tuple[int, dict[ExpVec, int]]] = []
    for a, b in pres.generators:
        va = {} if a[avoid] > 0 else {a: 1}
        vb = {} if b[avoid] > 0 else {b: 1}
        poly = dict(va)
        for k, v in vb.items():
            poly[k] = poly.get(k, 0) - v
        poly = {k: v for k, v in poly.items() if v}
        if poly:
            reduced.append((deg_h(H, a), poly))
    for d in betti_candidate_degrees(H, pivot=avoid):
        mons = _monomials_avoiding(H, d, avoid)
        if not mons:
            continue
        in_ap = not H.contains(d - n)
        want = len(mons) - 1 if in_ap else len(mons)
        if want == 0:
            continue
        col = {a: i for i, a in enumerate(mons)}
        rows = []
        for gdeg, poly in reduced:
            shift_deg = d - gdeg
            if shift_deg < 0 or not H.contains(shift_deg):
                continue
            for c in factorizations(H, shift_deg):
                if c[avoid] > 0:
                    continue
                row = [0] * len(col)
                ok = True
                for mono, coeff in poly.items():
                    target = tuple(x + y for x, y in zip(mono, c))
                    if target in col:
                        row[col[target]] += coeff
                    else:
                        # the shifted monomial uses the avoided variable: impossible here
                        ok = False
                        break
                if ok and any(row):
                    rows.append(row)
        if int_rank(rows) != want:
            return False
    return True


# -- graded minimal generator count for explicit homogeneous ideals ----------


def mu_of_graded_ideal(
    weights: Sequence[int],
    monomials: Sequence[ExpVec],
    binomials: Sequence[tuple[ExpVec, ExpVec]],
) -> int:
    """mu of an ideal in a weighted polynomial ring given by homogeneous
    monomial and binomial generators, via graded pieces.

    Works for any positive integer weights; each binomial must have both
    sides of equal weighted degree.  Minimal generators live in degrees
    of the given generators, so only those degrees are examined.
    """

    def wdeg(a: ExpVec) -> int:
        return sum(x * w for x, w in zip(a, weights))

    gens: list[tuple[int, dict[ExpVec, int]]] = []
    for mono in monomials:
        gens.append((wdeg(mono), {tuple(mono): 1}))
    for a, b in binomials:
        da, db = wdeg(a), wdeg(b)
        if da != db:
            raise DimensionMismatch("binomial is not homogeneous for the weights")
        gens.append((da, {tuple(a): 1, tuple(b): -1}))
    mu = 0
    for d in sorted({d for d, _ in gens}):
        col = {a: i for i, a in enumerate(_weighted_monomials(weights, d))}
        all_rows = []
        proper_rows = []
        for gdeg, poly in gens:
            rem = d - gdeg
            if rem < 0:
                continue
            for c in _weighted_monomials(weights, rem):
                row = [0] * len(col)
                for mono, coeff in poly.items():
                    target = tuple(x + y for x, y in zip(mono, c))
                    row[col[target]] += coeff
                if any(row):
                    all_rows.append(row)
                    if any(c):
                        proper_rows.append(row)
        mu += int_rank(all_rows) - int_rank(proper_rows)
    return mu


def _weighted_monomials(weights: Sequence[int], d: int) -> list[ExpVec]:
    """Exponent vectors of weighted degree exactly d (small cases only)."""
    nvars = len(weights)
    out: list[ExpVec] = []
    vec = [0] * nvars

    def rec(i: int, rem: int) -> None:
        if i == nvars - 1:
            q, r = divmod(rem, weights[i])
            if r == 0:
                vec[i] = q
                out.append(tuple(vec))
                vec[i] = 0
            return
        w = weights[i]
        for c in range(rem // w + 1):
            vec[i] = c
            rec(i + 1, rem - c * w)
        vec[i] = 0

    if d >= 0:
        rec(0, d)
    return out
