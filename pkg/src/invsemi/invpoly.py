"""Inverse polynomials of Artinian semigroup-ring quotients.

The inverse polynomial attached to an element h of a numerical semigroup
is the sum of inverse monomials X^a over all factorizations a of h, with
the convention that it is zero when h lies outside the semigroup.  The
polynomial ring acts on inverse polynomials by contraction:
x^a . X^b = X^(b-a) when b >= a componentwise and 0 otherwise.  From the
contraction module one reads off the annihilator of an inverse
polynomial, its colength, and the symmetry and almost-symmetry
certificates of the ambient semigroup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DegreeZero,
    DimensionMismatch,
    NotApplicable,
    NotInSemigroup,
    TheoremViolation,
    ZeroPolynomial,
)
from .factorization import (
    ExpVec,
    deg_h,
    factorizations,
    minimal_generators,
)
from .intlinalg import row_span_rank
from .semigroup import NumericalSemigroup


class InversePolynomial:
    """Finite integer combination of inverse monomials X^a."""

    __slots__ = ("ambient_dim", "terms", "homogeneous_degree")

    def __init__(
        self,
        ambient_dim: int,
        terms: dict[ExpVec, int] | None = None,
        homogeneous_degree: int | None = None,
    ):
        self.ambient_dim = ambient_dim
        self.terms = {a: c for a, c in (terms or {}).items() if c != 0}
        self.homogeneous_degree = homogeneous_degree

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ambient_dim: int) -> "InversePolynomial":
        return cls(ambient_dim, {})

    @classmethod
    def monomial(cls, exponent: ExpVec, coeff: int = 1) -> "InversePolynomial":
        return cls(len(exponent), {tuple(exponent): coeff})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def num_terms(self) -> int:
        return len(self.terms)

    def order(self) -> int:
        """Largest total degree among the inverse monomials."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no order")
        return max(sum(a) for a in self.terms)

    def sorted_terms(self) -> list[tuple[ExpVec, int]]:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    # -- arithmetic -----------------------------------------------------------

    def _check_dim(self, other: "InversePolynomial") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other: "InversePolynomial") -> "InversePolynomial":
        self._check_dim(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0) + c
        deg = None
        if self.is_zero():
            deg = other.homogeneous_degree
        elif other.is_zero():
            deg = self.homogeneous_degree
        elif self.homogeneous_degree == other.homogeneous_degree:
            deg = self.homogeneous_degree
        return InversePolynomial(self.ambient_dim, terms, deg)

    def __sub__(self, other: "InversePolynomial") -> "InversePolynomial":
        return self + other.scale(-1)

    def scale(self, c: int) -> "InversePolynomial":
        return InversePolynomial(
            self.ambient_dim,
            {a: c * v for a, v in self.terms.items()},
            self.homogeneous_degree,
        )

    def __mul__(self, other: "InversePolynomial") -> "InversePolynomial":
        """Formal product in the inverse variables (used blockwise)."""
        self._check_dim(other)
        terms: dict[ExpVec, int] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                terms[key] = terms.get(key, 0) + ca * cb
        deg = None
        if self.homogeneous_degree is not None and other.homogeneous_degree is not None:
            deg = self.homogeneous_degree + other.homogeneous_degree
        return InversePolynomial(self.ambient_dim, terms, deg)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InversePolynomial)
            and self.ambient_dim == other.ambient_dim
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ambient_dim, frozenset(self.terms.items())))

    # -- presentation ----------------------------------------------------------

    def render(self) -> str:
        """Inverse monomials as X-factors, e.g. "X2^10*X3 + X4^20"."""
        if self.is_zero():
            return "0"
        chunks = []
        for a, c in self.sorted_terms():
            factors = [
                f"X{i + 1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(a)
                if p > 0
            ]
            body = "*".join(factors) if factors else "1"
            if c == 1:
                chunks.append(body)
            elif c == -1:
                chunks.append(f"-{body}")
            else:
                chunks.append(f"{c}*{body}")
        return " + ".join(chunks)

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exp": list(a)} for a, c in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"InversePolynomial({self.render()})"


def inverse_polynomial(H: NumericalSemigroup, h: int) -> InversePolynomial:
    """Sum of X^a over all factorizations of h; zero when h is no element."""
    terms = {a: 1 for a in factorizations(H, h)}
    return InversePolynomial(H.embedding_dim, terms, homogeneous_degree=h)


PolyLike = Iterable[tuple[int, ExpVec]]


def contract(p: PolyLike | InversePolynomial, J: InversePolynomial) -> InversePolynomial:
    """Bilinear extension of x^a . X^b = X^(b-a) (zero unless b >= a)."""
    if isinstance(p, InversePolynomial):
        items = [(c, a) for a, c in p.terms.items()]
        dim = p.ambient_dim
    else:
        items = [(c, tuple(a)) for c, a in p]
        dim = len(items[0][1]) if items else J.ambient_dim
    if dim != J.ambient_dim:
        raise DimensionMismatch(
            f"operator dimension {dim} against polynomial dimension {J.ambient_dim}"
        )
    terms: dict[ExpVec, int] = {}
    for coeff, a in items:
        for b, cb in J.terms.items():
            if all(x >= y for x, y in zip(b, a)):
                key = tuple(x - y for x, y in zip(b, a))
                terms[key] = terms.get(key, 0) + coeff * cb
    return InversePolynomial(J.ambient_dim, terms)


def contract_monomial(a: ExpVec, J: InversePolynomial) -> InversePolynomial:
    return contract([(1, a)], J)


# -- annihilators --------------------------------------------------------------


@dataclass(frozen=True)
class AnnihilatorPresentation:
    """Monomial plus binomial generators of an annihilator ideal."""

    ambient_dim: int
    monomial_gens: tuple[ExpVec, ...]
    binomial_gens: tuple[tuple[ExpVec, ExpVec], ...]
    colength: int
    deg_set: tuple[int, ...]


def degree_set(H: NumericalSemigroup, m: int) -> list[int]:
    """All h in H below m with m - h in H."""
    return [d for d in range(m + 1) if H.contains(d) and H.contains(m - d)]


def annihilator_of_semigroup_J(
    H: NumericalSemigroup, m: int
) -> AnnihilatorPresentation:
    """Annihilator of the inverse polynomial of m: the defining ideal plus
    all monomials whose degree does not divide m in the semigroup order.

    The monomial part is returned as the antichain of minimal exponent
    vectors outside the staircase; the colength equals the number of
    surviving degrees.
    """
    if m < 0 or not H.contains(m):
        raise NotInSemigroup(f"{m} is not an element of the semigroup")
    degs = degree_set(H, m)
    deg_ok = set(degs)
    staircase: set[ExpVec] = set()
    for d in degs:
        staircase.update(factorizations(H, d))
    e = H.embedding_dim
    candidates: set[ExpVec] = set()
    for t in staircase:
        for i in range(e):
            up = list(t)
            up[i] += 1
            cand = tuple(up)
            if cand not in staircase:
                candidates.add(cand)
    minimal = []
    for cand in candidates:
        ok = True
        for i in range(e):
            if cand[i] > 0:
                down = list(cand)
                down[i] -= 1
                if tuple(down) not in staircase:
                    ok = False
                    break
        if ok:
            minimal.append(cand)
    minimal.sort()
    if H.embedding_dim >= 2:
        binoms = tuple(
            pair
            for pair in minimal_generators(H).generators
            if deg_h(H, pair[0]) in deg_ok
        )
    else:
        binoms = ()
    return AnnihilatorPresentation(
        ambient_dim=e,
        monomial_gens=tuple(minimal),
        binomial_gens=binoms,
        colength=len(degs),
        deg_set=tuple(degs),
    )


def contraction_colength(J: InversePolynomial) -> int:
    """Dimension of the span of all monomial contractions of J (exact rank)."""
    if J.is_zero():
        raise ZeroPolynomial("the zero polynomial has no annihilator colength")
    e = J.ambient_dim
    boxes: set[ExpVec] = set()
    for t in J.terms:
        boxes.update(itertools.product(*(range(x + 1) for x in t)))
    rows = []
    columns: set[ExpVec] = set()
    for a in sorted(boxes):
        vec = contract_monomial(a, J)
        if not vec.is_zero():
            rows.append(vec.terms)
            columns.update(vec.terms)
    return row_span_rank(rows, sorted(columns))


def two_term_annihilator(J: InversePolynomial) -> AnnihilatorPresentation:
    """Closed-form annihilator of X^a + X^b: pure powers max+1, the mixed
    products min+1 across sign changes, and the difference binomial.

    The exponents must be incomparable (as two factorizations of one
    degree always are), otherwise x^a - x^b fails to annihilate.
    """
    if J.num_terms() != 2 or set(J.terms.values()) != {1}:
        raise NotApplicable("closed form applies to a sum of two monic monomials")
    (a, b) = sorted(J.terms)
    if all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b)):
        raise NotApplicable("closed form needs incomparable exponent vectors")
    e = J.ambient_dim
    monos: list[ExpVec] = []
    for i in range(e):
        p = max(a[i], b[i]) + 1
        v = [0] * e
        v[i] = p
        monos.append(tuple(v))
    for i in range(e):
        for j in range(e):
            if a[i] < b[i] and a[j] > b[j]:
                v = [0] * e
                v[i] = min(a[i], b[i]) + 1
                v[j] = min(a[j], b[j]) + 1
                monos.append(tuple(v))
    monos = _monomial_antichain(monos)
    pair = (a, b) if a > b else (b, a)
    return AnnihilatorPresentation(
        ambient_dim=e,
        monomial_gens=tuple(monos),
        binomial_gens=(pair,),
        colength=presentation_colength(monos, [pair]),
        deg_set=(),
    )


def _monomial_antichain(monos: Sequence[ExpVec]) -> list[ExpVec]:
    out = []
    for m in monos:
        if any(
            other != m and all(x <= y for x, y in zip(other, m)) for other in monos
        ):
            continue
        if m not in out:
            out.append(m)
    out.sort()
    return out


def presentation_colength(
    monomials: Sequence[ExpVec], binomials: Sequence[tuple[ExpVec, ExpVec]]
) -> int:
    """Vector-space dimension of S modulo a monomial-plus-binomial ideal.

    Requires a pure power of every variable among the monomials, so that
    the surviving staircase is a finite box.  All binomials have unit
    coefficients, so the quotient is counted by merging monomial classes
    with union-find and discarding classes glued to the ideal.
    """
    if not monomials:
        raise ZeroPolynomial("need monomial generators for a finite quotient")
    e = len(monomials[0])
    corner = [0] * e
    for i in range(e):
        powers = [m[i] for m in monomials if all(m[j] == 0 for j in range(e) if j != i)]
        if not powers:
            raise ZeroPolynomial(f"no pure power of variable {i + 1} among generators")
        corner[i] = min(powers) - 1
    box = [
        b
        for b in itertools.product(*(range(c + 1) for c in corner))
        if not any(all(x >= y for x, y in zip(b, m)) for m in monomials)
    ]
    index = {b: i for i, b in enumerate(box)}
    parent = list(range(len(box)))
    dead = [False] * len(box)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in binomials:
        for c in itertools.product(*(range(cc + 1) for cc in corner)):
            cu = tuple(x + y for x, y in zip(c, u))
            cv = tuple(x + y for x, y in zip(c, v))
            iu = index.get(cu)
            iv = index.get(cv)
            if iu is None and iv is None:
                continue
            if iu is None or iv is None:
                live = iu if iu is not None else iv
                dead[find(live)] = True
            else:
                ru, rv = find(iu), find(iv)
                if ru != rv:
                    parent[rv] = ru
                    dead[ru] = dead[ru] or dead[rv]
    roots = {find(i) for i in range(len(box))}
    return sum(1 for r in roots if not dead[find(r)])


def annihilator_general(
    J: InversePolynomial,
) -> tuple[int, AnnihilatorPresentation | None]:
    """Colength of the annihilator of any nonzero inverse polynomial.

    The colength is the rank of the contraction module, which is always
    exact.  Generating sets are returned in the cases with a closed
    form: a single monomial (pure powers) or a sum of two monic
    monomials.  For two monomials with intersecting supports the closed
    form may generate a proper subideal (its colength then exceeds the
    rank): reduced differences x^(a-t) - x^(b-t) can annihilate without
    being generated.  When the supports are disjoint the closed form is
    the full annihilator and any disagreement is a genuine failure.
    """
    if J.is_zero():
        raise ZeroPolynomial("zero polynomial")
    colength = contraction_colength(J)
    pres: AnnihilatorPresentation | None = None
    if J.num_terms() == 1:
        (a,) = J.terms
        e = J.ambient_dim
        monos = []
        for i in range(e):
            v = [0] * e
            v[i] = a[i] + 1
            monos.append(tuple(v))
        expected = 1
        for x in a:
            expected *= x + 1
        pres = AnnihilatorPresentation(
            ambient_dim=e,
            monomial_gens=tuple(sorted(monos)),
            binomial_gens=(),
            colength=expected,
            deg_set=(),
        )
        if expected != colength:
            raise TheoremViolation(
                "pure-power annihilator disagrees with the contraction rank",
                terms=sorted(J.terms),
                closed_form=expected,
                rank=colength,
            )
    elif J.num_terms() == 2 and set(J.terms.values()) == {1}:
        a, b = sorted(J.terms)
        incomparable = any(x < y for x, y in zip(a, b)) and any(
            x > y for x, y in zip(a, b)
        )
        if incomparable:
            pres = two_term_annihilator(J)
            disjoint = all(x == 0 or y == 0 for x, y in zip(a, b))
            if disjoint and pres.colength != colength:
                raise TheoremViolation(
                    "closed-form annihilator disagrees with the contraction rank",
                    terms=sorted(J.terms),
                    closed_form=pres.colength,
                    rank=colength,
                )
    return colength, pres


# -- symmetry and almost-symmetry certificates ---------------------------------


@dataclass(frozen=True)
class AlmostSymmetryCheck:
    h: int
    colength: int
    bound: int
    equality: bool


def check_AS(H: NumericalSemigroup, h: int) -> AlmostSymmetryCheck:
    """Colength of the annihilator at Fr(H)+h against the bound h - (type-1).

    The bound always holds; equality at some positive h characterizes
    almost symmetric semigroups.
    """
    if h <= 0 or not H.contains(h):
        raise NotInSemigroup(f"{h} is not a positive element of the semigroup")
    inv = H.invariants
    m = inv.frobenius + h
    colength = sum(
        1 for d in range(m + 1) if H.contains(d) and H.contains(m - d)
    )
    bound = h - (inv.type - 1)
    if colength > bound:
        raise TheoremViolation(
            "annihilator colength exceeds the almost-symmetry bound",
            generators=H.generators,
            h=h,
            colength=colength,
            bound=bound,
        )
    return AlmostSymmetryCheck(h=h, colength=colength, bound=bound, equality=colength == bound)


def almost_symmetry_search(H: NumericalSemigroup) -> AlmostSymmetryCheck | None:
    """First h among generators and Apery elements achieving the bound."""
    seen = set()
    for h in list(H.generators) + list(H.apery(H.multiplicity).elements):
        if h <= 0 or h in seen:
            continue
        seen.add(h)
        res = check_AS(H, h)
        if res.equality:
            return res
    return None


@dataclass(frozen=True)
class IntersectionCertificate:
    """Witness data for the identity I_H + (x^a) = intersection over the
    pseudo-Frobenius numbers f of the annihilators at f + deg(a)."""

    exponent: ExpVec
    degree: int
    pseudo_frobenius: tuple[int, ...]
    generators_annihilate: bool
    monomial_annihilates: bool
    intersection_colength: int
    quotient_colength: int
    equal: bool
    single_annihilator: bool


def verify_intersection_theorem(
    H: NumericalSemigroup, a: ExpVec
) -> IntersectionCertificate:
    """Certify that the defining ideal plus x^a cuts out the intersection
    of the annihilators attached to the pseudo-Frobenius numbers.

    Both inclusions are witnessed: every minimal binomial generator and
    x^a annihilate each inverse polynomial, and the contraction module of
    the tuple of inverse polynomials has dimension deg(a), the colength
    of the quotient by I_H + (x^a).
    """
    h = deg_h(H, a)
    if h == 0:
        raise DegreeZero("x^a must have positive degree")
    inv = H.invariants
    pf = inv.pseudo_frobenius
    targets = [inverse_polynomial(H, f + h) for f in pf]
    gens_ok = True
    if H.embedding_dim >= 2:
        for u, v in minimal_generators(H).generators:
            for J in targets:
                if not (contract_monomial(u, J) - contract_monomial(v, J)).is_zero():
                    gens_ok = False
    mono_ok = all(contract_monomial(a, J).is_zero() for J in targets)
    # the quotient side: the Apery set of h indexes a monomial basis
    quotient_colength = len(H.apery(h).elements)
    # the intersection side: count degrees with a nonzero simultaneous contraction
    count = 0
    limit = max(pf) + h
    for d in range(limit + 1):
        if not H.contains(d):
            continue
        if any(H.contains(f + h - d) for f in pf):
            c = factorizations(H, d)[0]
            if any(not contract_monomial(c, J).is_zero() for J in targets):
                count += 1
            else:
                raise TheoremViolation(
                    "expected nonzero contraction vanished",
                    generators=H.generators,
                    degree=d,
                )
    equal = gens_ok and mono_ok and count == quotient_colength == h
    if not equal:
        raise TheoremViolation(
            "intersection certificate failed",
            generators=H.generators,
            exponent=a,
            gens_ok=gens_ok,
            mono_ok=mono_ok,
            intersection=count,
            quotient=quotient_colength,
        )
    return IntersectionCertificate(
        exponent=tuple(a),
        degree=h,
        pseudo_frobenius=pf,
        generators_annihilate=gens_ok,
        monomial_annihilates=mono_ok,
        intersection_colength=count,
        quotient_colength=quotient_colength,
        equal=equal,
        single_annihilator=len(pf) == 1,
    )
