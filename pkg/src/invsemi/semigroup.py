"""Numerical semigroups and their first-order invariants, exactly.

A numerical semigroup H is a cofinite additive submonoid of the
nonnegative integers, described by its unique minimal generating system
n_1 < ... < n_e.  The constructor canonicalizes arbitrary generating
sets; membership, Apery sets, the Frobenius number, the genus and the
pseudo-Frobenius numbers are all derived from one shortest-path sweep
over residue classes modulo the multiplicity.  Plain Python integers
throughout, so nothing ever overflows.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    EmptyInput,
    GcdNotOne,
    InvalidGenerator,
    NotInSemigroup,
    TheoremViolation,
    ZeroModulus,
)


@lru_cache(maxsize=65536)
def reachable_mask(gens: tuple[int, ...], limit: int) -> int:
    """Bitmask of the submonoid generated by ``gens`` on [0, limit].

    Bit n is set iff n is a nonnegative integer combination of the
    generators.  Works for any positive generators (gcd may exceed 1).
    """
    cap = (1 << (limit + 1)) - 1
    mask = 1
    for g in gens:
        if g <= 0:
            raise InvalidGenerator(f"generator {g} is not positive")
        if g > limit:
            continue
        shift = g
        while shift <= limit:
            mask |= (mask << shift) & cap
            shift <<= 1
    return mask


def apery_distances(gens: tuple[int, ...], modulus: int) -> list[int]:
    """Least element of <gens> in each residue class mod ``modulus``.

    Dijkstra on Z/modulus with one +g edge per generator; exact because
    all weights are positive.
    """
    dist: list[int | None] = [None] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in gens:
            nd = d + g
            nr = nd % modulus
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    if any(d is None for d in dist):
        raise GcdNotOne("generators do not reach every residue class")
    return dist  # type: ignore[return-value]


@dataclass(frozen=True)
class SemigroupInvariants:
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]
    type: int
    is_symmetric: bool
    is_almost_symmetric: bool


@dataclass(frozen=True)
class AperySet:
    modulus: int
    elements: tuple[int, ...]


class NumericalSemigroup:
    """Canonical minimal generating system plus cached invariants.

    Instances are immutable; every derived quantity is computed at
    construction, so they can be shared freely between threads.
    """

    __slots__ = (
        "generators",
        "embedding_dim",
        "multiplicity",
        "was_minimal",
        "_dist",
        "_invariants",
    )

    def __init__(self, generators: Iterable[int]):
        raw = list(generators)
        if not raw:
            raise EmptyInput("need at least one generator")
        for g in raw:
            if not isinstance(g, int) or g < 1:
                raise InvalidGenerator(f"generator {g!r} is not a positive integer")
        gcd = 0
        for g in raw:
            gcd = _gcd(gcd, g)
        if gcd != 1:
            raise GcdNotOne(f"gcd of generators is {gcd}, complement would be infinite")
        minimal = _minimalize(sorted(set(raw)))
        object.__setattr__(self, "generators", minimal)
        object.__setattr__(self, "was_minimal", minimal == tuple(sorted(raw)))
        object.__setattr__(self, "embedding_dim", len(minimal))
        object.__setattr__(self, "multiplicity", minimal[0])
        object.__setattr__(
            self, "_dist", tuple(apery_distances(minimal, minimal[0]))
        )
        object.__setattr__(self, "_invariants", None)

    def __setattr__(self, name, value):
        raise AttributeError("NumericalSemigroup is immutable")

    # -- basic queries ----------------------------------------------------

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return self._dist[n % self.multiplicity] <= n

    __contains__ = contains

    def leq(self, n: int, n_prime: int) -> bool:
        """The partial order on integers induced by H: n <= n' iff n'-n in H."""
        return self.contains(n_prime - n)

    def apery(self, h: int) -> AperySet:
        if h == 0:
            raise ZeroModulus("Apery set needs a nonzero modulus")
        if h < 0 or not self.contains(h):
            raise NotInSemigroup(f"{h} is not a nonzero element of the semigroup")
        if h == self.multiplicity:
            elements = tuple(sorted(self._dist))
        else:
            elements = tuple(sorted(apery_distances(self.generators, h)))
        return AperySet(modulus=h, elements=elements)

    # -- invariants --------------------------------------------------------

    @property
    def invariants(self) -> SemigroupInvariants:
        cached = self._invariants
        if cached is None:
            cached = self._compute_invariants()
            object.__setattr__(self, "_invariants", cached)
        return cached

    @property
    def frobenius(self) -> int:
        return self.invariants.frobenius

    @property
    def genus(self) -> int:
        return self.invariants.genus

    @property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        return self.invariants.pseudo_frobenius

    @property
    def type(self) -> int:
        return self.invariants.type

    @property
    def is_symmetric(self) -> bool:
        return self.invariants.is_symmetric

    @property
    def is_almost_symmetric(self) -> bool:
        return self.invariants.is_almost_symmetric

    def _compute_invariants(self) -> SemigroupInvariants:
        m = self.multiplicity
        frob = max(self._dist) - m
        genus = sum(d // m for d in self._dist)
        pf = []
        for f in range(-1, frob + 1):
            if self.contains(f):
                continue
            if all(self.contains(f + g) for g in self.generators):
                pf.append(f)
        pf_tuple = tuple(pf)
        typ = len(pf_tuple)
        by_type = typ == 1
        by_count = 2 * genus == frob + 1
        by_mirror = all(
            self.contains(z) != self.contains(frob - z) for z in range(frob + 1)
        )
        if not (by_type == by_count == by_mirror):
            raise TheoremViolation(
                "symmetry criteria disagree",
                generators=self.generators,
                by_type=by_type,
                by_count=by_count,
                by_mirror=by_mirror,
            )
        if pf_tuple and max(pf_tuple) != frob:
            raise TheoremViolation(
                "max(PF) differs from the Frobenius number",
                generators=self.generators,
            )
        return SemigroupInvariants(
            frobenius=frob,
            genus=genus,
            pseudo_frobenius=pf_tuple,
            type=typ,
            is_symmetric=by_type,
            is_almost_symmetric=2 * genus == frob + typ,
        )

    # -- presentation -------------------------------------------------------

    def to_dict(self) -> dict:
        inv = self.invariants
        return {
            "generators": list(self.generators),
            "frobenius": inv.frobenius,
            "genus": inv.genus,
            "pf": list(inv.pseudo_frobenius),
            "type": inv.type,
            "symmetric": inv.is_symmetric,
            "almost_symmetric": inv.is_almost_symmetric,
        }

    def __repr__(self) -> str:
        return f"NumericalSemigroup<{','.join(map(str, self.generators))}>"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NumericalSemigroup)
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash(self.generators)

    # -- internal fast path --------------------------------------------------

    @classmethod
    def _from_kunz(cls, m: int, apery: list[int], gens: tuple[int, ...]):
        """Trusted constructor used by the enumerator (gens already minimal)."""
        self = cls.__new__(cls)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "was_minimal", True)
        object.__setattr__(self, "embedding_dim", len(gens))
        object.__setattr__(self, "multiplicity", m)
        object.__setattr__(self, "_dist", tuple(apery))
        object.__setattr__(self, "_invariants", None)
        return self


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _minimalize(gens: list[int]) -> tuple[int, ...]:
    """Unique minimal generating system of the semigroup the list generates."""
    if gens[0] == 1:
        return (1,)
    top = gens[-1]
    mask = reachable_mask(tuple(gens), top)
    out = []
    for g in gens:
        redundant = any(
            q < g and (mask >> (g - q)) & 1 for q in gens if q != g
        )
        if not redundant:
            out.append(g)
    return tuple(out)


def parse_generators(text: str) -> list[int]:
    """Parse the comma-separated generator format, e.g. "41, 99,70,53"."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or parts == [""]:
        raise EmptyInput("no generators given")
    values = []
    for p in parts:
        try:
            v = int(p)
        except ValueError as exc:
            raise InvalidGenerator(f"{p!r} is not an integer") from exc
        values.append(v)
    return values


# -- exhaustive enumeration --------------------------------------------------


def iter_semigroups(
    max_multiplicity: int, max_frobenius: int
) -> Iterator[NumericalSemigroup]:
    """All numerical semigroups with multiplicity and Frobenius number bounded.

    Depth-first search over Apery vectors (Kunz coordinates) for each
    multiplicity; admissibility inequalities are enforced while the
    vector is being extended, so the walk is output-sensitive.
    """
    if max_multiplicity >= 1 and max_frobenius >= -1:
        yield NumericalSemigroup([1])
    for m in range(2, max_multiplicity + 1):
        if max_frobenius < m - 1:
            continue  # m-1 is always a gap
        yield from _iter_multiplicity(m, max_frobenius)


def _iter_multiplicity(m: int, max_frob: int) -> Iterator[NumericalSemigroup]:
    cap = [0] * m
    for i in range(1, m):
        cap[i] = (max_frob + m - i) // m
        if cap[i] < 1:
            return
    ks = [0] * m  # ks[i] for class i; Apery element is m*ks[i] + i
    out: list[NumericalSemigroup] = []

    def rec(t: int) -> Iterator[NumericalSemigroup]:
        if t == m:
            yield _leaf(m, ks)
            return
        lo = 1
        hi = cap[t]
        for j in range(1, t // 2 + 1):
            s = ks[j] + ks[t - j]
            if s < hi:
                hi = s
        j0 = max(1, m - t + 1)
        for j in range(j0, t):
            need = ks[t + j - m] - ks[j] - 1
            if need > lo:
                lo = need
        if 2 * t > m:
            need = ks[2 * t - m] // 2  # ceil((k-1)/2)
            if need > lo:
                lo = need
        for k in range(lo, hi + 1):
            ks[t] = k
            yield from rec(t + 1)
        ks[t] = 0

    yield from rec(1)


def _leaf(m: int, ks: list[int]) -> NumericalSemigroup:
    apery = [0] * m
    for i in range(1, m):
        apery[i] = m * ks[i] + i
    return _from_apery(m, apery)


def _from_apery(m: int, apery: list[int]) -> NumericalSemigroup:
    gens = [m]
    for i in range(1, m):
        ai = apery[i]
        minimal = True
        for j in range(1, m):
            l = (i - j) % m
            if l == 0:
                continue
            if apery[j] + apery[l] == ai:
                minimal = False
                break
        if minimal:
            gens.append(ai)
    gens.sort()
    return NumericalSemigroup._from_kunz(m, apery, tuple(gens))


def iter_symmetric_semigroups(
    max_multiplicity: int, max_frobenius: int
) -> Iterator[NumericalSemigroup]:
    """All symmetric numerical semigroups within the two bounds.

    A symmetric semigroup's Apery set (with respect to the multiplicity)
    is closed under w -> M - w for M the largest member, so the search
    walks only the mirror-paired Apery vectors: choose the class and
    value of M, fill one member of each mirrored pair of residue
    classes, then keep the additively admissible vectors.
    """
    if max_multiplicity >= 1 and max_frobenius >= -1:
        yield NumericalSemigroup([1])
    for m in range(2, max_multiplicity + 1):
        if max_frobenius < m - 1:
            continue
        yield from _iter_symmetric_multiplicity(m, max_frobenius)


def _iter_symmetric_multiplicity(
    m: int, max_frob: int
) -> Iterator[NumericalSemigroup]:
    for c in range(1, m):
        top = (max_frob + m - c) // m
        for kc in range(1, top + 1):
            M = m * kc + c
            pairs: list[tuple[int, int]] = []
            self_paired: int | None = None
            ok = True
            seen = set()
            for i in range(1, m):
                if i == c or i in seen:
                    continue
                j = (c - i) % m
                if j == i:
                    if M % 2 or (M // 2) % m != i or M // 2 < m + 1:
                        ok = False
                        break
                    self_paired = i
                    seen.add(i)
                    continue
                seen.add(i)
                seen.add(j)
                pairs.append((min(i, j), max(i, j)))
            if not ok:
                continue
            apery = [0] * m
            apery[c] = M
            if self_paired is not None:
                apery[self_paired] = M // 2
            yield from _fill_pairs(m, M, apery, sorted(pairs), 0, max_frob)


def _fill_pairs(
    m: int,
    M: int,
    apery: list[int],
    pairs: list[tuple[int, int]],
    idx: int,
    max_frob: int,
) -> Iterator[NumericalSemigroup]:
    if idx == len(pairs):
        if _kunz_admissible(m, apery):
            yield _from_apery(m, list(apery))
        return
    i, j = pairs[idx]
    lo = m + i if i else m
    v = lo
    while v <= M - m - 1:
        partner = M - v
        apery[i] = v
        apery[j] = partner
        # quick partial admissibility against already placed values
        if _partial_ok(m, apery, i, j, idx, pairs):
            yield from _fill_pairs(m, M, apery, pairs, idx + 1, max_frob)
        v += m
    apery[i] = 0
    apery[j] = 0


def _partial_ok(m, apery, i, j, idx, pairs) -> bool:
    for x in (i, j):
        for y in range(1, m):
            if apery[y] == 0 and y != 0:
                continue
            t = (x + y) % m
            if t == 0 or apery[t] == 0:
                continue
            if apery[x] + apery[y] < apery[t]:
                return False
    return True


def _kunz_admissible(m: int, apery: list[int]) -> bool:
    for i in range(1, m):
        ai = apery[i]
        for j in range(i, m):
            t = (i + j) % m
            if t == 0:
                continue
            if ai + apery[j] < apery[t]:
                return False
    return True
