"""Shared brute-force oracles, kept independent of the library internals.

The membership oracle is a plain dynamic program over a boolean table;
the invariants oracle scans every integer up to the product of the
extreme generators; the factorization oracle is unpruned recursion.
The library must agree with these on everything we throw at it.
"""

from __future__ import annotations

import random

import pytest

from invsemi.semigroup import NumericalSemigroup, iter_semigroups


def oracle_member_table(gens: tuple[int, ...], limit: int) -> list[bool]:
    table = [False] * (limit + 1)
    table[0] = True
    for n in range(1, limit + 1):
        for g in gens:
            if g <= n and table[n - g]:
                table[n] = True
                break
    return table


def oracle_invariants(gens: tuple[int, ...]) -> dict:
    if gens == (1,):
        return {
            "frobenius": -1,
            "genus": 0,
            "pf": (-1,),
            "apery_mult": (0,),
        }
    limit = gens[0] * gens[-1]
    table = oracle_member_table(gens, limit)
    assert all(table[limit - k] for k in range(gens[0])), "oracle scan too short"
    frob = max(n for n in range(limit + 1) if not table[n])
    genus = sum(1 for n in range(limit + 1) if not table[n])

    def member(n: int) -> bool:
        if n < 0:
            return False
        if n <= limit:
            return table[n]
        return True

    pf = tuple(
        f
        for f in range(-1, frob + 1)
        if not member(f) and all(member(f + g) for g in gens)
    )
    m = gens[0]
    apery = [None] * m
    for n in range(limit + 1):
        if table[n] and apery[n % m] is None:
            apery[n % m] = n
    return {
        "frobenius": frob,
        "genus": genus,
        "pf": pf,
        "apery_mult": tuple(sorted(apery)),
    }


def oracle_factorizations(gens: tuple[int, ...], h: int) -> list[tuple[int, ...]]:
    e = len(gens)
    out = []

    def rec(i: int, rem: int, acc: list[int]) -> None:
        if i == e:
            if rem == 0:
                out.append(tuple(acc))
            return
        for c in range(rem // gens[i] + 1):
            rec(i + 1, rem - c * gens[i], acc + [c])

    if h >= 0:
        rec(0, h, [])
    return sorted(out)


@pytest.fixture(scope="session")
def small_family() -> list[NumericalSemigroup]:
    """Every semigroup with multiplicity at most 6 and Frobenius at most 25."""
    return list(iter_semigroups(6, 25))


@pytest.fixture(scope="session")
def random_semigroups() -> list[NumericalSemigroup]:
    """A reproducible spread of semigroups of varied shape."""
    rng = random.Random(20240811)
    out = []
    seen = set()
    while len(out) < 40:
        e = rng.randint(1, 5)
        gens = sorted(rng.sample(range(2, 40), e)) if e > 1 else [1]
        try:
            H = NumericalSemigroup(gens)
        except Exception:
            continue
        if H.generators in seen:
            continue
        seen.add(H.generators)
        out.append(H)
    return out
