"""Small finite structures for tests and benchmarks.

Distributive lattices come from Birkhoff's representation: the down-sets of
a finite poset, ordered by inclusion.  De Morgan algebras are those lattices
equipped with an order-reversing involution.  Everything is deterministic;
random sampling takes an explicit seed.
"""

import random
import string
from functools import lru_cache

from .extension import enumerate_homs01
from .lattice import _bits, chain, find_isomorphism, from_covers
from .ms import make_ms, variety_of
from .triple import validate_triple

__all__ = [
    "downset_lattice",
    "distributive_lattices",
    "de_morgan_involutions",
    "de_morgan_algebras",
    "kleene_algebras",
    "boolean_algebras",
    "small_codomains",
    "all_triples",
    "random_triples",
    "sample_triples",
]


def _names(n):
    """``0``, then letters, then ``1`` for the top."""
    if n == 1:
        return ["0"]
    middle = list(string.ascii_lowercase[: n - 2])
    return ["0"] + middle + ["1"]


def downset_lattice(below):
    """Lattice of down-sets of the poset with strict down-set masks ``below``."""
    k = len(below)
    sets = []
    for mask in range(1 << k):
        if all(below[i] & ~mask == 0 for i in _bits(mask)):
            sets.append(mask)
    # sort by size, then value, so bottom is first and top is last
    sets.sort(key=lambda m: (bin(m).count("1"), m))
    names = _names(len(sets))
    pos = {m: i for i, m in enumerate(sets)}
    covers = [
        (names[pos[m]], names[pos[m | (1 << i)]])
        for m in sets
        for i in range(k)
        if not m & (1 << i) and (m | (1 << i)) in pos
    ]
    return from_covers(names, covers)


def _posets(max_downsets):
    """Posets (as strict down-set masks) whose down-set lattice has at most ``max_downsets`` elements.

    Points are added one at a time as new maximal elements, so every poset
    appears (many times, under different labelings).
    """
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for below in frontier:
            k = len(below)
            for mask in range(1 << k):
                # the new point's strict down-set must itself be a down-set
                if any(below[i] & ~mask for i in _bits(mask)):
                    continue
                cand = below + (mask,)
                if _count_downsets(cand) <= max_downsets:
                    out.append(cand)
                    nxt.append(cand)
        frontier = nxt
    return out


def _count_downsets(below):
    k = len(below)
    return sum(1 for m in range(1 << k) if all(below[i] & ~m == 0 for i in _bits(m)))


def _dedupe(items, key_ops=lambda x: (x, None)):
    kept = []
    for item in items:
        lat, op = key_ops(item)
        if not any(
            find_isomorphism(lat, k_lat, op, k_op) is not None
            for k_lat, k_op in map(key_ops, kept)
        ):
            kept.append(item)
    return kept


@lru_cache(maxsize=None)
def distributive_lattices(max_size=8):
    """Every distributive lattice with at most ``max_size`` elements, up to isomorphism."""
    lattices = [downset_lattice(p) for p in _posets(max_size)]
    lattices.sort(key=lambda L: L.n)
    return tuple(_dedupe(lattices))


def de_morgan_involutions(L):
    """Every order-reversing involution of ``L``, as index tables."""
    n = L.n
    f = [-1] * n
    out = []

    def ok(i, c):
        for k in range(n):
            fk = f[k]
            if fk < 0:
                continue
            if L.leq(k, i) != L.leq(c, fk) or L.leq(i, k) != L.leq(fk, c):
                return False
        return True

    def rec(i):
        if i == n:
            out.append(tuple(f))
            return
        if f[i] >= 0:
            rec(i + 1)
            return
        for c in range(i, n):
            if f[c] >= 0 or not ok(i, c):
                continue
            f[i], f[c] = c, i
            if c == i or ok(c, i):
                rec(i + 1)
            f[i] = f[c] = -1

    rec(0)
    return out


@lru_cache(maxsize=None)
def de_morgan_algebras(max_size=8):
    """De Morgan algebras with at most ``max_size`` elements, up to isomorphism."""
    found = []
    for L in distributive_lattices(max_size):
        algs = [make_ms(L, list(neg)) for neg in de_morgan_involutions(L)]
        found.extend(_dedupe(algs, lambda A: (A.lattice, A.neg)))
    return tuple(found)


def kleene_algebras(max_size=8):
    return tuple(A for A in de_morgan_algebras(max_size) if variety_of(A).kleene)


def boolean_algebras(max_size=8):
    return tuple(A for A in de_morgan_algebras(max_size) if variety_of(A).boolean)


@lru_cache(maxsize=None)
def small_codomains():
    """The distributive lattices with at most four elements: chains 1-4 and 2x2."""
    square = from_covers(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    return tuple(chain(k) for k in range(1, 5)) + (square,)


def all_triples(algebras, codomains, kind=None):
    """Every triple over the given algebras and codomains, ``kind`` in {None, "k2", "s"}."""
    out = []
    for M in algebras:
        for D in codomains:
            for phi in enumerate_homs01(M.lattice, D):
                t = validate_triple(M, D, phi)
                if kind == "k2" and not t.k2_triple:
                    continue
                if kind == "s" and not t.s_triple:
                    continue
                out.append(t)
    return out


def random_triples(count, seed=0, max_m=8, codomains=None):
    """``count`` random triples with ``|M| <= max_m``; duplicates are possible."""
    rng = random.Random(seed)
    algebras = de_morgan_algebras(max_m)
    codomains = codomains or small_codomains()
    out = []
    while len(out) < count:
        M = rng.choice(algebras)
        D = rng.choice(codomains)
        homs = list(enumerate_homs01(M.lattice, D))
        if not homs:
            continue
        out.append(validate_triple(M, D, rng.choice(homs)))
    return out


def sample_triples(triples, count, seed=0):
    """``count`` distinct members of ``triples`` (all of them if there are fewer)."""
    rng = random.Random(seed)
    if len(triples) <= count:
        return list(triples)
    return rng.sample(list(triples), count)
