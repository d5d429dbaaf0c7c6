from collections import Counter
from itertools import permutations

from msalg.generate import (
    all_triples,
    boolean_algebras,
    de_morgan_algebras,
    de_morgan_involutions,
    distributive_lattices,
    kleene_algebras,
    random_triples,
    sample_triples,
    small_codomains,
)
from msalg.lattice import find_isomorphism, is_distributive
from msalg.ms import variety_of

import oracles


def test_distributive_catalog_matches_oracle():
    expected = Counter(
        L.n for L in oracles.all_small_lattices(8) if oracles.forbidden_sublattice(L) is None
    )
    got = Counter(L.n for L in distributive_lattices(8))
    assert got == expected
    assert all(is_distributive(L) for L in distributive_lattices(8))


def brute_involutions(L):
    out = []
    for f in permutations(range(L.n)):
        if any(f[f[x]] != x for x in range(L.n)):
            continue
        if all(L.leq(f[y], f[x]) for x in range(L.n) for y in range(L.n) if L.leq(x, y)):
            out.append(f)
    return out


def test_involutions_match_brute_force():
    for L in distributive_lattices(7):
        assert sorted(de_morgan_involutions(L)) == brute_involutions(L)


def test_catalog_is_irredundant():
    algs = de_morgan_algebras(8)
    for i, A in enumerate(algs):
        assert variety_of(A).de_morgan
        for B in algs[i + 1:]:
            assert find_isomorphism(A.lattice, B.lattice, A.neg, B.neg) is None


def test_boolean_sizes():
    assert sorted(A.n for A in boolean_algebras(8)) == [1, 2, 4, 8]
    assert set(boolean_algebras(8)) <= set(kleene_algebras(8))


def test_codomains():
    assert sorted(D.n for D in small_codomains()) == [1, 2, 3, 4, 4]


def test_random_triples_deterministic():
    a = random_triples(10, seed=4)
    b = random_triples(10, seed=4)
    assert [(t.M, t.D, t.phi) for t in a] == [(t.M, t.D, t.phi) for t in b]
    assert all(t.M.n <= 8 and t.D.n <= 4 for t in a)


def test_triple_kinds():
    k2 = all_triples(kleene_algebras(4), small_codomains(), kind="k2")
    assert k2 and all(t.k2_triple for t in k2)
    s = all_triples(boolean_algebras(4), small_codomains(), kind="s")
    assert s and all(t.s_triple for t in s)
    assert len(sample_triples(s, 3, seed=1)) == 3
