import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msalg.congruence import (
    Congruence,
    all_congruences,
    brute_force_congruences,
    con_join,
    con_meet,
    generated_by_image,
    identity,
    is_congruence,
    principal_congruence,
    restrict,
    total,
)
from msalg.errors import NotAHomomorphism, NotASubalgebra, TooLarge
from msalg.generate import de_morgan_algebras, distributive_lattices, random_triples
from msalg.lattice import chain
from msalg.ms import make_ms
from msalg.triple import construct

import oracles
from util import part

CONSTRUCTED = [construct(t) for t in random_triples(60, seed=99)]


def small_algebras():
    out = list(de_morgan_algebras(8)) + list(distributive_lattices(8))
    out += [make_ms(chain(len(n)), list(n)) for k in range(1, 6) for n in oracles.ms_chain_tables(k)]
    out += [c.algebra for c in CONSTRUCTED if c.algebra.n <= 8]
    out += oracles.all_small_lattices(8)
    return out


SMALL = small_algebras()


def test_l1_principal(l1):
    theta = principal_congruence(l1, l1.index("(b,0)"), l1.index("(b,1)"))
    assert theta == part(l1, ["(b,0)", "(b,1)"], ["(1,0)", "(1,1)"])


def test_trivial_principal(l2):
    assert principal_congruence(l2, 3, 3) == identity(l2.n)


def test_m1_zero_a_collapses(m1):
    assert principal_congruence(m1, m1.index("0"), m1.index("a")).is_total()


def test_con_m1_l1_s(m1, l1, s3):
    assert list(all_congruences(m1)) == [identity(4), total(4)]
    con = all_congruences(l1)
    assert len(con) == 3
    assert con[1] == part(l1, ["(b,0)", "(b,1)"], ["(1,0)", "(1,1)"])
    theta_s = part(s3, ["(1,0)", "(1,1)"])
    assert list(all_congruences(s3)) == [identity(3), theta_s, total(3)]


def test_brute_force_examples(m1, m2):
    assert len(brute_force_congruences(m1)) == 2
    assert len(brute_force_congruences(make_ms(chain(1), [0]))) == 1
    con = brute_force_congruences(m2)
    theta = part(m2, ["a", "c"], ["b", "b'"], ["d", "d'"], ["c'", "a'"])
    assert theta in con and len(con) >= 3
    with pytest.raises(TooLarge):
        brute_force_congruences(m2, cap=9)


def test_restrict_examples(l1, l2, s3):
    S = [l1.index(x) for x in ("(0,0)", "(1,0)", "(1,1)")]
    theta = part(l1, ["(b,0)", "(b,1)"], ["(1,0)", "(1,1)"])
    theta_s = part(s3, ["(1,0)", "(1,1)"])
    assert restrict(theta, l1, S) == theta_s
    assert restrict(identity(l1.n), l1, S) == identity(3)
    S2 = [l2.index(x) for x in ("(0,0)", "(1,0)", "(1,1)")]
    for th in (L2_THETA1, L2_THETA2):
        assert restrict(part(l2, *th), l2, S2) == theta_s
    with pytest.raises(NotASubalgebra):
        restrict(theta, l1, [l1.index("(a,0)")])


L2_THETA1 = (
    ["(1,0)", "(1,1)"],
    ["(d,0)", "(d,1)"],
    ["(d',0)", "(d',1)"],
    ["(c',0)", "(c',1)"],
    ["(a',0)", "(a',1)"],
)
L2_THETA2 = (
    ["(1,0)", "(1,1)"],
    ["(d,0)", "(d,1)", "(d',0)", "(d',1)"],
    ["(a,0)", "(c,0)"],
    ["(b,0)", "(b',0)"],
    ["(c',0)", "(c',1)", "(a',0)", "(a',1)"],
)


def test_meet_join(l2, s3):
    t1, t2 = part(l2, *L2_THETA1), part(l2, *L2_THETA2)
    assert is_congruence(l2, t1) and is_congruence(l2, t2)
    expected = part(
        l2,
        ["(1,0)", "(1,1)"],
        ["(d,0)", "(d,1)"],
        ["(d',0)", "(d',1)"],
        ["(c',0)", "(c',1)"],
        ["(a',0)", "(a',1)"],
    )
    assert con_meet(t1, t2) == expected
    assert con_join(identity(l2.n), t1) == t1
    theta_s = part(s3, ["(1,0)", "(1,1)"])
    assert con_join(theta_s, total(3)) == total(3)


def test_generated_by_image(m1, t1):
    two = t1.D
    assert generated_by_image(t1.phi, total(4), m1.lattice, two) == total(2)
    assert generated_by_image(t1.phi, identity(4), m1.lattice, two) == identity(2)
    theta = Congruence([0, 0, 2, 2])
    assert generated_by_image(tuple(range(4)), theta, m1.lattice, m1.lattice) == theta
    with pytest.raises(NotAHomomorphism):
        generated_by_image((0, 1, 1, 1), total(4), m1.lattice, two)


def test_oracle_equivalence_small():
    for A in SMALL:
        fast = set(all_congruences(A))
        slow = set(brute_force_congruences(A))
        assert fast == slow, A.names


def test_brute_force_matches_naive_partitions():
    for A in SMALL:
        if A.n <= 7:
            got = {c.labels for c in brute_force_congruences(A)}
            assert got == oracles.naive_congruences(A), A.names


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL))
def test_enumerated_members_are_congruences(A):
    con = all_congruences(A)
    assert con.bottom.is_identity() and con.top.is_total()
    for theta in con:
        assert is_congruence(A, theta)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_principal_is_least(A, data):
    a = data.draw(st.integers(0, A.n - 1))
    b = data.draw(st.integers(0, A.n - 1))
    p = principal_congruence(A, a, b)
    assert p.related(a, b)
    for theta in all_congruences(A):
        if theta.related(a, b):
            assert p <= theta


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CONSTRUCTED))
def test_image_map_preserves_joins(c):
    M, L = c.triple.M, c.algebra
    con = list(all_congruences(M))
    img = {t: generated_by_image(c.tau1, t, M, L) for t in con}
    for a in con:
        for b in con:
            assert generated_by_image(c.tau1, con_join(a, b), M, L) == con_join(img[a], img[b])


def test_con_lattice_tables(l2):
    con = all_congruences(l2)
    for i in range(len(con)):
        for j in range(len(con)):
            assert con[con.meet[i][j]] == con_meet(con[i], con[j])
            assert con[con.join[i][j]] == con_join(con[i], con[j])
    Lc = con.as_lattice()
    assert Lc.n == len(con)


def test_from_blocks_rejects_overlap():
    with pytest.raises(ValueError):
        Congruence.from_blocks(3, [[0, 1], [1, 2]])
