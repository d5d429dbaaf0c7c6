import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msalg import _pykernels, kernels
from msalg.generate import de_morgan_algebras, random_triples
from msalg.io import load_algebra
from msalg.triple import construct

ALGEBRAS = list(de_morgan_algebras(8)) + [construct(t).algebra for t in random_triples(30, seed=3)]
ALGEBRAS += [load_algebra(f) for f in ("m2.alg", "l2.alg")]

compiled = pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="compiled kernels not built")


def test_default_backend_prefers_compiled():
    expected = "cython" if "cython" in kernels.BACKENDS else "python"
    assert kernels.BACKEND == expected


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@compiled
@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ALGEBRAS), st.integers(0, 2**32 - 1))
def test_closure_twins_agree(A, seed):
    from msalg import _ckernels

    rng = random.Random(seed)
    n, meet, join, unary, nun = kernels.flat_tables(A)
    seeds = []
    for _ in range(rng.randint(1, 3)):
        seeds += [rng.randrange(n), rng.randrange(n)]
    labels = list(range(n))
    a = _pykernels.closure(n, meet, join, unary, nun, labels, seeds)
    b = _ckernels.closure(n, meet, join, unary, nun, labels, seeds)
    assert a == b


@compiled
@pytest.mark.parametrize("A", [A for A in ALGEBRAS if A.n <= 10], ids=lambda A: f"n{A.n}")
def test_partition_twins_agree(A):
    from msalg import _ckernels

    n, meet, join, unary, nun = kernels.flat_tables(A)
    assert _pykernels.compatible_partitions(n, meet, join, unary, nun) == _ckernels.compatible_partitions(
        n, meet, join, unary, nun
    )
    lat = A.lattice
    n, meet, join, unary, nun = kernels.flat_tables(lat)
    assert _pykernels.compatible_partitions(n, meet, join, unary, nun) == _ckernels.compatible_partitions(
        n, meet, join, unary, nun
    )


def test_results_independent_of_backend():
    from msalg.congruence import all_congruences

    prev = kernels.BACKEND
    try:
        got = {}
        for name in kernels.BACKENDS:
            kernels.use_backend(name)
            got[name] = [list(all_congruences(A)) for A in ALGEBRAS[:20]]
        assert len({repr(v) for v in got.values()}) == 1
    finally:
        kernels.use_backend(prev)
