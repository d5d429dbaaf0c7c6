"""Small helpers shared by the tests."""

from msalg.congruence import Congruence


def part(A, *blocks):
    """Congruence of ``A`` from blocks of element names; unnamed elements stay single."""
    return Congruence.from_blocks(A.n, [[A.index(x) for x in b] for b in blocks])


def names(A, items):
    return {A.names[i] for i in items}
