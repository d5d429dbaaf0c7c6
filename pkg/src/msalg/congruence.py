"""Congruences of finite lattice-based algebras.

Any object exposing ``n``, ``meet``, ``join`` and ``unary_ops`` is an algebra
here: a :class:`~msalg.lattice.FinLattice` has no unary operations, an
:class:`~msalg.ms.MSAlgebra` has one.  To treat an MS-algebra as a plain
lattice pass its ``.lattice``.
"""

from functools import cached_property

from . import kernels
from .errors import NotAHomomorphism, NotASubalgebra, TooLarge
from .lattice import FinLattice

__all__ = [
    "Congruence",
    "ConLattice",
    "identity",
    "total",
    "is_congruence",
    "generate",
    "principal_congruence",
    "all_congruences",
    "brute_force_congruences",
    "restrict",
    "generated_by_image",
    "check_homomorphism",
    "con_meet",
    "con_join",
]


def _canonical(labels):
    leader = {}
    out = []
    for x, lab in enumerate(labels):
        out.append(leader.setdefault(lab, x))
    return tuple(out)


class Congruence:
    """A partition stored as ``labels[x]`` = least element of the block of ``x``."""

    __slots__ = ("labels",)

    def __init__(self, labels):
        self.labels = _canonical(labels)

    @classmethod
    def from_blocks(cls, n, blocks):
        labels = list(range(n))
        seen = set()
        for block in blocks:
            block = list(block)
            if not block:
                continue
            for x in block:
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
            lead = min(block)
            for x in block:
                labels[x] = lead
        return cls(labels)

    @property
    def n(self):
        return len(self.labels)

    def related(self, a, b):
        return self.labels[a] == self.labels[b]

    def blocks(self):
        out = {}
        for x, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(x)
        return [tuple(b) for b in out.values()]

    def nontrivial_blocks(self):
        return [b for b in self.blocks() if len(b) > 1]

    @property
    def nblocks(self):
        return sum(1 for x, lab in enumerate(self.labels) if x == lab)

    def pairs(self):
        """Related pairs ``(x, y)`` with ``x < y``."""
        for b in self.blocks():
            for i, x in enumerate(b):
                for y in b[i + 1:]:
                    yield x, y

    def is_identity(self):
        return all(x == lab for x, lab in enumerate(self.labels))

    def is_total(self):
        return all(lab == 0 for lab in self.labels)

    def __le__(self, other):
        o = other.labels
        return all(o[x] == o[lab] for x, lab in enumerate(self.labels))

    def __ge__(self, other):
        return other <= self

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Congruence({[list(b) for b in self.nontrivial_blocks()]}, n={self.n})"

    def _sort_key(self):
        return (self.n - self.nblocks, self.labels)


def identity(n):
    return Congruence(range(n))


def total(n):
    return Congruence([0] * n)


def is_congruence(A, theta):
    """Direct compatibility check against every basic translation."""
    if theta.n != A.n:
        return False
    lab = theta.labels
    m, j = A.meet, A.join
    for x in range(A.n):
        l = lab[x]
        if l == x:
            continue
        for c in range(A.n):
            if lab[m[x][c]] != lab[m[l][c]] or lab[j[x][c]] != lab[j[l][c]]:
                return False
        for op in A.unary_ops:
            if lab[op[x]] != lab[op[l]]:
                return False
    return True


def generate(A, pairs, base=None):
    """Least congruence of ``A`` containing ``base`` (a congruence) and ``pairs``."""
    labels = list(base.labels) if base is not None else list(range(A.n))
    seeds = []
    for a, b in pairs:
        if a != b:
            seeds.append(a)
            seeds.append(b)
    if not seeds:
        return Congruence(labels)
    return Congruence(kernels.closure(A, labels, seeds))


def principal_congruence(A, a, b):
    return generate(A, [(a, b)])


def con_meet(theta, psi):
    return Congruence(list(zip(theta.labels, psi.labels)))


def con_join(theta, psi):
    n = theta.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rel in (theta.labels, psi.labels):
        for x, lab in enumerate(rel):
            rx, rl = find(x), find(lab)
            if rx != rl:
                parent[max(rx, rl)] = min(rx, rl)
    return Congruence([find(x) for x in range(n)])


class ConLattice:
    """The congruence lattice of an algebra, in canonical order (Δ first, ∇ last)."""

    def __init__(self, algebra, congruences):
        self.algebra = algebra
        self.congruences = tuple(sorted(set(congruences), key=Congruence._sort_key))
        self._index = {c: i for i, c in enumerate(self.congruences)}

    def __len__(self):
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    def __getitem__(self, i):
        return self.congruences[i]

    def __contains__(self, theta):
        return theta in self._index

    def index(self, theta):
        return self._index[theta]

    @property
    def bottom(self):
        return self.congruences[0]

    @property
    def top(self):
        return self.congruences[-1]

    @cached_property
    def leq(self):
        cs = self.congruences
        return tuple(tuple(a <= b for b in cs) for a in cs)

    @cached_property
    def meet(self):
        cs = self.congruences
        return tuple(tuple(self._index[con_meet(a, b)] for b in cs) for a in cs)

    @cached_property
    def join(self):
        cs = self.congruences
        return tuple(tuple(self._index[con_join(a, b)] for b in cs) for a in cs)

    def as_lattice(self):
        """The refinement order as a :class:`FinLattice` with elements ``"0"``, ``"1"``, ..."""
        names = [str(i) for i in range(len(self))]
        edges = [
            (names[i], names[j])
            for i in range(len(self))
            for j in range(len(self))
            if i != j and self.leq[i][j]
        ]
        return FinLattice.from_covers(names, edges)


def _cover_generators(A):
    gens = set()
    lat = A.lattice
    for lo, hi in lat.covers:
        gens.add(principal_congruence(A, lo, hi))
    return sorted(gens, key=Congruence._sort_key)


def all_congruences(A):
    """Con(A) as the join-closure of Δ and the principal congruences of covering pairs.

    Every principal congruence θ(a, b) is the join of θ over the covers of a
    maximal chain from a∧b to a∨b, so covering pairs generate everything.
    """
    gens = _cover_generators(A)
    delta = identity(A.n)
    found = {delta}
    frontier = [delta]
    while frontier:
        c = frontier.pop()
        for g in gens:
            if g <= c:
                continue
            j = con_join(c, g)
            if j not in found:
                found.add(j)
                frontier.append(j)
    return ConLattice(A, found)


def brute_force_congruences(A, cap=10):
    """Every compatible partition, by exhaustive enumeration.  Oracle only."""
    if A.n > cap:
        raise TooLarge(f"{A.n} elements exceeds the brute-force cap of {cap}")
    return sorted(
        (Congruence(lab) for lab in kernels.compatible_partitions(A)),
        key=Congruence._sort_key,
    )


def restrict(theta, A, subset):
    """``theta ∩ S²`` as a congruence of ``A.induced(subset)``."""
    elems = sorted(set(subset))
    if not A.is_closed(elems):
        raise NotASubalgebra(f"{[A.names[i] for i in elems]} is not closed under the operations")
    return Congruence([theta.labels[e] for e in elems])


def check_homomorphism(tau, A, B):
    """Raise :class:`NotAHomomorphism` unless ``tau`` preserves the common signature."""
    if len(tau) != A.n or any(not (0 <= v < B.n) for v in tau):
        raise NotAHomomorphism("map must send every element of the domain into the codomain")
    for x in range(A.n):
        for y in range(x, A.n):
            if tau[A.meet[x][y]] != B.meet[tau[x]][tau[y]]:
                raise NotAHomomorphism(f"meet not preserved at ({x}, {y})", witness=(x, y))
            if tau[A.join[x][y]] != B.join[tau[x]][tau[y]]:
                raise NotAHomomorphism(f"join not preserved at ({x}, {y})", witness=(x, y))
    for opa, opb in zip(A.unary_ops, B.unary_ops):
        for x in range(A.n):
            if tau[opa[x]] != opb[tau[x]]:
                raise NotAHomomorphism(f"unary operation not preserved at {x}", witness=(x,))


def generated_by_image(tau, theta, A, B, check=True):
    """Con(tau)(theta): the congruence of ``B`` generated by the image pairs."""
    if check:
        check_homomorphism(tau, A, B)
    pairs = [(tau[x], tau[lab]) for x, lab in enumerate(theta.labels) if x != lab]
    return generate(B, pairs)
