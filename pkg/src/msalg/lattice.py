"""Finite posets and bounded lattices given by Hasse diagrams.

Elements are named externally and indexed internally in a fixed topological
order: a linear extension of the order in which ties are broken by input
position.  Order relations are stored as bitmasks, ``down[i]`` holding every
``j <= i``.
"""

from .errors import InputError, NotALattice, NotAPoset, NotASubalgebra

__all__ = [
    "FinPoset",
    "FinLattice",
    "from_covers",
    "is_distributive",
    "distributivity_witness",
    "find_isomorphism",
    "principal_filter",
    "principal_ideal",
    "chain",
]


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _topological_order(names, covers):
    index = {}
    for pos, name in enumerate(names):
        if not isinstance(name, str):
            raise InputError(f"element name must be a string, got {name!r}")
        if name in index:
            raise InputError(f"duplicate element name {name!r}")
        index[name] = pos
    succ = [set() for _ in names]
    for edge in covers:
        if len(edge) != 2:
            raise InputError(f"cover must be a pair, got {edge!r}")
        lo, hi = edge
        for x in (lo, hi):
            if x not in index:
                raise InputError(f"cover ({lo!r}, {hi!r}) references unknown element {x!r}")
        if lo == hi:
            raise NotAPoset(f"cover ({lo!r}, {hi!r}) is a loop", witness=(lo, hi))
        succ[index[lo]].add(index[hi])
    indeg = [0] * len(names)
    for s in succ:
        for t in s:
            indeg[t] += 1
    order = []
    ready = sorted(i for i, d in enumerate(indeg) if d == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for t in sorted(succ[v]):
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
        ready.sort()
    if len(order) != len(names):
        stuck = min(i for i, d in enumerate(indeg) if d > 0)
        raise NotAPoset(f"covers contain a cycle through {names[stuck]!r}", witness=names[stuck])
    return order, succ


class FinPoset:
    """An immutable finite poset; ``down[i]`` is the bitmask of ``{j : j <= i}``."""

    def __init__(self, names, down):
        self.names = tuple(names)
        self.n = len(self.names)
        self.down = tuple(down)
        up = [0] * self.n
        for i, mask in enumerate(self.down):
            for j in _bits(mask):
                up[j] |= 1 << i
        self.up = tuple(up)
        self._index = {name: i for i, name in enumerate(self.names)}
        lower = []
        for i in range(self.n):
            strict = self.down[i] & ~(1 << i)
            shadow = 0
            for k in _bits(strict):
                shadow |= self.down[k] & ~(1 << k)
            lower.append(strict & ~shadow)
        self.lower_covers = tuple(lower)
        self.covers = tuple((j, i) for i in range(self.n) for j in _bits(lower[i]))

    @classmethod
    def from_covers(cls, elements, covers):
        names = list(elements)
        order, succ = _topological_order(names, covers)
        pos = {old: new for new, old in enumerate(order)}
        down = [0] * len(names)
        preds = [[] for _ in names]
        for lo, targets in enumerate(succ):
            for hi in targets:
                preds[pos[hi]].append(pos[lo])
        for i in range(len(names)):
            mask = 1 << i
            for p in preds[i]:
                mask |= down[p]
            down[i] = mask
        return cls([names[old] for old in order], down)

    def leq(self, i, j):
        return bool(self.down[j] >> i & 1)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown element {name!r}") from None

    def name_of(self, i):
        return self.names[i]

    def elements_below(self, i):
        return frozenset(_bits(self.down[i]))

    def elements_above(self, i):
        return frozenset(_bits(self.up[i]))

    def cover_names(self):
        return [(self.names[a], self.names[b]) for a, b in self.covers]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return type(self) is type(other) and self.names == other.names and self.down == other.down

    def __hash__(self):
        return hash((self.names, self.down))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.names)!r}, covers={self.cover_names()!r})"


class FinLattice(FinPoset):
    """A finite bounded lattice with precomputed meet and join tables."""

    unary_ops = ()

    def __init__(self, names, down):
        super().__init__(names, down)
        n = self.n
        if n == 0:
            raise NotALattice("the empty poset has no bottom or top")
        by_down = {m: i for i, m in enumerate(self.down)}
        by_up = {m: i for i, m in enumerate(self.up)}
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            meet[i][i] = join[i][i] = i
            for j in range(i + 1, n):
                m = by_down.get(self.down[i] & self.down[j])
                if m is None:
                    raise NotALattice(
                        f"{self.names[i]!r} and {self.names[j]!r} have no meet",
                        witness=(self.names[i], self.names[j]),
                    )
                k = by_up.get(self.up[i] & self.up[j])
                if k is None:
                    raise NotALattice(
                        f"{self.names[i]!r} and {self.names[j]!r} have no join",
                        witness=(self.names[i], self.names[j]),
                    )
                meet[i][j] = meet[j][i] = m
                join[i][j] = join[j][i] = k
        self.meet = tuple(tuple(r) for r in meet)
        self.join = tuple(tuple(r) for r in join)
        full = (1 << n) - 1
        self.bottom = by_up[full]
        self.top = by_down[full]

    @property
    def lattice(self):
        return self

    def meet_all(self, items):
        r = self.top
        for x in items:
            r = self.meet[r][x]
        return r

    def join_all(self, items):
        r = self.bottom
        for x in items:
            r = self.join[r][x]
        return r

    def is_closed(self, subset):
        """True iff ``subset`` is a nonempty sublattice."""
        s = set(subset)
        if not s:
            return False
        return all(self.meet[a][b] in s and self.join[a][b] in s for a in s for b in s)

    def induced(self, subset):
        """The sublattice on ``subset``; element k is ``sorted(subset)[k]``."""
        elems = sorted(set(subset))
        if not self.is_closed(elems):
            raise NotASubalgebra(f"{[self.names[i] for i in elems]} is not a sublattice")
        return _restrict_order(FinLattice, self, elems)

    def dual(self):
        """The order dual; index ``i`` of the dual is ``n - 1 - i`` here."""
        n = self.n
        down = []
        for i in range(n):
            mask = 0
            for j in _bits(self.up[n - 1 - i]):
                mask |= 1 << (n - 1 - j)
            down.append(mask)
        return FinLattice([self.names[n - 1 - i] for i in range(n)], down)


def _restrict_order(cls, poset, elems):
    pos = {e: k for k, e in enumerate(elems)}
    down = []
    for e in elems:
        mask = 0
        for j in _bits(poset.down[e]):
            if j in pos:
                mask |= 1 << pos[j]
        down.append(mask)
    return cls([poset.names[e] for e in elems], down)


def from_covers(elements, covers):
    """Build a :class:`FinLattice` from element names and (lower, upper) cover pairs.

    Transitive edges in ``covers`` are accepted and dropped.
    """
    return FinLattice.from_covers(elements, covers)


def chain(n, prefix=""):
    names = [f"{prefix}{i}" for i in range(n)]
    return from_covers(names, list(zip(names, names[1:])))


def distributivity_witness(L):
    """First triple (x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z), or None."""
    m, j = L.meet, L.join
    r = range(L.n)
    for x in r:
        for y in r:
            for z in r:
                if m[x][j[y][z]] != j[m[x][y]][m[x][z]]:
                    return (x, y, z)
    return None


def is_distributive(L):
    return distributivity_witness(L) is None


def principal_filter(L, a):
    return L.elements_above(a)


def principal_ideal(L, a):
    return L.elements_below(a)


def _signatures(P):
    n = P.n
    upper = [0] * n
    for lo, hi in P.covers:
        upper[lo] += 1
    depth = [0] * n
    for i in range(n):
        for j in _bits(P.lower_covers[i]):
            depth[i] = max(depth[i], depth[j] + 1)
    height = [0] * n
    for i in reversed(range(n)):
        for j in _bits(P.lower_covers[i]):
            height[j] = max(height[j], height[i] + 1)
    return [
        (bin(P.lower_covers[i]).count("1"), upper[i], depth[i], height[i]) for i in range(n)
    ]


def find_isomorphism(L1, L2, op1=None, op2=None):
    """Search for an order isomorphism ``L1 -> L2`` commuting with the unary tables.

    Returns the mapping as a tuple ``f`` with ``f[i]`` the image of element ``i``,
    or ``None`` when the exhaustive search finds nothing.  Unary tables are used
    only when both are given.
    """
    if L1.n != L2.n:
        return None
    n = L1.n
    use_op = op1 is not None and op2 is not None
    sig1, sig2 = _signatures(L1), _signatures(L2)
    if use_op:
        # fixed points are invariant under isomorphism
        sig1 = [s + (op1[i] == i,) for i, s in enumerate(sig1)]
        sig2 = [s + (op2[i] == i,) for i, s in enumerate(sig2)]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[c for c in range(n) if sig2[c] == sig1[i]] for i in range(n)]
    preimage_of = [[] for _ in range(n)]
    if use_op:
        for k in range(n):
            preimage_of[op1[k]].append(k)

    f = [-1] * n
    used = [False] * n

    def consistent(i, c):
        for k in range(i):
            fk = f[k]
            if L1.leq(k, i) != L2.leq(fk, c) or L1.leq(i, k) != L2.leq(c, fk):
                return False
        if use_op:
            t = op1[i]
            if t < i and f[t] != op2[c]:
                return False
            if t == i and op2[c] != c:
                return False
            for k in preimage_of[i]:
                if k < i and op2[f[k]] != c:
                    return False
        return True

    def search(i):
        if i == n:
            return True
        for c in candidates[i]:
            if not used[c] and consistent(i, c):
                f[i] = c
                used[c] = True
                if search(i + 1):
                    return True
                used[c] = False
        f[i] = -1
        return False

    if search(0):
        return tuple(f)
    return None
