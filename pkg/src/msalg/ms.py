"""MS-algebras: a bounded distributive lattice with a unary operation ``x -> x°``."""

from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    AxiomViolation,
    InputError,
    NotASubalgebra,
    NotDistributive,
    NotFixedPoint,
    TheoremViolation,
)
from .lattice import FinLattice, _bits, distributivity_witness

__all__ = [
    "MSAlgebra",
    "VarietyFlags",
    "Substructures",
    "PrincipalCheck",
    "make_ms",
    "axiom_violation",
    "variety_of",
    "substructures",
    "is_principal_ms",
    "cone",
]


class MSAlgebra:
    """Validated MS-algebra.  Build through :func:`make_ms`."""

    def __init__(self, lattice, neg):
        self.lattice = lattice
        self.neg = tuple(neg)
        self.unary_ops = (self.neg,)

    # lattice delegation keeps the congruence code signature-agnostic
    names = property(lambda self: self.lattice.names)
    n = property(lambda self: self.lattice.n)
    meet = property(lambda self: self.lattice.meet)
    join = property(lambda self: self.lattice.join)
    bottom = property(lambda self: self.lattice.bottom)
    top = property(lambda self: self.lattice.top)
    covers = property(lambda self: self.lattice.covers)

    def leq(self, i, j):
        return self.lattice.leq(i, j)

    def index(self, name):
        return self.lattice.index(name)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, MSAlgebra) and self.lattice == other.lattice and self.neg == other.neg

    def __hash__(self):
        return hash((self.lattice, self.neg))

    def __repr__(self):
        pairs = {self.names[i]: self.names[v] for i, v in enumerate(self.neg)}
        return f"MSAlgebra({list(self.names)!r}, neg={pairs!r})"

    def is_closed(self, subset):
        s = set(subset)
        if self.bottom not in s or self.top not in s:
            return False
        if any(self.neg[a] not in s for a in s):
            return False
        return self.lattice.is_closed(s)

    def induced(self, subset):
        """The subalgebra on ``subset``; element k is ``sorted(subset)[k]``."""
        elems = sorted(set(subset))
        if not self.is_closed(elems):
            raise NotASubalgebra(f"{[self.names[i] for i in elems]} is not an MS-subalgebra")
        sub = self.lattice.induced(elems)
        pos = {e: k for k, e in enumerate(elems)}
        return MSAlgebra(sub, [pos[self.neg[e]] for e in elems])


def _neg_table(lattice, neg):
    n = lattice.n
    if isinstance(neg, dict):
        if set(neg) != set(lattice.names):
            missing = sorted(set(lattice.names) - set(neg))
            extra = sorted(set(neg) - set(lattice.names))
            raise InputError(f"neg must be total on the carrier (missing {missing}, unknown {extra})")
        return [lattice.index(neg[name]) for name in lattice.names]
    table = list(neg)
    if len(table) != n or any(not (0 <= v < n) for v in table):
        raise InputError("neg table must map every element index to an element index")
    return table


def axiom_violation(lattice, neg):
    """First failing MS axiom as ``(axiom, witness)`` or ``None``."""
    m, j = lattice.meet, lattice.join
    r = range(lattice.n)
    for x in r:
        if not lattice.leq(x, neg[neg[x]]):
            return "MS1", (x,)
    for x in r:
        for y in r:
            if neg[m[x][y]] != j[neg[x]][neg[y]]:
                return "MS2", (x, y)
    if neg[lattice.top] != lattice.bottom:
        return "MS3", (lattice.top,)
    return None


def make_ms(lattice, neg):
    """Validate ``neg`` (index list or name->name dict) as an MS-operation on ``lattice``."""
    w = distributivity_witness(lattice)
    if w is not None:
        names = tuple(lattice.names[i] for i in w)
        raise NotDistributive(f"x∧(y∨z) != (x∧y)∨(x∧z) at {names}", witness=names)
    table = _neg_table(lattice, neg)
    bad = axiom_violation(lattice, table)
    if bad is not None:
        axiom, wit = bad
        names = tuple(lattice.names[i] for i in wit)
        raise AxiomViolation(axiom, f"fails at {names}", witness=names)
    return MSAlgebra(lattice, table)


@dataclass(frozen=True)
class VarietyFlags:
    de_morgan: bool
    kleene: bool
    stone: bool
    k2: bool
    boolean: bool
    principal_ms: bool
    # flag name -> first failing element tuple
    witnesses: dict = field(default_factory=dict, compare=False)

    def as_dict(self):
        return {
            "de_morgan": self.de_morgan,
            "kleene": self.kleene,
            "stone": self.stone,
            "k2": self.k2,
            "boolean": self.boolean,
            "principal_ms": self.principal_ms,
        }


def _first_failure(r, arity, pred):
    if arity == 1:
        for x in r:
            if not pred(x):
                return (x,)
    else:
        for x in r:
            for y in r:
                if not pred(x, y):
                    return (x, y)
    return None


def variety_of(A):
    m, j, neg = A.meet, A.join, A.neg
    r = range(A.n)
    zero, one = A.bottom, A.top
    w = {}
    w["MS4"] = _first_failure(r, 1, lambda x: neg[neg[x]] == x)
    w["MS5"] = _first_failure(
        r, 2, lambda x, y: j[j[m[x][neg[x]]][y]][neg[y]] == j[y][neg[y]]
    )
    w["MS6"] = _first_failure(r, 1, lambda x: m[x][neg[x]] == m[neg[neg[x]]][neg[x]])
    w["stone"] = _first_failure(r, 1, lambda x: m[x][neg[x]] == zero)
    w["boolean"] = _first_failure(r, 1, lambda x: j[x][neg[x]] == one)
    pc = is_principal_ms(A)
    de_morgan = w["MS4"] is None
    flags = dict(
        de_morgan=de_morgan,
        kleene=de_morgan and w["MS5"] is None,
        stone=w["stone"] is None,
        k2=w["MS5"] is None and w["MS6"] is None,
        boolean=w["boolean"] is None,
        principal_ms=pc.ok,
    )
    witnesses = {k: v for k, v in w.items() if v is not None}
    if not pc.ok:
        witnesses["principal_ms"] = (pc.witness,)
    if not flags["kleene"] and w["MS4"] is None:
        witnesses["kleene"] = w["MS5"]
    return VarietyFlags(witnesses=witnesses, **flags)


@dataclass(frozen=True)
class Substructures:
    closed: frozenset
    dense: frozenset
    smallest_dense: Optional[int]
    boolean_center: frozenset
    stone_part: frozenset
    vee: frozenset
    wedge: frozenset


def _smallest(A, subset):
    mins = [x for x in subset if not any(y != x and A.leq(y, x) for y in subset)]
    return mins[0] if len(mins) == 1 else None


def substructures(A):
    neg, m, j = A.neg, A.meet, A.join
    r = range(A.n)
    one = A.top
    closed = frozenset(x for x in r if neg[neg[x]] == x)
    dense = frozenset(x for x in r if neg[x] == A.bottom)
    center = frozenset(x for x in r if j[x][neg[x]] == one)
    stone = frozenset(x for x in r if j[neg[x]][neg[neg[x]]] == one)
    for label, s in (("closed", closed), ("boolean_center", center), ("stone_part", stone)):
        if not A.is_closed(s):
            raise TheoremViolation(f"{label} elements do not form a subalgebra")
    return Substructures(
        closed=closed,
        dense=dense,
        smallest_dense=_smallest(A, sorted(dense)),
        boolean_center=center,
        stone_part=stone,
        vee=frozenset(j[x][neg[x]] for x in r),
        wedge=frozenset(m[x][neg[x]] for x in r),
    )


@dataclass(frozen=True)
class PrincipalCheck:
    ok: bool
    d: Optional[int] = None
    condition: Optional[str] = None
    witness: Optional[int] = None

    def __bool__(self):
        return self.ok


def is_principal_ms(A):
    """Check that the dense filter is principal, ``[d)``, and ``x = x°° ∧ (x ∨ d)`` everywhere."""
    neg, m, j = A.neg, A.meet, A.join
    dense = [x for x in range(A.n) if neg[x] == A.bottom]
    d = _smallest(A, dense)
    if d is None:
        mins = [x for x in dense if not any(y != x and A.leq(y, x) for y in dense)]
        return PrincipalCheck(False, None, "dense filter has no least element", mins[0])
    for x in range(A.n):
        if m[neg[neg[x]]][j[x][d]] != x:
            return PrincipalCheck(False, d, "x != x°° ∧ (x ∨ d)", x)
    return PrincipalCheck(True, d)


def cone(A, a):
    """``↓a ∪ ↑a`` for a fixed point ``a = a°``."""
    if A.neg[a] != a:
        raise NotFixedPoint(f"{A.names[a]!r} is not a fixed point of °", witness=A.names[a])
    c = frozenset(_bits(A.lattice.down[a] | A.lattice.up[a]))
    if not A.is_closed(c):
        raise TheoremViolation(f"cone of {A.names[a]!r} is not a subalgebra")
    return c
