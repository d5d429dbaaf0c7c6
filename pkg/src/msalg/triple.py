"""Principal MS-triples, the algebra they build, and MS-congruence pairs.

A triple ``(M, D, phi)`` has a de Morgan algebra ``M``, a bounded distributive
lattice ``D`` and a (0,1)-lattice homomorphism ``phi: M -> D``.  It builds the
principal MS-algebra on ``{(x, y) : y <= phi(x)}``.  Congruences of a principal
MS-algebra ``L`` correspond one-to-one with pairs ``(theta1, theta2)`` of
congruences on the closed elements and on the dense filter ``[d)`` satisfying
``(a, b) in theta1  =>  (a v d, b v d) in theta2``.
"""

from dataclasses import dataclass
from typing import Optional

from .congruence import (
    Congruence,
    all_congruences,
    con_join,
    con_meet,
    is_congruence,
    restrict,
)
from .errors import (
    InputError,
    MSAlgError,
    NotAHom01,
    NotDeMorgan,
    NotDistributive,
    NotK2,
    NotK2Triple,
    NotPrincipal,
    TheoremViolation,
)
from .lattice import FinLattice, distributivity_witness
from .ms import is_principal_ms, make_ms, substructures, variety_of

__all__ = [
    "Triple",
    "ConstructedAlgebra",
    "MSPair",
    "PrincipalParts",
    "PairLattice",
    "BeazerCheck",
    "KleeneReport",
    "validate_triple",
    "construct",
    "principal_parts",
    "cp_witness",
    "pairs_of",
    "pair_to_congruence",
    "congruence_to_pair",
    "beazer_pair_check",
    "kleene_parts_check",
]


def hom01_witness(M, D, phi):
    """First reason ``phi`` fails to be a (0,1)-lattice homomorphism, or ``None``."""
    if phi[M.bottom] != D.bottom:
        return "bottom", (M.bottom,)
    if phi[M.top] != D.top:
        return "top", (M.top,)
    for x in range(M.n):
        for y in range(x + 1, M.n):
            if phi[M.meet[x][y]] != D.meet[phi[x]][phi[y]]:
                return "meet", (x, y)
            if phi[M.join[x][y]] != D.join[phi[x]][phi[y]]:
                return "join", (x, y)
    return None


@dataclass(frozen=True)
class Triple:
    M: object
    D: FinLattice
    phi: tuple
    k2_triple: bool
    s_triple: bool


def validate_triple(M, D, phi):
    """Check ``(M, D, phi)`` and set the K2/S kind flags.  ``phi`` may be a name map."""
    flags = variety_of(M)
    if not flags.de_morgan:
        x = flags.witnesses["MS4"][0]
        raise NotDeMorgan(f"{M.names[x]!r} differs from its double negation", witness=M.names[x])
    w = distributivity_witness(D)
    if w is not None:
        names = tuple(D.names[i] for i in w)
        raise NotDistributive(f"D fails distributivity at {names}", witness=names)
    if isinstance(phi, dict):
        if set(phi) != set(M.names):
            raise InputError("phi must be defined on every element of M")
        phi = [D.index(phi[name]) for name in M.names]
    phi = tuple(phi)
    if len(phi) != M.n or any(not (0 <= v < D.n) for v in phi):
        raise InputError("phi must map every element of M into D")
    bad = hom01_witness(M, D, phi)
    if bad is not None:
        what, wit = bad
        names = tuple(M.names[i] for i in wit)
        raise NotAHom01(f"phi does not preserve {what} at {names}", witness=(what, names))
    k2 = flags.kleene and all(phi[M.meet[x][M.neg[x]]] == D.bottom for x in range(M.n))
    return Triple(M, D, phi, k2, k2 and flags.boolean)


@dataclass(frozen=True)
class ConstructedAlgebra:
    algebra: object
    labels: tuple  # element index -> (M index, D index)
    tau1: tuple  # M index -> index of (x, phi(x))
    tau2: tuple  # D index -> index of (1_M, y)
    triple: Triple

    def index_of(self, x, y):
        return self.labels.index((x, y))


def construct(t):
    """Build the principal MS-algebra of a validated triple."""
    M, D, phi = t.M, t.D, t.phi
    labels = [(x, y) for x in range(M.n) for y in range(D.n) if D.leq(y, phi[x])]
    pos = {lab: i for i, lab in enumerate(labels)}
    names = [f"({M.names[x]},{D.names[y]})" for x, y in labels]
    down = []
    for x, y in labels:
        mask = 0
        for k, (u, v) in enumerate(labels):
            if M.leq(u, x) and D.leq(v, y):
                mask |= 1 << k
        down.append(mask)
    lat = FinLattice(names, down)
    neg = [pos[(M.neg[x], phi[M.neg[x]])] for x, _ in labels]
    try:
        L = make_ms(lat, neg)
    except MSAlgError as exc:
        raise TheoremViolation(f"constructed algebra is not an MS-algebra: {exc}") from exc
    tau1 = tuple(pos[(x, phi[x])] for x in range(M.n))
    tau2 = tuple(pos[(M.top, y)] for y in range(D.n))
    out = ConstructedAlgebra(L, tuple(labels), tau1, tau2, t)
    _check_construction(out)
    return out


def _check_construction(c):
    L, M, D = c.algebra, c.triple.M, c.triple.D
    s = substructures(L)
    if set(c.tau1) != s.closed or len(set(c.tau1)) != M.n:
        raise TheoremViolation("closed elements are not {(x, phi(x))}")
    if set(c.tau2) != s.dense or len(set(c.tau2)) != D.n:
        raise TheoremViolation("dense elements are not {(1, y)}")
    if s.smallest_dense != c.tau2[D.bottom]:
        raise TheoremViolation("smallest dense element is not (1, 0)")
    if not is_principal_ms(L).ok:
        raise TheoremViolation("constructed algebra is not principal")
    t1, t2 = c.tau1, c.tau2
    for x in range(M.n):
        if t1[M.neg[x]] != L.neg[t1[x]]:
            raise TheoremViolation("tau1 does not commute with negation")
        for y in range(M.n):
            if t1[M.meet[x][y]] != L.meet[t1[x]][t1[y]] or t1[M.join[x][y]] != L.join[t1[x]][t1[y]]:
                raise TheoremViolation("tau1 is not a lattice homomorphism")
    for x in range(D.n):
        for y in range(D.n):
            if t2[D.meet[x][y]] != L.meet[t2[x]][t2[y]] or t2[D.join[x][y]] != L.join[t2[x]][t2[y]]:
                raise TheoremViolation("tau2 is not a lattice homomorphism")


@dataclass(frozen=True)
class MSPair:
    theta1: Congruence  # on the closed elements
    theta2: Congruence  # on the dense filter


class PrincipalParts:
    """The closed subalgebra, dense filter and smallest dense element of a principal L."""

    def __init__(self, L):
        check = is_principal_ms(L)
        if not check.ok:
            w = L.names[check.witness] if check.witness is not None else None
            raise NotPrincipal(f"not a principal MS-algebra: {check.condition}", witness=w)
        s = substructures(L)
        self.L = L
        self.d = check.d
        self.closed = tuple(sorted(s.closed))
        self.dense = tuple(sorted(s.dense))
        self.cpos = {e: k for k, e in enumerate(self.closed)}
        self.dpos = {e: k for k, e in enumerate(self.dense)}
        self.Lcc = L.induced(self.closed)
        self.DL = L.lattice.induced(self.dense)


def principal_parts(L):
    parts = getattr(L, "_parts", None)
    if parts is None:
        parts = PrincipalParts(L)
        L._parts = parts
    return parts


def cp_witness(parts, theta1, theta2):
    """First ``(a, b)`` in theta1 (as L indices) breaking the pair condition, or ``None``."""
    j, d = parts.L.join, parts.d
    closed, dpos = parts.closed, parts.dpos
    for a, b in theta1.pairs():
        x, y = closed[a], closed[b]
        if not theta2.related(dpos[j[x][d]], dpos[j[y][d]]):
            return (x, y)
    return None


def pair_to_congruence(L, p, parts=None):
    """``{(x, y) : (x°, y°) in theta1 and (x v d, y v d) in theta2}``."""
    parts = parts or principal_parts(L)
    if cp_witness(parts, p.theta1, p.theta2) is not None:
        raise InputError("pair violates the congruence-pair condition")
    neg, j, d = L.neg, L.join, parts.d
    l1, l2 = p.theta1.labels, p.theta2.labels
    cpos, dpos = parts.cpos, parts.dpos
    theta = Congruence([(l1[cpos[neg[x]]], l2[dpos[j[x][d]]]) for x in range(L.n)])
    if not is_congruence(L, theta):
        raise TheoremViolation("pair rule did not produce a congruence")
    if restrict(theta, L, parts.closed) != p.theta1:
        raise TheoremViolation("restriction to closed elements differs from theta1")
    if restrict(theta, L.lattice, parts.dense) != p.theta2:
        raise TheoremViolation("restriction to dense filter differs from theta2")
    return theta


def congruence_to_pair(L, theta, parts=None):
    parts = parts or principal_parts(L)
    if not is_congruence(L, theta):
        raise InputError("not a congruence of L")
    p = MSPair(restrict(theta, L, parts.closed), restrict(theta, L.lattice, parts.dense))
    if cp_witness(parts, p.theta1, p.theta2) is not None:
        raise TheoremViolation("restrictions of a congruence violate the pair condition")
    return p


class PairLattice:
    """A(L) with its bijection to Con(L); the bijection is verified on construction."""

    def __init__(self, L):
        parts = principal_parts(L)
        self.parts = parts
        self.con_closed = all_congruences(parts.Lcc)
        self.con_dense = all_congruences(parts.DL)
        self.con = all_congruences(L)
        self.pairs = tuple(
            MSPair(t1, t2)
            for t1 in self.con_closed
            for t2 in self.con_dense
            if cp_witness(parts, t1, t2) is None
        )
        self._index = {p: i for i, p in enumerate(self.pairs)}
        to_con = []
        for p in self.pairs:
            theta = pair_to_congruence(L, p, parts)
            if theta not in self.con:
                raise TheoremViolation("pair maps outside the enumerated Con(L)")
            to_con.append(self.con.index(theta))
        from_con = []
        for theta in self.con:
            p = congruence_to_pair(L, theta, parts)
            if p not in self._index:
                raise TheoremViolation("restriction pair missing from A(L)")
            from_con.append(self._index[p])
        self.to_con = tuple(to_con)
        self.from_con = tuple(from_con)
        if len(self.pairs) != len(self.con) or any(
            self.from_con[c] != i for i, c in enumerate(self.to_con)
        ):
            raise TheoremViolation("A(L) -> Con(L) is not a bijection")

    @property
    def L(self):
        return self.parts.L

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, p):
        return p in self._index

    def index(self, p):
        return self._index[p]

    def leq(self, i, j):
        a, b = self.pairs[i], self.pairs[j]
        return a.theta1 <= b.theta1 and a.theta2 <= b.theta2

    def sublattice_witness(self):
        """First ``(i, j, op)`` whose componentwise meet or join leaves A(L), or ``None``."""
        for i, a in enumerate(self.pairs):
            for j, b in enumerate(self.pairs):
                m = MSPair(con_meet(a.theta1, b.theta1), con_meet(a.theta2, b.theta2))
                if m not in self._index:
                    return (i, j, "meet")
                jn = MSPair(con_join(a.theta1, b.theta1), con_join(a.theta2, b.theta2))
                if jn not in self._index:
                    return (i, j, "join")
        return None

    def is_order_isomorphism(self):
        """Does ``theta -> pair`` preserve and reflect the order both ways?"""
        con = self.con
        for a in range(len(con)):
            for b in range(len(con)):
                if con.leq[a][b] != self.leq(self.from_con[a], self.from_con[b]):
                    return False
        return True


def pairs_of(L):
    return PairLattice(L)


@dataclass(frozen=True)
class BeazerCheck:
    ok: bool
    cp1: bool
    cp2: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def beazer_pair_check(L, theta1, theta2, over="vee"):
    """Beazer's two pair conditions on a K2-algebra.

    ``theta1`` lives on the closed elements; ``theta2`` on ``L∨ = {x v x°}``
    (``over="vee"``) or on the dense filter (``over="dense"``).  Witnesses are
    reported in L indices.
    """
    if not variety_of(L).k2:
        raise NotK2("Beazer pairs are defined for K2-algebras only")
    s = substructures(L)
    closed = sorted(s.closed)
    if over == "vee":
        carrier = sorted(s.vee)
    elif over == "dense":
        carrier = sorted(s.dense)
    else:
        raise ValueError(f"unknown carrier {over!r}")
    cpos = {e: k for k, e in enumerate(closed)}
    fpos = {e: k for k, e in enumerate(carrier)}
    if theta1.n != len(closed) or theta2.n != len(carrier):
        raise InputError("congruence sizes do not match the closed elements and the filter")
    neg, j = L.neg, L.join
    cp1_wit = None
    for c, d in theta2.pairs():
        x, y = carrier[c], carrier[d]
        if not theta1.related(cpos[neg[x]], cpos[neg[y]]):
            cp1_wit = ("CP1", x, y)
            break
    cp2_wit = None
    for a, b in theta1.pairs():
        x, y = closed[a], closed[b]
        for c in carrier:
            if not theta2.related(fpos[j[x][c]], fpos[j[y][c]]):
                cp2_wit = ("CP2", x, y, c)
                break
        if cp2_wit:
            break
    return BeazerCheck(
        cp1_wit is None and cp2_wit is None, cp1_wit is None, cp2_wit is None, cp1_wit or cp2_wit
    )


@dataclass(frozen=True)
class KleeneReport:
    construction: ConstructedAlgebra
    vee_matches: bool
    wedge_matches: bool
    is_k2: bool
    # S-triples only; None otherwise
    is_stone: Optional[bool] = None
    vee_is_dense: Optional[bool] = None
    wedge_is_zero: Optional[bool] = None

    @property
    def ok(self):
        extra = (self.is_stone, self.vee_is_dense, self.wedge_is_zero)
        return self.vee_matches and self.wedge_matches and self.is_k2 and all(
            v is not False for v in extra
        )


def kleene_parts_check(t):
    """Compare ``L∨``, ``L∧`` of the built algebra with their first-coordinate descriptions."""
    if not t.k2_triple:
        raise NotK2Triple("triple is not a principal K2-triple")
    c = construct(t)
    L, K = c.algebra, t.M
    s = substructures(L)
    k_vee = {K.join[x][K.neg[x]] for x in range(K.n)}
    k_wedge = {K.meet[x][K.neg[x]] for x in range(K.n)}
    vee = frozenset(i for i, (x, _) in enumerate(c.labels) if x in k_vee)
    wedge = frozenset(i for i, (x, _) in enumerate(c.labels) if x in k_wedge)
    flags = variety_of(L)
    extra = {}
    if t.s_triple:
        extra = dict(
            is_stone=flags.stone,
            vee_is_dense=s.vee == s.dense,
            wedge_is_zero=s.wedge == frozenset({L.bottom}),
        )
    return KleeneReport(c, s.vee == vee, s.wedge == wedge, flags.k2, **extra)

