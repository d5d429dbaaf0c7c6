"""Perfect extensions, the congruence extension property, and representability of pair sets."""

from dataclasses import dataclass, field
from typing import Optional

from .congruence import (
    Congruence,
    all_congruences,
    con_join,
    generated_by_image,
    identity,
    principal_congruence,
    restrict,
)
from .errors import InputError, NotASubalgebra, TheoremViolation
from .ms import substructures
from .triple import MSPair, construct, pairs_of, principal_parts, validate_triple

__all__ = [
    "ExtensionReport",
    "DecompositionReport",
    "StoneReport",
    "PairSublattice",
    "RepresentabilityReport",
    "subalgebra_generated",
    "extensions_of",
    "is_perfect_extension",
    "check_perfect_decomposition",
    "check_stone_corollaries",
    "enumerate_homs01",
    "is_representable",
    "pull_back_pairs",
    "check_representability_conditions",
]


def subalgebra_generated(A, seed):
    """Least subset containing ``seed``, 0 and 1 closed under the operations of ``A``."""
    s = set(seed) | {A.bottom, A.top}
    todo = list(s)
    while todo:
        x = todo.pop()
        new = [A.meet[x][y] for y in s] + [A.join[x][y] for y in s]
        new += [op[x] for op in A.unary_ops]
        for z in new:
            if z not in s:
                s.add(z)
                todo.append(z)
    return frozenset(s)


def extensions_of(theta, A, subset, con=None):
    """Every congruence of ``A`` whose restriction to ``subset`` is ``theta``."""
    elems = sorted(set(subset))
    if not A.is_closed(elems):
        raise NotASubalgebra(f"{[A.names[i] for i in elems]} is not closed under the operations")
    con = con if con is not None else all_congruences(A)
    return [t for t in con if restrict(t, A, elems) == theta]


@dataclass(frozen=True)
class ExtensionReport:
    sub: tuple
    # (congruence of the subalgebra, number of extensions, the extensions)
    per_congruence: tuple
    cep: bool
    perfect: bool

    def failures(self):
        return [(t, k, ext) for t, k, ext in self.per_congruence if k != 1]


def is_perfect_extension(A, subset, con=None):
    elems = tuple(sorted(set(subset)))
    if not A.is_closed(elems):
        raise NotASubalgebra(f"{[A.names[i] for i in elems]} is not closed under the operations")
    con = con if con is not None else all_congruences(A)
    con_sub = all_congruences(A.induced(elems))
    fibres = {t: [] for t in con_sub}
    for t in con:
        r = restrict(t, A, elems)
        if r not in fibres:
            raise TheoremViolation("restriction of a congruence is not a congruence of the subalgebra")
        fibres[r].append(t)
    per = tuple((t, len(fibres[t]), tuple(fibres[t])) for t in con_sub)
    return ExtensionReport(
        elems,
        per,
        cep=all(k >= 1 for _, k, _ in per),
        perfect=all(k == 1 for _, k, _ in per),
    )


@dataclass(frozen=True)
class DecompositionReport:
    whole: ExtensionReport  # L over L'
    dense: ExtensionReport  # D(L) over D(L') as lattices
    closed: ExtensionReport  # L°° over L'°° as de Morgan algebras

    @property
    def parts_perfect(self):
        return self.dense.perfect and self.closed.perfect

    @property
    def agrees(self):
        return self.whole.perfect == self.parts_perfect


def check_perfect_decomposition(L, subset):
    """Compare "L perfect over L'" with "D(L) over D(L') and L°° over L'°° both perfect"."""
    parts = principal_parts(L)
    elems = sorted(set(subset))
    sub = L.induced(elems)
    sub_parts = principal_parts(sub)
    dense = [parts.dpos[elems[k]] for k in sub_parts.dense]
    closed = [parts.cpos[elems[k]] for k in sub_parts.closed]
    return DecompositionReport(
        whole=is_perfect_extension(L, elems),
        dense=is_perfect_extension(parts.DL, dense),
        closed=is_perfect_extension(parts.Lcc, closed),
    )


@dataclass(frozen=True)
class StoneReport:
    stone_part: frozenset
    whole: ExtensionReport  # L over L_S
    closed: ExtensionReport  # L°° over B(L)
    con_size: int
    stone_con_size: int
    # restriction map Con(L) -> Con(L_S) when it is a lattice isomorphism
    con_iso: Optional[tuple]
    stone_pairs_match: bool

    @property
    def perfect(self):
        return self.whole.perfect

    @property
    def equivalence_holds(self):
        return self.whole.perfect == self.closed.perfect

    @property
    def ok(self):
        iso_ok = (not self.perfect) or (self.con_iso is not None and self.con_size == self.stone_con_size)
        return self.equivalence_holds and iso_ok and self.stone_pairs_match


def check_stone_corollaries(L):
    parts = principal_parts(L)
    s = substructures(L)
    stone = sorted(s.stone_part)
    con = all_congruences(L)
    whole = is_perfect_extension(L, stone, con)
    closed = is_perfect_extension(parts.Lcc, [parts.cpos[b] for b in s.boolean_center])
    LS = L.induced(stone)
    con_s = all_congruences(LS)
    iso = None
    if whole.perfect:
        iso = tuple(con_s.index(restrict(t, L, stone)) for t in con)
        bijective = sorted(iso) == list(range(len(con_s)))
        monotone = all(
            con.leq[a][b] == con_s.leq[iso[a]][iso[b]] for a in range(len(con)) for b in range(len(con))
        )
        if not (bijective and monotone):
            iso = None
    # A(L_S) should be {(phi restricted to B(L), psi) : (phi, psi) in A(L)}
    center = sorted(s.boolean_center)
    image = {
        (Congruence([p.theta1.labels[parts.cpos[b]] for b in center]), p.theta2)
        for p in pairs_of(L)
    }
    stone_pairs = {(p.theta1, p.theta2) for p in pairs_of(LS)}
    return StoneReport(
        stone_part=frozenset(stone),
        whole=whole,
        closed=closed,
        con_size=len(con),
        stone_con_size=len(con_s),
        con_iso=iso,
        stone_pairs_match=image == stone_pairs,
    )


def enumerate_homs01(M, D):
    """All (0,1)-lattice homomorphisms ``M -> D`` in lexicographic order of value tuples."""
    n = M.n
    checks = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for table, dtable in ((M.meet, D.meet), (M.join, D.join)):
                r = table[i][j]
                checks[max(i, j, r)].append((i, j, r, dtable))
    f = [-1] * n

    def values(k):
        if k == M.bottom and k == M.top:
            return [D.bottom] if D.bottom == D.top else []
        if k == M.bottom:
            return [D.bottom]
        if k == M.top:
            return [D.top]
        return range(D.n)

    def rec(k):
        if k == n:
            yield tuple(f)
            return
        for v in values(k):
            f[k] = v
            if all(f[r] == dt[f[i]][f[j]] for i, j, r, dt in checks[k]):
                yield from rec(k + 1)
        f[k] = -1

    yield from rec(0)


class PairSublattice:
    """A set of congruence pairs over a de Morgan algebra ``M`` and a lattice ``D``."""

    def __init__(self, M, D, pairs):
        self.M = M
        self.D = D
        self.con_M = all_congruences(M)
        self.con_D = all_congruences(D)
        pairs = frozenset((t1, t2) for t1, t2 in pairs)
        for t1, t2 in pairs:
            if t1 not in self.con_M or t2 not in self.con_D:
                raise InputError("every pair must consist of congruences of M and D")
        self.pairs = pairs

    def key(self, pair):
        return (self.con_M.index(pair[0]), self.con_D.index(pair[1]))

    def sorted_pairs(self):
        return sorted(self.pairs, key=self.key)

    def __contains__(self, pair):
        return pair in self.pairs

    def __len__(self):
        return len(self.pairs)


def _biconditional(P, phi, firsts):
    for t1 in firsts:
        image = generated_by_image(phi, t1, P.M.lattice, P.D, check=False)
        for t2 in P.con_D:
            if ((t1, t2) in P.pairs) != (image <= t2):
                return False
    return True


def _first_hom(P, firsts):
    for phi in enumerate_homs01(P.M.lattice, P.D):
        if _biconditional(P, phi, firsts):
            return phi
    return None


def is_representable(P):
    """First hom ``phi`` with ``(t1, t2) in A  <=>  Con(phi)(t1) <= t2`` for all pairs, or ``None``."""
    return _first_hom(P, list(P.con_M))


def pull_back_pairs(M, D, phi):
    """Pairs of Con(M) x Con(D) whose images under the canonical embeddings lie in A(L)."""
    c = construct(validate_triple(M, D, phi))
    L = c.algebra
    A = pairs_of(L)
    parts = A.parts
    tau1 = [parts.cpos[i] for i in c.tau1]
    tau2 = [parts.dpos[i] for i in c.tau2]
    con_M, con_D = all_congruences(M), all_congruences(D)
    img2 = {t2: generated_by_image(tau2, t2, D, parts.DL) for t2 in con_D}
    out = set()
    for t1 in con_M:
        i1 = generated_by_image(tau1, t1, M, parts.Lcc)
        for t2 in con_D:
            if MSPair(i1, img2[t2]) in A:
                out.add((t1, t2))
    return frozenset(out)


@dataclass(frozen=True)
class RepresentabilityReport:
    join_closed: bool
    join_witness: Optional[tuple]
    down_closed: bool
    down_witness: Optional[tuple]
    principal_phi: Optional[tuple]  # hom satisfying the principal-congruence condition
    representable_phi: Optional[tuple]
    boolean_generated: bool = False  # M is a perfect extension of B(M)
    boolean_phi: Optional[tuple] = None
    notes: list = field(default_factory=list, compare=False)

    @property
    def conditions_hold(self):
        return self.join_closed and self.down_closed and self.principal_phi is not None

    @property
    def representable(self):
        return self.representable_phi is not None

    @property
    def agrees(self):
        ok = self.conditions_hold == self.representable
        if self.boolean_generated:
            ok = ok and (
                (self.join_closed and self.down_closed and self.boolean_phi is not None)
                == self.representable
            )
        return ok

    def first_failure(self):
        if not self.join_closed:
            return "condition(1)", self.join_witness
        if not self.down_closed:
            return "condition(2)", self.down_witness
        if self.principal_phi is None:
            return "condition(3)", None
        return None


def check_representability_conditions(P):
    """Join-closure, first-coordinate down-closure and the principal-congruence hom test.

    Δ counts as the principal congruence θ(a, a).  When ``M`` is a perfect
    extension of its Boolean centre the hom test is repeated over θ(0, a),
    ``a`` complemented, only.
    """
    ordered = P.sorted_pairs()
    join_wit = None
    for a in ordered:
        for b in ordered:
            if (con_join(a[0], b[0]), con_join(a[1], b[1])) not in P.pairs:
                join_wit = (a, b)
                break
        if join_wit:
            break
    down_wit = None
    for t1, t2 in ordered:
        for alpha in P.con_M:
            if alpha <= t1 and (alpha, t2) not in P.pairs:
                down_wit = ((t1, t2), alpha)
                break
        if down_wit:
            break
    M = P.M
    principal = {identity(M.n)}
    for a in range(M.n):
        for b in range(a + 1, M.n):
            principal.add(principal_congruence(M, a, b))
    principal = sorted(principal, key=P.con_M.index)
    report = dict(
        join_closed=join_wit is None,
        join_witness=join_wit,
        down_closed=down_wit is None,
        down_witness=down_wit,
        principal_phi=_first_hom(P, principal),
        representable_phi=is_representable(P),
    )
    center = sorted(substructures(M).boolean_center)
    if is_perfect_extension(M, center, P.con_M).perfect:
        gens = set()
        for a in center:
            t = principal_congruence(M, M.bottom, a)
            if t != principal_congruence(M, M.neg[a], M.top):
                raise TheoremViolation("θ(0, a) differs from θ(a°, 1) for a complemented a")
            gens.add(t)
        report["boolean_generated"] = True
        report["boolean_phi"] = _first_hom(P, sorted(gens, key=P.con_M.index))
    return RepresentabilityReport(**report)
