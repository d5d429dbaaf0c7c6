"""Slow, independent reference implementations used to cross-check the library.

Nothing here calls the closure kernels or the partition enumerator; the code
works straight from definitions.
"""

from itertools import combinations, product

from msalg.lattice import FinLattice, FinPoset, find_isomorphism


def set_partitions(items):
    """Every partition of ``items`` as a list of blocks (plain recursion)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def naive_congruences(A):
    """Label tuples of every partition compatible with all operations, by definition."""
    n = A.n
    out = set()
    for part in set_partitions(range(n)):
        lab = [0] * n
        for block in part:
            lead = min(block)
            for x in block:
                lab[x] = lead
        ok = True
        for x in range(n):
            for y in range(n):
                if lab[x] != lab[y]:
                    continue
                for z in range(n):
                    if lab[A.meet[x][z]] != lab[A.meet[y][z]] or lab[A.join[x][z]] != lab[A.join[y][z]]:
                        ok = False
                        break
                if not ok:
                    break
                if any(lab[op[x]] != lab[op[y]] for op in A.unary_ops):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(tuple(lab))
    return out


def _lattice_from_strict_below(below):
    """Add a bottom and a top to a poset; ``None`` if the result is not a lattice."""
    k = len(below)
    n = k + 2
    down = [1]  # bottom
    for i in range(k):
        mask = 1 | (1 << (i + 1))
        for j in range(k):
            if below[i] >> j & 1:
                mask |= 1 << (j + 1)
        down.append(mask)
    down.append((1 << n) - 1)
    # every pair needs a least upper bound
    up = [sum(1 << j for j in range(n) if down[j] >> i & 1) for i in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            common = up[a] & up[b]
            if not any(up[c] & common == common for c in range(n) if common >> c & 1):
                return None
    names = ["0"] + [f"x{i}" for i in range(k)] + ["1"]
    return FinLattice(names, down)


def _poset_reps(k):
    """Posets on ``k`` points up to isomorphism, each as strict down-set masks."""
    reps = [()]
    for size in range(1, k + 1):
        buckets = {}
        for below in reps:
            m = len(below)
            for mask in range(1 << m):
                if any(below[i] & ~mask for i in range(m) if mask >> i & 1):
                    continue
                # the new point sits above mask; close transitively
                full = mask
                for i in range(m):
                    if mask >> i & 1:
                        full |= below[i]
                cand = below + (full,)
                P = _as_poset(cand)
                key = _poset_key(cand)
                bucket = buckets.setdefault(key, [])
                if not any(find_isomorphism(P, Q) is not None for _, Q in bucket):
                    bucket.append((cand, P))
        reps = [c for b in buckets.values() for c, _ in b]
        if size == k:
            return reps
    return reps


def _as_poset(below):
    k = len(below)
    down = [below[i] | (1 << i) for i in range(k)]
    # FinPoset wants a topological index order; natural labels already are one
    return FinPoset([f"p{i}" for i in range(k)], down)


def _poset_key(below):
    k = len(below)
    ups = [sum(1 for j in range(k) if below[j] >> i & 1) for i in range(k)]
    downs = [bin(b).count("1") for b in below]
    return tuple(sorted(zip(downs, ups)))


def all_small_lattices(max_size):
    """Every lattice with at most ``max_size`` elements, up to isomorphism."""
    out = [FinLattice(["0"], [1])]
    for k in range(0, max_size - 1):
        for below in _poset_reps(k):
            L = _lattice_from_strict_below(below)
            if L is not None:
                out.append(L)
    return out


def forbidden_sublattice(L):
    """A 5-element sublattice shaped like M3 or N5, or ``None``."""
    for sub in combinations(range(L.n), 5):
        s = set(sub)
        if not all(L.meet[a][b] in s and L.join[a][b] in s for a in s for b in s):
            continue
        bot = L.meet_all(sub)
        top = L.join_all(sub)
        mid = [x for x in sub if x not in (bot, top)]
        if len(mid) != 3:
            continue
        comparable = sum(1 for a, b in combinations(mid, 2) if L.leq(a, b) or L.leq(b, a))
        if comparable == 0:
            return "M3", sub
        if comparable == 1:
            return "N5", sub
    return None


def ms_chain_tables(n):
    """Every unary table on the ``n``-chain satisfying x <= x°°, (x^y)° = x° v y°, 1° = 0."""
    for neg in product(range(n), repeat=n):
        if neg[n - 1] != 0:
            continue
        if not all(x <= neg[neg[x]] for x in range(n)):
            continue
        if all(neg[min(x, y)] == max(neg[x], neg[y]) for x in range(n) for y in range(n)):
            yield neg


def chain_is_principal(neg):
    """The principal condition on a chain, where meet is min and join is max."""
    n = len(neg)
    dense = [x for x in range(n) if neg[x] == 0]
    d = min(dense)
    return all(min(neg[neg[x]], max(x, d)) == x for x in range(n))
