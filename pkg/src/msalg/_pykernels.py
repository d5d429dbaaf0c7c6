"""Pure-Python congruence kernels.

Operation tables arrive flattened: ``meet[x * n + y]``, ``join[x * n + y]`` and
``unary[u * n + x]`` for ``u < nun``.  Partitions are label lists where each
element maps to the least index of its block.
"""


def closure(n, meet, join, unary, nun, labels, seeds):
    """Least congruence containing the partition ``labels`` and the ``seeds`` pairs.

    ``labels`` must already be a congruence; ``seeds`` is a flat sequence
    ``a0, b0, a1, b1, ...``.
    """
    parent = list(labels)

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    stack = list(seeds)
    while stack:
        b = stack.pop()
        a = stack.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if ra < rb:
            parent[rb] = ra
        else:
            parent[ra] = rb
        an, bn = a * n, b * n
        for c in range(n):
            x, y = meet[an + c], meet[bn + c]
            if x != y:
                stack.append(x)
                stack.append(y)
            x, y = join[an + c], join[bn + c]
            if x != y:
                stack.append(x)
                stack.append(y)
        for u in range(nun):
            x, y = unary[u * n + a], unary[u * n + b]
            if x != y:
                stack.append(x)
                stack.append(y)
    return [find(x) for x in range(n)]


def compatible_partitions(n, meet, join, unary, nun):
    """Every partition of ``range(n)`` compatible with all operations.

    Enumerates restricted growth strings; meets are checked as soon as their
    arguments are placed, everything else at the leaves.  Indices must be a
    linear extension of the lattice order so that ``meet[x][c] <= x``.
    """
    out = []
    if n == 0:
        return out
    lab = [0] * n
    first = []

    def ok_meets(i):
        l = lab[i]
        if l == i:
            return True
        inn, ln = i * n, l * n
        for c in range(n):
            if lab[meet[inn + c]] != lab[meet[ln + c]]:
                return False
        return True

    def ok_leaf():
        for x in range(n):
            l = lab[x]
            if l == x:
                continue
            xn, ln = x * n, l * n
            for c in range(n):
                if lab[join[xn + c]] != lab[join[ln + c]]:
                    return False
            for u in range(nun):
                if lab[unary[u * n + x]] != lab[unary[u * n + l]]:
                    return False
        return True

    def rec(i):
        if i == n:
            if ok_leaf():
                out.append(list(lab))
            return
        for leader in first:
            lab[i] = leader
            if ok_meets(i):
                rec(i + 1)
        lab[i] = i
        first.append(i)
        rec(i + 1)
        first.pop()

    lab[0] = 0
    first.append(0)
    rec(1)
    return out
