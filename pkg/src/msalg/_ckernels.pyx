# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; same signatures and results."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int x) noexcept nogil:
    cdef int root = x
    cdef int nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def closure(int n, const int[:] meet, const int[:] join, const int[:] unary, int nun,
            labels, seeds):
    cdef Py_ssize_t nseeds = len(seeds)
    cdef Py_ssize_t cap = nseeds + <Py_ssize_t>n * (2 * n + nun) * 2 + 2
    cdef int* parent = <int*> malloc(n * sizeof(int))
    cdef int* stack = <int*> malloc(cap * sizeof(int))
    cdef Py_ssize_t top = 0
    cdef int a, b, ra, rb, c, u, x, y, an, bn, i
    if parent == NULL or stack == NULL:
        free(parent)
        free(stack)
        raise MemoryError()
    try:
        for i in range(n):
            parent[i] = labels[i]
        for i in range(nseeds):
            stack[i] = seeds[i]
        top = nseeds
        with nogil:
            while top > 0:
                b = stack[top - 1]
                a = stack[top - 2]
                top -= 2
                ra = _find(parent, a)
                rb = _find(parent, b)
                if ra == rb:
                    continue
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
                an = a * n
                bn = b * n
                for c in range(n):
                    x = meet[an + c]
                    y = meet[bn + c]
                    if x != y:
                        stack[top] = x
                        stack[top + 1] = y
                        top += 2
                    x = join[an + c]
                    y = join[bn + c]
                    if x != y:
                        stack[top] = x
                        stack[top + 1] = y
                        top += 2
                for u in range(nun):
                    x = unary[u * n + a]
                    y = unary[u * n + b]
                    if x != y:
                        stack[top] = x
                        stack[top + 1] = y
                        top += 2
        return [_find(parent, i) for i in range(n)]
    finally:
        free(parent)
        free(stack)


cdef bint _ok_meets(int i, int n, int* lab, const int[:] meet) noexcept nogil:
    cdef int l = lab[i]
    cdef int c
    if l == i:
        return True
    for c in range(n):
        if lab[meet[i * n + c]] != lab[meet[l * n + c]]:
            return False
    return True


cdef bint _ok_leaf(int n, int* lab, const int[:] join, const int[:] unary, int nun) noexcept nogil:
    cdef int x, l, c, u
    for x in range(n):
        l = lab[x]
        if l == x:
            continue
        for c in range(n):
            if lab[join[x * n + c]] != lab[join[l * n + c]]:
                return False
        for u in range(nun):
            if lab[unary[u * n + x]] != lab[unary[u * n + l]]:
                return False
    return True


def compatible_partitions(int n, const int[:] meet, const int[:] join, const int[:] unary,
                          int nun):
    out = []
    if n == 0:
        return out
    cdef int* lab = <int*> malloc(n * sizeof(int))
    cdef int* first = <int*> malloc(n * sizeof(int))
    # choice[i] indexes into first[0..nfirst]; == nfirst means "open a new block"
    cdef int* choice = <int*> malloc(n * sizeof(int))
    cdef int* nf_at = <int*> malloc((n + 1) * sizeof(int))
    cdef int i, nfirst, k
    if lab == NULL or first == NULL or choice == NULL or nf_at == NULL:
        free(lab); free(first); free(choice); free(nf_at)
        raise MemoryError()
    try:
        lab[0] = 0
        first[0] = 0
        nfirst = 1
        i = 1
        nf_at[1] = 1
        if n == 1:
            out.append([0])
            return out
        choice[1] = -1
        while i >= 1:
            # advance choice at position i
            nfirst = nf_at[i]
            choice[i] += 1
            k = choice[i]
            if k > nfirst:
                i -= 1
                continue
            if k < nfirst:
                lab[i] = first[k]
                if not _ok_meets(i, n, lab, meet):
                    continue
                nf_at[i + 1] = nfirst
            else:
                lab[i] = i
                first[nfirst] = i
                nf_at[i + 1] = nfirst + 1
            if i == n - 1:
                if _ok_leaf(n, lab, join, unary, nun):
                    out.append([lab[k] for k in range(n)])
                continue
            i += 1
            choice[i] = -1
        return out
    finally:
        free(lab); free(first); free(choice); free(nf_at)
