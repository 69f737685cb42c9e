# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled connectivity kernel.

Mirrors ``colornet._pykernel`` exactly; see that module for the contract.
"""

from libc.stdlib cimport free, malloc


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef Py_ssize_t _first_cut(int n, const int[::1] us, const int[::1] vs,
                           const int[::1] cs, const unsigned long long[::1] masks,
                           int a, int b, int* parent) noexcept nogil:
    cdef Py_ssize_t k, e
    cdef Py_ssize_t nedges = us.shape[0]
    cdef unsigned long long mask
    cdef int i, ru, rv, comps
    for k in range(masks.shape[0]):
        mask = masks[k]
        for i in range(n):
            parent[i] = i
        comps = n
        for e in range(nedges):
            if (mask >> cs[e]) & 1ULL:
                continue
            ru = _find(parent, us[e])
            rv = _find(parent, vs[e])
            if ru != rv:
                parent[ru] = rv
                comps -= 1
                if comps == 1:
                    break
        if a < 0:
            if comps > 1:
                return k
        elif _find(parent, a) != _find(parent, b):
            return k
    return -1


def first_cut(int n, us, vs, cs, masks, int a=-1, int b=-1):
    """Index of the first mask whose removal disconnects the scope, or -1."""
    cdef const int[::1] us_v = us
    cdef const int[::1] vs_v = vs
    cdef const int[::1] cs_v = cs
    cdef const unsigned long long[::1] masks_v = masks
    cdef Py_ssize_t result
    cdef int* parent = <int*> malloc(max(n, 1) * sizeof(int))
    if parent == NULL:
        raise MemoryError()
    try:
        with nogil:
            result = _first_cut(n, us_v, vs_v, cs_v, masks_v, a, b, parent)
    finally:
        free(parent)
    return result
