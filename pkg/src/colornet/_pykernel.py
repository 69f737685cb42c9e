"""Pure-Python connectivity kernel.

``first_cut`` is the inner loop of every exact query in the package: for each
color mask in order, delete the edges whose color bit is set and test whether
the scope (whole graph when ``a < 0``, else the pair ``a``/``b``) is still
connected.  It returns the index of the first mask that disconnects the
scope, or ``-1``.
"""

from __future__ import annotations

from typing import Sequence


def first_cut(
    n: int,
    us: Sequence[int],
    vs: Sequence[int],
    cs: Sequence[int],
    masks: Sequence[int],
    a: int = -1,
    b: int = -1,
) -> int:
    edges = list(zip(us, vs, cs))
    for k, mask in enumerate(masks):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for u, v, c in edges:
            if (mask >> c) & 1:
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
                if comps == 1:
                    break
        if a < 0:
            if comps > 1:
                return k
        elif find(a) != find(b):
            return k
    return -1
