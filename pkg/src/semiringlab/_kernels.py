"""Compiled search kernels for congruence generation over operation tables.

The closure worklist uses the three elementary translations x -> x+c,
x -> cx, x -> xc. Iterating them to a union-find fixpoint from a seeded pair
yields the least congruence containing that pair; transitive effects are
absorbed by the union-find. Unions always hang the larger root under the
smaller, so the final representative of each block is its least element,
which keeps every derived labeling canonical.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def closure_labels(add, mul, a0, b0):
    """Least congruence containing (a0, b0), as min-element block labels."""
    k = add.shape[0]
    parent = np.arange(k)
    qa = np.empty(k, np.int64)
    qb = np.empty(k, np.int64)
    head = 0
    tail = 0
    ra = _find(parent, a0)
    rb = _find(parent, b0)
    if ra != rb:
        if ra < rb:
            parent[rb] = ra
        else:
            parent[ra] = rb
        qa[tail] = a0
        qb[tail] = b0
        tail += 1
    while head < tail:
        x = qa[head]
        y = qb[head]
        head += 1
        for c in range(k):
            p = add[x, c]
            q = add[y, c]
            if p != q:
                rp = _find(parent, p)
                rq = _find(parent, q)
                if rp != rq:
                    if rp < rq:
                        parent[rq] = rp
                    else:
                        parent[rp] = rq
                    qa[tail] = p
                    qb[tail] = q
                    tail += 1
            p = mul[c, x]
            q = mul[c, y]
            if p != q:
                rp = _find(parent, p)
                rq = _find(parent, q)
                if rp != rq:
                    if rp < rq:
                        parent[rq] = rp
                    else:
                        parent[rp] = rq
                    qa[tail] = p
                    qb[tail] = q
                    tail += 1
            p = mul[x, c]
            q = mul[y, c]
            if p != q:
                rp = _find(parent, p)
                rq = _find(parent, q)
                if rp != rq:
                    if rp < rq:
                        parent[rq] = rp
                    else:
                        parent[rp] = rq
                    qa[tail] = p
                    qb[tail] = q
                    tail += 1
    for i in range(k):
        parent[i] = _find(parent, i)
    return parent


@njit(cache=True)
def _membership(add, mul, parent, qa, qb, a0, b0, x0, y0):
    """Does the least congruence containing (a0,b0) relate (x0,y0)? Early exit."""
    k = add.shape[0]
    for i in range(k):
        parent[i] = i
    head = 0
    tail = 0
    ra = _find(parent, a0)
    rb = _find(parent, b0)
    if ra != rb:
        if ra < rb:
            parent[rb] = ra
        else:
            parent[ra] = rb
        qa[tail] = a0
        qb[tail] = b0
        tail += 1
        if _find(parent, x0) == _find(parent, y0):
            return True
    while head < tail:
        x = qa[head]
        y = qb[head]
        head += 1
        for c in range(k):
            p = add[x, c]
            q = add[y, c]
            if p != q:
                rp = _find(parent, p)
                rq = _find(parent, q)
                if rp != rq:
                    if rp < rq:
                        parent[rq] = rp
                    else:
                        parent[rp] = rq
                    qa[tail] = p
                    qb[tail] = q
                    tail += 1
                    if _find(parent, x0) == _find(parent, y0):
                        return True
            p = mul[c, x]
            q = mul[c, y]
            if p != q:
                rp = _find(parent, p)
                rq = _find(parent, q)
                if rp != rq:
                    if rp < rq:
                        parent[rq] = rp
                    else:
                        parent[rp] = rq
                    qa[tail] = p
                    qb[tail] = q
                    tail += 1
                    if _find(parent, x0) == _find(parent, y0):
                        return True
            p = mul[x, c]
            q = mul[y, c]
            if p != q:
                rp = _find(parent, p)
                rq = _find(parent, q)
                if rp != rq:
                    if rp < rq:
                        parent[rq] = rp
                    else:
                        parent[rp] = rq
                    qa[tail] = p
                    qb[tail] = q
                    tail += 1
                    if _find(parent, x0) == _find(parent, y0):
                        return True
    return _find(parent, x0) == _find(parent, y0)


@njit(cache=True)
def all_pairs_full(add, mul):
    """First pair (encoded u*k+v) whose principal congruence is not full, or -1.

    Each closure exits as soon as the block count hits one.
    """
    k = add.shape[0]
    parent = np.empty(k, np.int64)
    qa = np.empty(k, np.int64)
    qb = np.empty(k, np.int64)
    for u in range(k):
        for v in range(u + 1, k):
            for i in range(k):
                parent[i] = i
            nclasses = k
            head = 0
            tail = 0
            parent[v] = u
            nclasses -= 1
            qa[0] = u
            qb[0] = v
            tail = 1
            while head < tail and nclasses > 1:
                x = qa[head]
                y = qb[head]
                head += 1
                for c in range(k):
                    p = add[x, c]
                    q = add[y, c]
                    if p != q:
                        rp = _find(parent, p)
                        rq = _find(parent, q)
                        if rp != rq:
                            if rp < rq:
                                parent[rq] = rp
                            else:
                                parent[rp] = rq
                            nclasses -= 1
                            qa[tail] = p
                            qb[tail] = q
                            tail += 1
                    p = mul[c, x]
                    q = mul[c, y]
                    if p != q:
                        rp = _find(parent, p)
                        rq = _find(parent, q)
                        if rp != rq:
                            if rp < rq:
                                parent[rq] = rp
                            else:
                                parent[rp] = rq
                            nclasses -= 1
                            qa[tail] = p
                            qb[tail] = q
                            tail += 1
                    p = mul[x, c]
                    q = mul[y, c]
                    if p != q:
                        rp = _find(parent, p)
                        rq = _find(parent, q)
                        if rp != rq:
                            if rp < rq:
                                parent[rq] = rp
                            else:
                                parent[rp] = rq
                            nclasses -= 1
                            qa[tail] = p
                            qb[tail] = q
                            tail += 1
                    if nclasses == 1:
                        break
            if nclasses > 1:
                return u * k + v
    return np.int64(-1)


@njit(cache=True)
def verify_target_all_pairs(add, mul, x0, y0):
    """Is (x0,y0) contained in the principal congruence of every pair?

    Returns -1 when yes, else the first failing pair encoded as u*k+v.

    Fast path: a pair (u,v) is marked as soon as one elementary translation t
    sends it onto an already-marked pair, since Cg(t(u),t(v)) is contained in
    Cg(u,v). When t fixes one side, the translate of the other side joins the
    fixed side's block by transitivity, which the extra probes exploit.
    Marking sweeps run to fixpoint over the shrinking list of unresolved
    pairs; whatever survives is settled by exact closure with early exit.
    """
    k = add.shape[0]
    ver = np.zeros((k, k), np.uint8)
    ver[x0, y0] = 1
    ver[y0, x0] = 1
    total = k * (k - 1) // 2
    ua = np.empty(total, np.int64)
    ub = np.empty(total, np.int64)
    m = 0
    for u in range(k):
        for v in range(u + 1, k):
            if ver[u, v] == 0:
                ua[m] = u
                ub[m] = v
                m += 1
    changed = True
    while changed and m > 0:
        changed = False
        w = 0
        for idx in range(m):
            u = ua[idx]
            v = ub[idx]
            hit = False
            for c in range(k):
                p = add[u, c]
                q = add[v, c]
                if ver[p, q] == 1 or (p == u and ver[v, q] == 1) or (q == v and ver[u, p] == 1):
                    hit = True
                    break
                p = mul[c, u]
                q = mul[c, v]
                if ver[p, q] == 1 or (p == u and ver[v, q] == 1) or (q == v and ver[u, p] == 1):
                    hit = True
                    break
                p = mul[u, c]
                q = mul[v, c]
                if ver[p, q] == 1 or (p == u and ver[v, q] == 1) or (q == v and ver[u, p] == 1):
                    hit = True
                    break
            if hit:
                ver[u, v] = 1
                ver[v, u] = 1
                changed = True
            else:
                ua[w] = u
                ub[w] = v
                w += 1
        m = w
    parent = np.empty(k, np.int64)
    qa = np.empty(k, np.int64)
    qb = np.empty(k, np.int64)
    for idx in range(m):
        u = ua[idx]
        v = ub[idx]
        if not _membership(add, mul, parent, qa, qb, u, v, x0, y0):
            return u * k + v
        ver[u, v] = 1
        ver[v, u] = 1
    return np.int64(-1)


def membership(add, mul, a0, b0, x0, y0):
    """Convenience wrapper allocating the workspace arrays."""
    k = add.shape[0]
    parent = np.empty(k, np.int64)
    qa = np.empty(k, np.int64)
    qb = np.empty(k, np.int64)
    return bool(_membership(add, mul, parent, qa, qb, a0, b0, x0, y0))
