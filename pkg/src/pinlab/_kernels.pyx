# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contract identical to ``pinlab._kernels_py``."""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"

cdef enum:
    MAXN = 8

ctypedef unsigned char u8


cdef inline int _le(const u8* rows, int a, int b) nogil:
    return (rows[a] >> b) & 1


cdef inline int _lt(const u8* rows, int a, int b) nogil:
    return ((rows[a] >> b) & 1) and not ((rows[b] >> a) & 1)


cdef u8* _composites(const u8* ups, int nu, const u8* the, int nt, int n) except NULL:
    # out[(s*nt + t)*n + x] = the[t][ups[s][x]]
    cdef size_t size = <size_t>nu * nt * n
    cdef u8* out = <u8*>malloc(size if size > 0 else 1)
    if out == NULL:
        raise MemoryError()
    cdef int s, t, x
    for s in range(nu):
        for t in range(nt):
            for x in range(n):
                out[(s * nt + t) * n + x] = the[t * n + ups[s * n + x]]
    return out


cdef int _is_transitive(const u8* rows, int n) nogil:
    cdef int p, q
    for p in range(n):
        for q in range(n):
            if (rows[p] >> q) & 1 and (rows[q] & ~rows[p]):
                return 0
    return 1


def closure(const u8[:] rows, int n):
    cdef u8 cur[MAXN]
    cdef u8 nxt[MAXN]
    cdef int p, q, changed = 1
    cdef u8 acc
    for p in range(n):
        cur[p] = rows[p]
    while changed:
        changed = 0
        for p in range(n):
            acc = cur[p]
            for q in range(n):
                if (cur[p] >> q) & 1:
                    acc |= cur[q]
            nxt[p] = acc
        for p in range(n):
            if nxt[p] != cur[p]:
                changed = 1
            cur[p] = nxt[p]
    return bytes([cur[p] for p in range(n)])


def is_transitive(const u8[:] rows, int n):
    cdef u8 cur[MAXN]
    cdef int p
    for p in range(n):
        cur[p] = rows[p]
    return bool(_is_transitive(cur, n))


cdef void _augment(int kind, const u8* rows, int n, const u8* ups, int nu,
                   const u8* the, int nt, const u8* comp, u8* out) nogil:
    cdef int p, q, s, t, ok, found
    cdef const u8* c
    for p in range(n):
        out[p] = rows[p]
    for p in range(n):
        for q in range(n):
            if _le(rows, p, q):
                continue
            ok = 1
            if kind == 0 or kind == 1:
                for s in range(nu):
                    if _le(rows, ups[s * n + p], ups[s * n + q]):
                        ok = 0
                        break
                if ok:
                    for t in range(nt):
                        if kind == 0:
                            if _le(rows, the[t * n + q], the[t * n + p]):
                                ok = 0
                                break
                        else:
                            if _lt(rows, the[t * n + q], the[t * n + p]):
                                ok = 0
                                break
            else:
                if kind == 2 and not _le(rows, q, p):
                    ok = 0
                s = 0
                while ok and s < nu:
                    found = 0
                    for t in range(nt):
                        c = comp + (s * nt + t) * n
                        if kind == 2:
                            if not _lt(rows, c[q], c[p]):
                                found = 1
                                break
                        elif kind == 3:
                            if _le(rows, c[p], c[q]):
                                found = 1
                                break
                        else:
                            if _lt(rows, c[p], c[q]):
                                found = 1
                                break
                    if not found:
                        ok = 0
                    s += 1
            if ok:
                out[p] |= <u8>(1 << q)


def augment(int kind, const u8[:] rows, int n, const u8[:] ups, int nu,
            const u8[:] the, int nt):
    if kind < 0 or kind > 4:
        raise ValueError(f"unknown augmentation kind {kind}")
    cdef u8 r[MAXN]
    cdef u8 out[MAXN]
    cdef int p
    for p in range(n):
        r[p] = rows[p]
    cdef const u8* up = &ups[0] if nu > 0 else NULL
    cdef const u8* tp = &the[0] if nt > 0 else NULL
    cdef u8* comp = NULL
    if kind >= 2:
        comp = _composites(up, nu, tp, nt, n)
    try:
        _augment(kind, r, n, up, nu, tp, nt, comp, out)
    finally:
        if comp != NULL:
            free(comp)
    return bytes([out[p] for p in range(n)])


cdef int _prop_failure(int prop, const u8* rows, int n, const u8* ups, int nu,
                       const u8* the, int nt, const u8* comp) nogil:
    cdef int p, q, s, t, ok, allok
    cdef const u8* c
    if prop == 5:
        for p in range(n):
            for q in range(n):
                if (rows[p] >> q) & 1 and (rows[q] & ~rows[p]):
                    return p * n + q
        return -1
    for p in range(n):
        for q in range(n):
            if prop == 0 or prop == 1:
                ok = 0
                for s in range(nu):
                    if _le(rows, ups[s * n + p], ups[s * n + q]):
                        ok = 1
                        break
                if not ok:
                    for t in range(nt):
                        if prop == 0:
                            if _le(rows, the[t * n + q], the[t * n + p]):
                                ok = 1
                                break
                        else:
                            if _lt(rows, the[t * n + q], the[t * n + p]):
                                ok = 1
                                break
            else:
                if prop == 2 and not _lt(rows, p, q):
                    continue
                if prop == 3 and _le(rows, p, q):
                    continue
                if prop == 4 and _lt(rows, p, q):
                    continue
                ok = 0
                for s in range(nu):
                    allok = 1
                    for t in range(nt):
                        c = comp + (s * nt + t) * n
                        if prop == 2:
                            if not _lt(rows, c[p], c[q]):
                                allok = 0
                                break
                        elif prop == 3:
                            if _le(rows, c[p], c[q]):
                                allok = 0
                                break
                        else:
                            if _lt(rows, c[p], c[q]):
                                allok = 0
                                break
                    if allok:
                        ok = 1
                        break
            if not ok:
                return p * n + q
    return -1


def prop_failure(int prop, const u8[:] rows, int n, const u8[:] ups, int nu,
                 const u8[:] the, int nt):
    if prop < 0 or prop > 5:
        raise ValueError(f"unknown property {prop}")
    cdef u8 r[MAXN]
    cdef int p, res
    for p in range(n):
        r[p] = rows[p]
    cdef const u8* up = &ups[0] if nu > 0 else NULL
    cdef const u8* tp = &the[0] if nt > 0 else NULL
    cdef u8* comp = NULL
    if 2 <= prop <= 4:
        comp = _composites(up, nu, tp, nt, n)
    try:
        res = _prop_failure(prop, r, n, up, nu, tp, nt, comp)
    finally:
        if comp != NULL:
            free(comp)
    return res


def brute_min(const u8[:] rows, int n, int prop, const u8[:] ups, int nu,
              const u8[:] the, int nt, bint qo_only):
    if prop < 0 or prop > 5:
        raise ValueError(f"unknown property {prop}")
    cdef int holes_p[MAXN * MAXN]
    cdef int holes_q[MAXN * MAXN]
    cdef int nh = 0, p, q, i, refl
    cdef u8 base[MAXN]
    cdef u8 cand[MAXN]
    cdef u8 inter[MAXN]
    cdef long long mask, total, count = 0
    for p in range(n):
        base[p] = rows[p]
        inter[p] = <u8>((1 << n) - 1)
        for q in range(n):
            if not (rows[p] >> q) & 1:
                holes_p[nh] = p
                holes_q[nh] = q
                nh += 1
    if nh > 24:
        raise ValueError("too many non-edges for exhaustive superset scan")
    cdef const u8* up = &ups[0] if nu > 0 else NULL
    cdef const u8* tp = &the[0] if nt > 0 else NULL
    cdef u8* comp = NULL
    if 2 <= prop <= 4:
        comp = _composites(up, nu, tp, nt, n)
    total = 1LL << nh
    try:
        with nogil:
            for mask in range(total):
                for p in range(n):
                    cand[p] = base[p]
                for i in range(nh):
                    if (mask >> i) & 1:
                        cand[holes_p[i]] |= <u8>(1 << holes_q[i])
                if qo_only:
                    refl = 1
                    for p in range(n):
                        if not (cand[p] >> p) & 1:
                            refl = 0
                            break
                    if not refl or not _is_transitive(cand, n):
                        continue
                if _prop_failure(prop, cand, n, up, nu, tp, nt, comp) == -1:
                    count += 1
                    for p in range(n):
                        inter[p] &= cand[p]
    finally:
        if comp != NULL:
            free(comp)
    if count == 0:
        return 0, b""
    return count, bytes([inter[p] for p in range(n)])


def endo_mask(const u8[:] rows, int n, const u8[:] tables, int k):
    out = bytearray(k)
    cdef unsigned char[:] ov = out
    cdef int i, p, q, ok
    cdef const u8* f
    for i in range(k):
        f = &tables[i * n]
        ok = 1
        for p in range(n):
            for q in range(n):
                if (rows[p] >> q) & 1 and not ((rows[f[p]] >> f[q]) & 1):
                    ok = 0
                    break
            if not ok:
                break
        ov[i] = ok
    return bytes(out)
