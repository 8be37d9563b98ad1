"""Pure-Python kernels. Same contract as the compiled ``_kernels`` module.

A relation on ``{0..n-1}`` (n <= 8) is packed as ``bytes`` of length ``n``:
byte ``p`` is the row mask, bit ``q`` set iff ``p <= q``.  A family of ``k``
functions is packed as ``bytes`` of length ``k*n`` holding the tables back to
back.
"""

LINEAR, STRICT_LINEAR, STRICTIVE, CORRECTIVE, NEG_STRICTIVE = range(5)
P_LINEAR, P_STRICT_LINEAR, P_STRICT, P_CORRECT, P_NEG_STRICT, P_TRANSITIVE = range(6)

IMPLEMENTATION = "python"


def _tables(packed, k, n):
    return [packed[i * n:(i + 1) * n] for i in range(k)]


def closure(rows, n):
    """Transitive closure by repeated squaring until a fixed point."""
    cur = list(rows)
    while True:
        nxt = []
        for p in range(n):
            acc = cur[p]
            m = cur[p]
            q = 0
            while m:
                if m & 1:
                    acc |= cur[q]
                m >>= 1
                q += 1
            nxt.append(acc)
        if nxt == cur:
            return bytes(cur)
        cur = nxt


def is_transitive(rows, n):
    for p in range(n):
        m = rows[p]
        q = 0
        mm = m
        while mm:
            if mm & 1 and rows[q] & ~m:
                return False
            mm >>= 1
            q += 1
    return True


def _composites(U, T, n):
    # composites[s] = list of tables tau o sigma for tau in T
    return [[bytes(t[s[x]] for x in range(n)) for t in T] for s in U]


def augment(kind, rows, n, ups, nu, the, nt):
    U = _tables(ups, nu, n)
    T = _tables(the, nt, n)

    def le(a, b):
        return rows[a] >> b & 1

    out = bytearray(rows)
    if kind in (STRICTIVE, CORRECTIVE, NEG_STRICTIVE):
        comp = _composites(U, T, n)
    for p in range(n):
        for q in range(n):
            if le(p, q):
                continue
            if kind == LINEAR:
                ok = all(not le(s[p], s[q]) for s in U) and all(not le(t[q], t[p]) for t in T)
            elif kind == STRICT_LINEAR:
                ok = all(not le(s[p], s[q]) for s in U) and all(
                    not (le(t[q], t[p]) and not le(t[p], t[q])) for t in T
                )
            elif kind == STRICTIVE:
                # q < p, since p <= q fails here
                ok = bool(le(q, p)) and all(
                    any(not (le(c[q], c[p]) and not le(c[p], c[q])) for c in cs) for cs in comp
                )
            elif kind == CORRECTIVE:
                ok = all(any(le(c[p], c[q]) for c in cs) for cs in comp)
            elif kind == NEG_STRICTIVE:
                ok = all(any(le(c[p], c[q]) and not le(c[q], c[p]) for c in cs) for cs in comp)
            else:
                raise ValueError(f"unknown augmentation kind {kind}")
            if ok:
                out[p] |= 1 << q
    return bytes(out)


def prop_failure(prop, rows, n, ups, nu, the, nt):
    """Return -1 if the property holds, else ``p*n+q`` of the first failing pair."""
    if prop == P_TRANSITIVE:
        for p in range(n):
            for q in range(n):
                if rows[p] >> q & 1 and rows[q] & ~rows[p]:
                    return p * n + q
        return -1
    U = _tables(ups, nu, n)
    T = _tables(the, nt, n)

    def le(a, b):
        return rows[a] >> b & 1

    def lt(a, b):
        return le(a, b) and not le(b, a)

    if prop in (P_STRICT, P_CORRECT, P_NEG_STRICT):
        comp = _composites(U, T, n)
    for p in range(n):
        for q in range(n):
            if prop == P_LINEAR:
                ok = any(le(s[p], s[q]) for s in U) or any(le(t[q], t[p]) for t in T)
            elif prop == P_STRICT_LINEAR:
                ok = any(le(s[p], s[q]) for s in U) or any(lt(t[q], t[p]) for t in T)
            elif prop == P_STRICT:
                if not lt(p, q):
                    continue
                ok = any(all(lt(c[p], c[q]) for c in cs) for cs in comp)
            elif prop == P_CORRECT:
                if le(p, q):
                    continue
                ok = any(all(not le(c[p], c[q]) for c in cs) for cs in comp)
            elif prop == P_NEG_STRICT:
                if lt(p, q):
                    continue
                ok = any(all(not lt(c[p], c[q]) for c in cs) for cs in comp)
            else:
                raise ValueError(f"unknown property {prop}")
            if not ok:
                return p * n + q
    return -1


def brute_min(rows, n, prop, ups, nu, the, nt, qo_only):
    """Scan every superset of ``rows``; keep those satisfying ``prop``.

    Returns ``(count, intersection)`` where ``intersection`` is the packed
    meet of all satisfying supersets (empty bytes when none satisfy).
    Supersets failing reflexivity+transitivity are skipped if ``qo_only``.
    """
    holes = [(p, q) for p in range(n) for q in range(n) if not rows[p] >> q & 1]
    count = 0
    inter = [0xFF] * n
    full = (1 << n) - 1
    for mask in range(1 << len(holes)):
        cand = bytearray(rows)
        for i, (p, q) in enumerate(holes):
            if mask >> i & 1:
                cand[p] |= 1 << q
        if qo_only:
            if any(not cand[p] >> p & 1 for p in range(n)) or not is_transitive(cand, n):
                continue
        if prop_failure(prop, bytes(cand), n, ups, nu, the, nt) == -1:
            count += 1
            for p in range(n):
                inter[p] &= cand[p]
    if not count:
        return 0, b""
    return count, bytes(x & full for x in inter)


def endo_mask(rows, n, tables, k):
    """Flags (one byte per table): 1 iff table ``i`` preserves the relation."""
    out = bytearray(k)
    for i in range(k):
        f = tables[i * n:(i + 1) * n]
        ok = 1
        for p in range(n):
            fp_row = rows[f[p]]
            for q in range(n):
                if rows[p] >> q & 1 and not fp_row >> f[q] & 1:
                    ok = 0
                    break
            if not ok:
                break
        out[i] = ok
    return bytes(out)
