# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, mirroring _kernels_py exactly.

dfa_minimize runs entirely on C arrays; subset_construction and
cone_closure keep Python integers for state-set bitmasks (they routinely
need more than 64 bits) and only type the loop machinery around them.
The observable behaviour, including canonical output order and budget
errors, matches the pure twin; the parity tests drive both.
"""

from libc.stdlib cimport free, malloc

from .errors import BudgetExceededError


def is_subword(x, y):
    """Scattered-subword test on index sequences: x embeds into y."""
    cdef Py_ssize_t i = 0, j = 0, nx = len(x), ny = len(y)
    cdef int a
    while i < nx:
        a = x[i]
        while j < ny and <int>y[j] != a:
            j += 1
        if j == ny:
            return False
        i += 1
        j += 1
    return True


def subset_construction(n, int k, succ, init_mask, budget):
    """Powerset construction over bitmask subsets, BFS order."""
    cdef int a
    cdef Py_ssize_t pos = 0, j
    idx = {init_mask: 0}
    subsets = [init_mask]
    delta = []
    while pos < len(subsets):
        s = subsets[pos]
        for a in range(k):
            t = 0
            x = s
            while x:
                low = x & -x
                t |= succ[(low.bit_length() - 1) * k + a]
                x ^= low
            if t == 0:
                delta.append(-1)
                continue
            cached = idx.get(t)
            if cached is None:
                j = len(subsets)
                if j >= budget:
                    raise BudgetExceededError("determinization subset states", budget)
                idx[t] = j
                subsets.append(t)
                delta.append(j)
            else:
                delta.append(cached)
        pos += 1
    return delta, subsets


cdef void* _need(void* p) except NULL:
    if p == NULL:
        raise MemoryError()
    return p


def dfa_minimize(int n, int k, delta, int initial, finals):
    """Canonical minimal partial DFA via Hopcroft refinement.

    Same contract as the pure twin: restrict to reachable states, complete
    with a sink, refine, drop the sink class, renumber in BFS order.  The
    refinement partition is the unique coarsest one, so the canonical
    output is independent of the internal split order.
    """
    cdef int big, m, sink, q, a, t, i, f, b, bb, nb, p, key, sz, mk
    cdef int nblocks, work_n, touched_n, pos_p, dest, other, bsink, binit
    cdef int* bidx = NULL
    cdef int* border = NULL
    cdef int* cdelta = NULL
    cdef int* order = NULL
    cdef int* remap = NULL
    cdef int* d = NULL
    cdef int* off = NULL
    cdef int* rev = NULL
    cdef int* cur = NULL
    cdef int* elems = NULL
    cdef int* loc = NULL
    cdef int* blk = NULL
    cdef int* first = NULL
    cdef int* past = NULL
    cdef int* mcount = NULL
    cdef int* touched = NULL
    cdef int* work = NULL
    cdef char* in_work = NULL
    cdef char* is_fin = NULL

    cdelta = <int*>_need(malloc((n * k if n * k else 1) * sizeof(int)))
    for i in range(n * k):
        cdelta[i] = delta[i]
    order = <int*>_need(malloc((n if n else 1) * sizeof(int)))
    remap = <int*>_need(malloc((n if n else 1) * sizeof(int)))
    try:
        # Reachability restriction.
        for q in range(n):
            remap[q] = -1
        order[0] = initial
        remap[initial] = 0
        m = 1
        i = 0
        while i < m:
            q = order[i]
            for a in range(k):
                t = cdelta[q * k + a]
                if t >= 0 and remap[t] < 0:
                    remap[t] = m
                    order[m] = t
                    m += 1
            i += 1
        sink = m
        big = m + 1

        d = <int*>_need(malloc(big * k * sizeof(int)))
        for i in range(big * k):
            d[i] = sink
        for i in range(m):
            q = order[i]
            for a in range(k):
                t = cdelta[q * k + a]
                if t >= 0:
                    d[i * k + a] = remap[t]

        is_fin = <char*>_need(malloc(big))
        for i in range(big):
            is_fin[i] = 0
        for obj in set(finals):
            q = obj
            if 0 <= q < n and remap[q] >= 0:
                is_fin[remap[q]] = 1

        # CSR inverse edges of the completed DFA.
        off = <int*>_need(malloc((big * k + 1) * sizeof(int)))
        for i in range(big * k + 1):
            off[i] = 0
        for q in range(big):
            for a in range(k):
                off[d[q * k + a] * k + a + 1] += 1
        for i in range(big * k):
            off[i + 1] += off[i]
        rev = <int*>_need(malloc(big * k * sizeof(int)))
        cur = <int*>_need(malloc(big * k * sizeof(int)))
        for i in range(big * k):
            cur[i] = off[i]
        for q in range(big):
            for a in range(k):
                key = d[q * k + a] * k + a
                rev[cur[key]] = q
                cur[key] += 1

        # Partition refinement.  Blocks are slices [first[b], past[b]) of
        # elems; marked elements are swapped into a prefix of their block.
        elems = <int*>_need(malloc(big * sizeof(int)))
        loc = <int*>_need(malloc(big * sizeof(int)))
        blk = <int*>_need(malloc(big * sizeof(int)))
        first = <int*>_need(malloc(big * sizeof(int)))
        past = <int*>_need(malloc(big * sizeof(int)))
        mcount = <int*>_need(malloc(big * sizeof(int)))
        touched = <int*>_need(malloc(big * sizeof(int)))
        work = <int*>_need(malloc(big * sizeof(int)))
        in_work = <char*>_need(malloc(big))
        for i in range(big):
            elems[i] = i
            loc[i] = i
            blk[i] = 0
            mcount[i] = 0
            in_work[i] = 0
        first[0] = 0
        past[0] = big
        nblocks = 1
        work_n = 0

        # Initial split on the final states (the sink is never final).
        f = 0
        for i in range(big):
            if is_fin[i]:
                q = i
                pos_p = loc[q]
                other = elems[f]
                elems[pos_p] = other
                elems[f] = q
                loc[q] = f
                loc[other] = pos_p
                f += 1
        if f:
            first[1] = 0
            past[1] = f
            first[0] = f
            for i in range(f):
                blk[elems[i]] = 1
            nblocks = 2
            b = 1 if f <= big - f else 0
            work[work_n] = b
            work_n += 1
            in_work[b] = 1

        splitter_buf = None
        while work_n:
            work_n -= 1
            b = work[work_n]
            in_work[b] = 0
            sz = past[b] - first[b]
            splitter_buf = [elems[i] for i in range(first[b], past[b])]
            for a in range(k):
                touched_n = 0
                for obj in splitter_buf:
                    t = obj
                    key = t * k + a
                    for i in range(off[key], off[key + 1]):
                        p = rev[i]
                        bb = blk[p]
                        if mcount[bb] == 0:
                            touched[touched_n] = bb
                            touched_n += 1
                        pos_p = loc[p]
                        dest = first[bb] + mcount[bb]
                        other = elems[dest]
                        elems[pos_p] = other
                        elems[dest] = p
                        loc[p] = dest
                        loc[other] = pos_p
                        mcount[bb] += 1
                for i in range(touched_n):
                    bb = touched[i]
                    mk = mcount[bb]
                    mcount[bb] = 0
                    if mk == past[bb] - first[bb]:
                        continue
                    nb = nblocks
                    nblocks += 1
                    first[nb] = first[bb]
                    past[nb] = first[bb] + mk
                    first[bb] = first[bb] + mk
                    for q in range(first[nb], past[nb]):
                        blk[elems[q]] = nb
                    if in_work[bb]:
                        work[work_n] = nb
                        work_n += 1
                        in_work[nb] = 1
                    else:
                        b = nb if past[nb] - first[nb] <= past[bb] - first[bb] else bb
                        work[work_n] = b
                        work_n += 1
                        in_work[b] = 1

        bsink = blk[sink]
        binit = blk[0]
        if binit == bsink:
            return 1, [-1] * k, []

        # BFS renumber over the quotient, skipping the sink class.
        bidx = <int*>_need(malloc(nblocks * sizeof(int)))
        border = <int*>_need(malloc(nblocks * sizeof(int)))
        for i in range(nblocks):
            bidx[i] = -1
        bidx[binit] = 0
        border[0] = binit
        sz = 1
        out = []
        i = 0
        while i < sz:
            b = border[i]
            q = elems[first[b]]
            for a in range(k):
                bb = blk[d[q * k + a]]
                if bb == bsink:
                    out.append(-1)
                    continue
                if bidx[bb] < 0:
                    bidx[bb] = sz
                    border[sz] = bb
                    sz += 1
                out.append(bidx[bb])
            i += 1
        finals2 = sorted({bidx[blk[i]] for i in range(m) if is_fin[i]})
        return sz, out, finals2
    finally:
        free(bidx)
        free(border)
        free(cdelta)
        free(order)
        free(remap)
        free(d)
        free(off)
        free(rev)
        free(cur)
        free(elems)
        free(loc)
        free(blk)
        free(first)
        free(past)
        free(mcount)
        free(touched)
        free(work)
        free(in_work)
        free(is_fin)


def cone_closure(num_suffixes, int k, nxt, int eps_id, dom_masks, start, budget):
    """Minimal DFA of the upward closure of a finite word set.

    Same state space and order as the pure twin: antichains of pending
    suffix ids as sorted tuples, BFS from the reduced start antichain.
    """
    cdef int a, i, j, w, m, m2, v
    cdef Py_ssize_t pos = 0, nstates
    cdef int ns = num_suffixes
    cdef int* cnxt = <int*>_need(malloc((ns * k if ns * k else 1) * sizeof(int)))
    cdef int* buf = <int*>_need(malloc((ns if ns else 1) * sizeof(int)))
    try:
        for i in range(ns * k):
            cnxt[i] = nxt[i]
        # Python-int bit masks: suffix counts routinely pass 64, so this must
        # not become a C shift (i is a C int).
        one = <object>1
        bit = [one << i for i in range(ns)]

        start_t = tuple(sorted(start))
        idx = {start_t: 0}
        states = [start_t]
        delta = []
        finals = []
        while pos < len(states):
            st = states[pos]
            if len(st) == 1 and <int>st[0] == eps_id:
                finals.append(pos)
            for a in range(k):
                # next ids, insertion-sorted and deduplicated
                m = 0
                for obj in st:
                    v = cnxt[(<int>obj) * k + a]
                    j = m
                    while j > 0 and buf[j - 1] > v:
                        j -= 1
                    if j > 0 and buf[j - 1] == v:
                        continue
                    w = m
                    while w > j:
                        buf[w] = buf[w - 1]
                        w -= 1
                    buf[j] = v
                    m += 1
                if m > 1:
                    mask = 0
                    for i in range(m):
                        mask |= bit[buf[i]]
                    m2 = 0
                    for i in range(m):
                        if not (dom_masks[buf[i]] & mask):
                            buf[m2] = buf[i]
                            m2 += 1
                    m = m2
                t = tuple([buf[i] for i in range(m)])
                cached = idx.get(t)
                if cached is None:
                    nstates = len(states)
                    if nstates >= budget:
                        raise BudgetExceededError("closure antichain states", budget)
                    idx[t] = nstates
                    states.append(t)
                    delta.append(nstates)
                else:
                    delta.append(cached)
            pos += 1
        return len(states), delta, finals
    finally:
        free(cnxt)
        free(buf)
