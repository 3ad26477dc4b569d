"""Pure-Python kernels.

Four entry points: `is_subword`, `subset_construction`, `dfa_minimize`,
`cone_closure`.  The compiled twin (`_kernels_c`) implements the same
signatures with identical observable behaviour; `kernels` picks one at
import time.  Everything here works on flat integer tables so the two twins
can share call sites and parity tests.
"""

from __future__ import annotations

from .errors import BudgetExceededError


def is_subword(x, y):
    """Scattered-subword test on index sequences: x embeds into y."""
    it = iter(y)
    # `a in it` consumes the iterator up to and including the match, which is
    # exactly the greedy leftmost embedding.
    return all(a in it for a in x)


def subset_construction(n, k, succ, init_mask, budget):
    """Powerset construction over bitmask subsets, BFS order.

    succ is a flat n*k table, succ[q*k + a] = bitmask of a-successors of q.
    Empty successor subsets are never materialised (partial rows get -1).
    Returns (delta, subsets): delta flat len(subsets)*k, subsets[i] the
    bitmask behind DFA state i, subsets[0] == init_mask (must be nonzero).
    Raises BudgetExceededError once more than `budget` subsets appear.
    """
    idx = {init_mask: 0}
    subsets = [init_mask]
    delta = []
    pos = 0
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
            j = idx.get(t)
            if j is None:
                j = len(subsets)
                if j >= budget:
                    raise BudgetExceededError("determinization subset states", budget)
                idx[t] = j
                subsets.append(t)
            delta.append(j)
        pos += 1
    return delta, subsets


def dfa_minimize(n, k, delta, initial, finals):
    """Canonical minimal partial DFA via Hopcroft refinement.

    delta is flat n*k with -1 for missing edges.  The result is restricted to
    reachable states, quotiented, stripped of the rejecting sink class, and
    renumbered by BFS discovery order from the initial state with symbols
    scanned in index order (so equal languages give byte-equal tables).
    Returns (n2, delta2, finals2); the empty language yields one non-final
    state with no transitions.
    """
    # Restrict to states reachable from the initial one.
    order = [initial]
    seen = {initial}
    for q in order:
        base = q * k
        for a in range(k):
            t = delta[base + a]
            if t >= 0 and t not in seen:
                seen.add(t)
                order.append(t)
    remap = {q: i for i, q in enumerate(order)}
    m = len(order)
    sink = m
    big = m + 1
    d = [sink] * (big * k)
    for i, q in enumerate(order):
        base = q * k
        for a in range(k):
            t = delta[base + a]
            if t >= 0:
                d[i * k + a] = remap[t]
    for a in range(k):
        d[sink * k + a] = sink
    fin = sorted(remap[q] for q in set(finals) if q in remap)

    # Inverse edges, CSR per (target, symbol).  The completed DFA has exactly
    # big*k edges.
    off = [0] * (big * k + 1)
    for q in range(big):
        for a in range(k):
            off[d[q * k + a] * k + a + 1] += 1
    for i in range(big * k):
        off[i + 1] += off[i]
    rev = [0] * (big * k)
    cur = off[: big * k]
    for q in range(big):
        for a in range(k):
            key = d[q * k + a] * k + a
            rev[cur[key]] = q
            cur[key] += 1

    # Partition structure: elems ordered by block, loc/blk lookups, block
    # slices [first[b], past[b]).
    elems = list(range(big))
    loc = list(range(big))
    blk = [0] * big
    first = [0]
    past = [big]

    def split_block(b, marked):
        # marked is a nonempty proper subset of block b, no duplicates
        f = first[b]
        for q in marked:
            i = loc[q]
            other = elems[f]
            elems[i], elems[f] = other, q
            loc[q], loc[other] = f, i
            f += 1
        nb = len(first)
        first.append(first[b])
        past.append(f)
        first[b] = f
        for i in range(first[nb], f):
            blk[elems[i]] = nb
        return nb

    work = []
    in_work = set()
    if fin:
        # the sink is never final, so this is always a proper split
        nb = split_block(0, fin)
        small = nb if past[nb] - first[nb] <= past[0] - first[0] else 0
        work.append(small)
        in_work.add(small)
    while work:
        b = work.pop()
        in_work.discard(b)
        splitter = elems[first[b] : past[b]]
        for a in range(k):
            marked_by_block = {}
            for t in splitter:
                key = t * k + a
                for i in range(off[key], off[key + 1]):
                    p = rev[i]
                    marked_by_block.setdefault(blk[p], []).append(p)
            for bb, marked in marked_by_block.items():
                if len(marked) == past[bb] - first[bb]:
                    continue
                nb = split_block(bb, marked)
                if bb in in_work:
                    work.append(nb)
                    in_work.add(nb)
                else:
                    small = nb if past[nb] - first[nb] <= past[bb] - first[bb] else bb
                    work.append(small)
                    in_work.add(small)

    bsink = blk[sink]
    binit = blk[0]
    if binit == bsink:
        return 1, [-1] * k, []
    # BFS renumber over the quotient, skipping the sink class.
    bidx = {binit: 0}
    border = [binit]
    out = []
    for b in border:
        rep = elems[first[b]]
        base = rep * k
        for a in range(k):
            tb = blk[d[base + a]]
            if tb == bsink:
                out.append(-1)
                continue
            j = bidx.get(tb)
            if j is None:
                j = len(border)
                bidx[tb] = j
                border.append(tb)
            out.append(j)
    finals2 = sorted({bidx[blk[q]] for q in fin})
    return len(border), out, finals2


def cone_closure(num_suffixes, k, nxt, eps_id, dom_masks, start, budget):
    """Minimal DFA of the upward closure of a finite word set.

    States are inclusion-minimal antichains of pending suffixes, as sorted
    tuples of suffix ids (ids key distinct suffix CONTENT, so distinct states
    have distinct residuals and the construction is already minimal and in
    canonical BFS order).  nxt is flat num_suffixes*k: where suffix s moves
    on symbol a (s itself unless a matches its head; the empty suffix maps to
    itself).  dom_masks[s] = bitmask of ids whose suffix embeds into s's
    (strict dominators; such members are dropped).  start must already be
    reduced.  The one final state, if reachable, is the antichain {empty}.
    """
    start_t = tuple(sorted(start))
    idx = {start_t: 0}
    states = [start_t]
    delta = []
    finals = []
    pos = 0
    while pos < len(states):
        st = states[pos]
        if len(st) == 1 and st[0] == eps_id:
            finals.append(pos)
        for a in range(k):
            members = sorted({nxt[s * k + a] for s in st})
            if len(members) > 1:
                mask = 0
                for s in members:
                    mask |= 1 << s
                members = [s for s in members if not (dom_masks[s] & mask)]
            t = tuple(members)
            j = idx.get(t)
            if j is None:
                j = len(states)
                if j >= budget:
                    raise BudgetExceededError("closure antichain states", budget)
                idx[t] = j
                states.append(t)
            delta.append(j)
        pos += 1
    return len(states), delta, finals
