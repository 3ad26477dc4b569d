"""Decision procedures with certificates.

Every decision returns a Certificate whose witness field is populated
exactly when the verdict is negative:

    is_closed           witness = shortest word in closure(L) ∖ L
    dfa_closed_witness  witness = triple (u, a, v) of Words, |a| = 1
    closure_inclusion   witness = shortest word in closure(A) ∖ closure(B)
    closure_equal       witness = shortest word on the failing side
    down_universal      witness = shortest word outside the down-closure

Witness words are canonical: length-lexicographically least.  The triple
witness of dfa_closed_witness satisfies uv ∈ L and uav ∉ L for the up
direction (so L is not up-closed), and uv ∉ L, uav ∈ L for down; its
lengths obey |u| < n and |v| < n² for an n-state input DFA, since both
parts come out of breadth-first searches.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceededError, InputError, VerificationError
from .core import (
    DEFAULT_BUDGET,
    Dfa,
    Word,
    as_nfa,
    complement,
    completed,
    sigma_star_dfa,
)
from .closures import down_closure, up_closure


@dataclass(frozen=True)
class Certificate:
    verdict: bool
    witness: object = None

    def __post_init__(self):
        if self.verdict and self.witness is not None:
            raise InputError("a positive certificate carries no witness")
        if not self.verdict and self.witness is None:
            raise InputError("a negative certificate needs a witness")

    def __bool__(self):
        return self.verdict


def _check_direction(direction):
    if direction not in ("up", "down"):
        raise InputError(f"unknown direction {direction!r} (want up or down)")


def _closure_nfa(a, direction):
    return up_closure(a) if direction == "up" else down_closure(a)


def _expand(succ, mask, k, x):
    out = 0
    while mask:
        low = mask & -mask
        out |= succ[(low.bit_length() - 1) * k + x]
        mask ^= low
    return out


def shortest_in_difference(a, b, budget=DEFAULT_BUDGET):
    """Length-lex least word in L(a) ∖ L(b), or None if the difference is empty.

    Runs a breadth-first search over pairs of powerset states, built on
    the fly, so neither side is determinised up front.
    """
    a = as_nfa(a)
    b = as_nfa(b)
    if a.alphabet != b.alphabet:
        raise InputError("automata must share an alphabet")
    k = a.k
    asucc = a.succ_masks()
    bsucc = b.succ_masks()
    afin = a.final_mask()
    bfin = b.final_mask()
    start = (a.init_mask(), b.init_mask())
    if not start[0]:
        return None
    if start[0] & afin and not start[1] & bfin:
        return Word(a.alphabet, ())
    parent = {start: None}
    frontier = [start]
    count = 1
    while frontier:
        nxt = []
        for pair in frontier:
            am, bm = pair
            for x in range(k):
                am2 = _expand(asucc, am, k, x)
                if not am2:
                    continue
                key = (am2, _expand(bsucc, bm, k, x))
                if key in parent:
                    continue
                parent[key] = (pair, x)
                count += 1
                if count > budget:
                    raise BudgetExceededError("difference product states", budget)
                if key[0] & afin and not key[1] & bfin:
                    letters = []
                    cur = key
                    while parent[cur] is not None:
                        cur, x0 = parent[cur]
                        letters.append(x0)
                    return Word(a.alphabet, tuple(reversed(letters)))
                nxt.append(key)
        frontier = nxt
    return None


def is_closed(a, direction, budget=DEFAULT_BUDGET):
    """Is L(a) up- or down-closed?  The closure always contains L, so this
    reduces to emptiness of closure(L) ∖ L."""
    a = as_nfa(a)
    _check_direction(direction)
    w = shortest_in_difference(_closure_nfa(a, direction), a, budget)
    return Certificate(w is None, w)


def dfa_closed_witness(d, direction):
    """Closedness of a DFA's language, with a structured counterexample.

    A DFA's language fails to be up-closed exactly when some insertion
    leaves it: uv ∈ L but uav ∉ L.  The down direction is decided on the
    complement, so there the triple satisfies uv ∉ L and uav ∈ L.  Among
    all violating triples the result minimises (|u| + |v|, |u|), then
    compares (u, a, v) lexicographically.
    """
    if not isinstance(d, Dfa):
        raise InputError("dfa_closed_witness needs a Dfa")
    _check_direction(direction)
    base = completed(d) if direction == "up" else complement(d)
    n = base.n
    k = base.k
    flat = base.delta_flat()
    fin = [False] * n
    for f in base.final:
        fin[f] = True

    # Shortest (and lex-least) access word per reachable state.
    access = {base.initial: ()}
    queue = deque([base.initial])
    order = [base.initial]
    while queue:
        p = queue.popleft()
        u = access[p]
        for x in range(k):
            q = flat[p * k + x]
            if q not in access:
                access[q] = u + (x,)
                order.append(q)
                queue.append(q)

    # dist[(p, q)] = length of the shortest v with delta(p, v) final and
    # delta(q, v) not final, via backward search from the base pairs.
    dist = {}
    dq = deque()
    for p in range(n):
        if not fin[p]:
            continue
        for q in range(n):
            if not fin[q]:
                dist[(p, q)] = 0
                dq.append((p, q))
    inv = {}
    for p in range(n):
        for q in range(n):
            for x in range(k):
                inv.setdefault((flat[p * k + x], flat[q * k + x]), []).append((p, q))
    while dq:
        pair = dq.popleft()
        dd = dist[pair] + 1
        for prev in inv.get(pair, ()):
            if prev not in dist:
                dist[prev] = dd
                dq.append(prev)

    best_cost = None
    finalists = []
    for p in order:
        lu = len(access[p])
        for x in range(k):
            dd = dist.get((p, flat[p * k + x]))
            if dd is None:
                continue
            cost = (lu + dd, lu)
            if best_cost is None or cost < best_cost:
                best_cost = cost
                finalists = [(p, x)]
            elif cost == best_cost:
                finalists.append((p, x))
    if best_cost is None:
        return Certificate(True)

    def suffix(p, q, dd):
        letters = []
        while dd:
            for x in range(k):
                p2, q2 = flat[p * k + x], flat[q * k + x]
                if dist.get((p2, q2)) == dd - 1:
                    letters.append(x)
                    p, q, dd = p2, q2, dd - 1
                    break
        return tuple(letters)

    triple = min(
        (access[p], (x,), suffix(p, flat[p * k + x], best_cost[0] - best_cost[1]))
        for p, x in finalists)
    u, mid, v = (Word(d.alphabet, t) for t in triple)
    return Certificate(False, (u, mid, v))


def closure_inclusion(a, b, direction, budget=DEFAULT_BUDGET):
    """Does closure(L(a)) ⊆ closure(L(b)) hold for the given direction?

    A negative certificate's witness is the shortest word of the
    difference.  For up its length is strictly below a's state count
    (pump a shortest accepted subword).  For down it is at most b's
    state count: the subset chain of the witness run is strictly
    decreasing, but it may bottom out at the empty set, which costs one
    extra letter over the strict bound one would get otherwise.
    """
    a = as_nfa(a)
    b = as_nfa(b)
    _check_direction(direction)
    w = shortest_in_difference(_closure_nfa(a, direction), _closure_nfa(b, direction), budget)
    if w is None:
        return Certificate(True)
    if direction == "up":
        assert a.n == 0 or len(w) < a.n, "shortest witness escaped its length bound"
    else:
        assert len(w) <= b.n, "shortest witness escaped its length bound"
    return Certificate(False, w)


def closure_equal(a, b, direction, budget=DEFAULT_BUDGET):
    """Closure equivalence; the witness names a word on the failing side."""
    first = closure_inclusion(a, b, direction, budget)
    if not first.verdict:
        return first
    return closure_inclusion(b, a, direction, budget)


def down_universal(a, budget=DEFAULT_BUDGET):
    """Is the down-closure of L(a) all of Σ*?

    Decided on the graph alone: the down-closure is universal iff some
    useful state q can, for every letter a, reach a transition labelled a
    and come back (then arbitrarily long words embed into words of L).
    The witness of a negative answer is the shortest word missing from
    the down-closure.
    """
    a = as_nfa(a)
    n = a.n
    k = a.k
    succ = a.succ_masks()
    reach = []
    for s in range(n):
        m = 1 << s
        stack = [s]
        while stack:
            q = stack.pop()
            for x in range(k):
                new = succ[q * k + x] & ~m
                while new:
                    low = new & -new
                    m |= low
                    stack.append(low.bit_length() - 1)
                    new ^= low
        reach.append(m)
    init = a.init_mask()
    fin = a.final_mask()
    fwd = 0
    mm = init
    while mm:
        low = mm & -mm
        fwd |= reach[low.bit_length() - 1]
        mm ^= low
    by_letter = [[] for _ in range(k)]
    for p, x, q in a.transitions:
        by_letter[x].append((p, q))
    for q in range(n):
        if not (fwd >> q) & 1 or not reach[q] & fin:
            continue
        rq = reach[q]
        if all(
            any((rq >> u) & 1 and (reach[v] >> q) & 1 for u, v in by_letter[x])
            for x in range(k)):
            return Certificate(True)
    w = shortest_in_difference(sigma_star_dfa(a.alphabet), down_closure(a), budget)
    return Certificate(False, w)
