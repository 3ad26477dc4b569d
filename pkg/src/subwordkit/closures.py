"""Closure operators over the subword order.

The upward closure of L is every word containing some member of L as a
scattered subword; the downward closure is every subword of a member.  Both
are regular for any L and are produced here as epsilon-free NFAs on the same
state set, plus a canonical minimal DFA entry point with a fast path for
finite languages (where the generic powerset route can be exponentially
larger than the minimal DFA it eventually shrinks to).
"""

from __future__ import annotations

from .core import (DEFAULT_BUDGET, Dfa, Nfa, Word, as_nfa, determinize,
                   empty_language_dfa, minimize, trim)
from .errors import InputError
from .subwords import minimal_words
from . import kernels

# Cone fast-path limits: beyond these the generic route is used.
CONE_WORD_CAP = 64
CONE_SUFFIX_CAP = 2048
_CONE_STEP_CAP = 50_000


def up_closure(a):
    """NFA for all superwords: a self-loop on every letter at every state
    lets the run skip the inserted letters."""
    a = as_nfa(a)
    loops = {(q, x, q) for q in range(a.n) for x in range(a.k)}
    return Nfa(a.alphabet, a.n, a.transitions | loops, a.initial, a.final)


def down_closure(a):
    """NFA for all subwords, without epsilon transitions.

    Deleted letters are simulated by saturation: p steps to q on x whenever
    some p' with a silent path p ->* p' has an x-edge to q, and a state is
    final when it can silently reach an original final state.
    """
    a = as_nfa(a)
    fwd = {}
    for p, x, q in a.transitions:
        fwd.setdefault(p, set()).add(q)
    reach = {}
    for s in range(a.n):
        seen = {s}
        stack = [s]
        while stack:
            p = stack.pop()
            for q in fwd.get(p, ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        reach[s] = seen
    trans = set()
    for p, x, q in a.transitions:
        for s in range(a.n):
            if p in reach[s]:
                trans.add((s, x, q))
    final = frozenset(s for s in range(a.n) if reach[s] & a.final)
    return Nfa(a.alphabet, a.n, frozenset(trans), a.initial, final)


def closure_dfa(a, direction, budget=DEFAULT_BUDGET):
    """Canonical minimal DFA of the chosen closure.

    Equal to minimize(determinize(<closure NFA>)) in all cases.  For upward
    closures of small finite languages the minimal DFA is built directly as
    antichains of pending suffixes, which avoids materialising the powerset
    (the generic route can need far more subsets than the answer has states).
    """
    if direction not in ("up", "down"):
        raise InputError(f"direction must be 'up' or 'down', got {direction!r}")
    a = as_nfa(a)
    if direction == "up":
        words = _finite_language(a)
        if words is not None:
            return _cone_dfa(a.alphabet, words, budget)
        return minimize(determinize(up_closure(a), budget))
    return minimize(determinize(down_closure(a), budget))


def _finite_language(a):
    """The full word list when `a` is acyclic and small, else None."""
    t = trim(a)
    if t.n == 0:
        return []
    succ = {}
    for p, x, q in t.transitions:
        succ.setdefault(p, []).append((x, q))
    # cycle check (iterative three-colour DFS)
    color = [0] * t.n
    for root in range(t.n):
        if color[root]:
            continue
        stack = [(root, 0)]
        color[root] = 1
        while stack:
            p, i = stack[-1]
            edges = succ.get(p, ())
            if i == len(edges):
                color[p] = 2
                stack.pop()
                continue
            stack[-1] = (p, i + 1)
            q = edges[i][1]
            if color[q] == 1:
                return None
            if color[q] == 0:
                color[q] = 1
                stack.append((q, 0))
    words = set()
    steps = 0
    stack = [(q, ()) for q in sorted(t.initial)]
    while stack:
        q, path = stack.pop()
        steps += 1
        if steps > _CONE_STEP_CAP:
            return None
        if q in t.final:
            words.add(path)
            if len(words) > CONE_WORD_CAP:
                return None
        for x, r in succ.get(q, ()):
            stack.append((r, path + (x,)))
    if sum(len(w) + 1 for w in words) > CONE_SUFFIX_CAP:
        return None
    return [Word(t.alphabet, w) for w in sorted(words)]


def _cone_dfa(alphabet, words, budget):
    """Minimal DFA of the upward closure of a finite word list.

    States of the closure's minimal DFA correspond to antichains of the
    yet-unmatched suffixes of the generating words, keyed by suffix content;
    the kernel explores them in BFS order, so the result needs no minimize
    pass (asserted against the generic route in the tests).
    """
    gens = minimal_words(words)
    if not gens:
        return empty_language_dfa(alphabet)
    k = alphabet.k
    sid = {}
    for w in gens:
        for i in range(len(w.letters) + 1):
            s = w.letters[i:]
            if s not in sid:
                sid[s] = len(sid)
    num = len(sid)
    by_id = [None] * num
    for s, i in sid.items():
        by_id[i] = s
    nxt = [0] * (num * k)
    for s, i in sid.items():
        for x in range(k):
            nxt[i * k + x] = sid[s[1:]] if s and s[0] == x else i
    dom = [0] * num
    for i, s in enumerate(by_id):
        for j, v in enumerate(by_id):
            if i != j and v != s and kernels.is_subword(v, s):
                dom[i] |= 1 << j
    start = [sid[w.letters] for w in gens]
    n, delta, finals = kernels.cone_closure(num, k, nxt, sid[()], dom, start, budget)
    return Dfa(alphabet, n, delta, 0, finals)
