"""Upward and downward interiors of regular languages.

The interior of L in a direction is the largest closed subset of L:

    up_interior(L)   = largest upward-closed subset  = Σ*∖↓(Σ*∖L)
    down_interior(L) = largest downward-closed subset = Σ*∖↑(Σ*∖L)

Both a duality pipeline (complement, opposite closure, complement) and a
direct antichain construction are provided, and they must agree.

The antichain construction generalises to preimages of substitutions.  A
substitution maps a word x = b_1 ... b_m over a target alphabet to the
language K_0 K_{b_1} ... K_{b_m}; the preimage automaton recognises
{x | sigma(x) ⊆ L}.  Its states are inclusion-minimal antichains of
powerset states, which is what keeps the construction finite: the number
of antichains over an n-element universe is the Dedekind-style count
psi(n) that dedekind_count computes, so any interior DFA has fewer than
psi(n) states.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, InputError
from .core import (
    Alphabet,
    Dfa,
    Nfa,
    StateSet,
    as_nfa,
    complement,
    determinize,
    minimize,
    DEFAULT_BUDGET,
)
from .closures import closure_dfa

DEFAULT_ANTICHAIN_BUDGET = 1 << 16


@dataclass(frozen=True)
class AntichainFamily:
    """Family of pairwise inclusion-incomparable subsets of {0..universe-1}.

    Members are kept in canonical order: by size, then by sorted member
    list.  The empty family is allowed (it is the vacuously-accepting
    state of the interior automaton).
    """

    universe: int
    members: tuple

    def __post_init__(self):
        members = tuple(StateSet(m) for m in self.members)
        object.__setattr__(self, "members", members)
        if self.universe < 0:
            raise InputError("universe size must be nonnegative")
        for m in members:
            for q in m:
                if not 0 <= q < self.universe:
                    raise InputError(f"antichain member uses state {q} outside the universe")
        for i, m in enumerate(members):
            for j, other in enumerate(members):
                if i != j and m <= other:
                    raise InputError("antichain members must be pairwise incomparable")
        if list(members) != sorted(members, key=_set_key):
            raise InputError("antichain members must be in canonical order")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _set_key(s):
    return (len(s), tuple(sorted(s)))


def antichain_reduce(family, universe):
    """Inclusion-minimal members of a family of sets, canonically ordered."""
    sets = {StateSet(s) for s in family}
    keep = [s for s in sets if not any(t < s for t in sets)]
    keep.sort(key=_set_key)
    return AntichainFamily(universe, tuple(keep))


@dataclass(frozen=True)
class SubstitutionSpec:
    """A substitution given by automata: sigma(b_1...b_m) = K_0 K_1 ... K_m.

    gamma is the target alphabet; k0 recognises sigma(epsilon) and ks[i]
    recognises the language substituted for the i-th target letter.  All
    the K automata share one source alphabet.
    """

    gamma: Alphabet
    k0: Nfa
    ks: tuple

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        if len(self.ks) != self.gamma.k:
            raise InputError("need one substituted language per target letter")
        for m in self.ks:
            if m.alphabet != self.k0.alphabet:
                raise InputError("all substituted languages must share the source alphabet")

    @property
    def source(self):
        return self.k0.alphabet


def _sigma_star_nfa(alphabet):
    k = alphabet.k
    return Nfa(alphabet, 1, {(0, a, 0) for a in range(k)}, {0}, {0})


def _contains_letter_nfa(alphabet, i):
    # Sigma* b_i Sigma*
    k = alphabet.k
    trans = {(0, a, 0) for a in range(k)} | {(1, a, 1) for a in range(k)} | {(0, i, 1)}
    return Nfa(alphabet, 2, trans, {0}, {1})


def _epsilon_nfa(alphabet):
    return Nfa(alphabet, 1, (), {0}, {0})


def _letter_or_epsilon_nfa(alphabet, i):
    return Nfa(alphabet, 2, {(0, i, 1)}, {0}, {0, 1})


def _letter_nfa(alphabet, i):
    return Nfa(alphabet, 2, {(0, i, 1)}, {0}, {1})


def up_interior_spec(alphabet):
    """sigma(x) = all superwords of x: K_0 = Σ*, K_i = Σ* b_i Σ*."""
    return SubstitutionSpec(alphabet, _sigma_star_nfa(alphabet),
                            tuple(_contains_letter_nfa(alphabet, i) for i in range(alphabet.k)))


def down_interior_spec(alphabet):
    """sigma(x) = all subwords of x: K_0 = {ε}, K_i = {b_i, ε}."""
    return SubstitutionSpec(alphabet, _epsilon_nfa(alphabet),
                            tuple(_letter_or_epsilon_nfa(alphabet, i) for i in range(alphabet.k)))


def identity_substitution(alphabet):
    """sigma(x) = {x}: K_0 = {ε}, K_i = {b_i}."""
    return SubstitutionSpec(alphabet, _epsilon_nfa(alphabet),
                            tuple(_letter_nfa(alphabet, i) for i in range(alphabet.k)))


def substitution_preimage(a, spec, budget=DEFAULT_ANTICHAIN_BUDGET, minimized=True):
    """DFA over spec.gamma recognising {x | sigma(x) ⊆ L(a)}.

    States are antichains of powerset states of `a`.  A state accepts when
    every member subset is accepting, so the empty antichain (no
    constraint on the word read so far) accepts everything, and any
    antichain containing the empty subset (a substituted word left no run
    alive) is the rejecting sink {∅}.  The per-letter reach sets
    {delta2(S, z) | z ∈ K_j} are computed by exploring the product of the
    powerset automaton with K_j, memoised per (S, j).
    """
    a = as_nfa(a)
    if a.alphabet != spec.source:
        raise InputError("automaton is not over the substitution's source alphabet")
    k = a.k
    succ = a.succ_masks()
    fmask = a.final_mask()

    step_memo = {}

    def step2(mask, x):
        key = mask * k + x
        t = step_memo.get(key)
        if t is None:
            t = 0
            m = mask
            while m:
                low = m & -m
                t |= succ[(low.bit_length() - 1) * k + x]
                m ^= low
            step_memo[key] = t
        return t

    ks_all = (spec.k0,) + spec.ks
    k_tables = [(m.succ_masks(), m.init_mask(), m.final_mask()) for m in ks_all]

    reach_memo = {}

    def reach(mask, j):
        """All powerset states delta2(mask, z) with z accepted by K_j."""
        key = (mask, j)
        out = reach_memo.get(key)
        if out is not None:
            return out
        ksucc, kinit, kfin = k_tables[j]
        collected = set()
        if kinit & kfin:
            collected.add(mask)
        seen = {(mask, kinit)}
        stack = [(mask, kinit)]
        while stack:
            am, km = stack.pop()
            for x in range(k):
                km2 = 0
                m = km
                while m:
                    low = m & -m
                    km2 |= ksucc[(low.bit_length() - 1) * k + x]
                    m ^= low
                if not km2:
                    continue
                pair = (step2(am, x), km2)
                if pair not in seen:
                    seen.add(pair)
                    stack.append(pair)
                    if km2 & kfin:
                        collected.add(pair[0])
        out = frozenset(collected)
        reach_memo[key] = out
        return out

    def reduce_masks(masks):
        ms = set(masks)
        keep = [m for m in ms
                if not any(o != m and o & m == o for o in ms)]
        keep.sort(key=lambda m: (bin(m).count("1"), tuple(_bits(m))))
        return tuple(keep)

    start = reduce_masks(reach(a.init_mask(), 0))
    idx = {start: 0}
    order = [start]
    delta = {}
    pos = 0
    while pos < len(order):
        state = order[pos]
        for j in range(spec.gamma.k):
            masks = set()
            for m in state:
                masks |= reach(m, j + 1)
            target = reduce_masks(masks)
            t = idx.get(target)
            if t is None:
                if len(order) >= budget:
                    raise BudgetExceededError("interior antichain states", budget)
                t = len(order)
                idx[target] = t
                order.append(target)
            delta[(pos, j)] = t
        pos += 1
    final = [i for i, st in enumerate(order) if all(m & fmask for m in st)]
    dfa = Dfa(spec.gamma, len(order), delta, 0, final)
    return minimize(dfa) if minimized else dfa


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def up_interior(a, method="antichain", budget=None):
    """Minimal DFA of the largest upward-closed subset of L(a)."""
    return _interior(a, "up", method, budget)


def down_interior(a, method="antichain", budget=None):
    """Minimal DFA of the largest downward-closed subset of L(a)."""
    return _interior(a, "down", method, budget)


def _interior(a, direction, method, budget):
    a = as_nfa(a)
    if method == "duality":
        b = DEFAULT_BUDGET if budget is None else budget
        comp = complement(determinize(a, b))
        closed = closure_dfa(comp, "down" if direction == "up" else "up", b)
        return minimize(complement(closed))
    if method == "antichain":
        b = DEFAULT_ANTICHAIN_BUDGET if budget is None else budget
        spec = up_interior_spec(a.alphabet) if direction == "up" else down_interior_spec(a.alphabet)
        return substitution_preimage(a, spec, b)
    raise InputError(f"unknown interior method {method!r} (want duality or antichain)")


def dedekind_count(n):
    """Number of antichains over the subsets of an n-element set (n <= 6).

    Counts the empty antichain, matching the sequence 2, 3, 6, 20, 168,
    7581, 7828354.  Brute force over the 2^(2^n) candidate families is
    avoided by branching on one lattice element at a time: an element is
    either excluded, or included and everything comparable to it excluded.
    """
    if not isinstance(n, int) or not 0 <= n <= 6:
        raise InputError("dedekind_count supports 0 <= n <= 6")
    size = 1 << n
    comparable = []
    for e in range(size):
        m = 0
        for f in range(size):
            inter = e & f
            if inter == e or inter == f:
                m |= 1 << f
        comparable.append(m)
    # Branch on extremal elements first: they are comparable to the most
    # others, so the inclusion branch prunes hardest.
    pick_order = sorted(range(size), key=lambda e: -bin(comparable[e]).count("1"))
    memo = {}

    def count(avail):
        if avail == 0:
            return 1
        cached = memo.get(avail)
        if cached is not None:
            return cached
        for e in pick_order:
            if avail >> e & 1:
                break
        r = count(avail & ~(1 << e)) + count(avail & ~comparable[e])
        memo[avail] = r
        return r

    return count((1 << size) - 1)
