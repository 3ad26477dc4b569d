"""Automaton core: alphabets, words, NFA/DFA types, and the standard
constructions everything else is built from.

Conventions used throughout the package:

- NFAs have no epsilon transitions and may have several initial states.
- DFAs are partial (missing edges reject) with a single initial state.
- `minimize` output is canonical: reachable states only, dead states
  stripped, renumbered in BFS discovery order from the initial state with
  symbols scanned in index order.  Equal languages give equal tables, so
  equivalence checks reduce to structural equality.
- The empty language has a one-state DFA with no transitions and no finals.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Mapping

from .errors import BudgetExceededError, InputError
from . import kernels

DEFAULT_BUDGET = 1 << 20

StateSet = frozenset


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet; letters are referred to by index, printed by name."""

    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.symbols) == 0:
            raise InputError("alphabet must have at least one symbol")
        seen = set()
        for s in self.symbols:
            if not isinstance(s, str) or not s or any(c.isspace() for c in s) or "#" in s:
                raise InputError(f"bad symbol name {s!r}")
            if s in seen:
                raise InputError(f"duplicate symbol name {s!r}")
            seen.add(s)

    @property
    def k(self):
        return len(self.symbols)

    def index(self, name):
        try:
            return self.symbols.index(name)
        except ValueError:
            raise InputError(f"symbol {name!r} not in alphabet") from None

    def word(self, *names):
        """Word from symbol names: ab.word("a", "b", "a")."""
        return Word(self, tuple(self.index(s) for s in names))

    def word_of(self, indices):
        return Word(self, tuple(indices))


def auto_alphabet(k, prefix="a"):
    """Alphabet with symbols prefix1..prefixk (the witness-family default)."""
    if k < 1:
        raise InputError("alphabet size must be at least 1")
    return Alphabet(tuple(f"{prefix}{i}" for i in range(1, k + 1)))


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        k = self.alphabet.k
        for a in self.letters:
            if not isinstance(a, int) or not 0 <= a < k:
                raise InputError(f"letter index {a!r} out of range for alphabet of size {k}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise InputError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __mul__(self, times):
        return Word(self.alphabet, self.letters * times)

    __rmul__ = __mul__

    def names(self):
        return tuple(self.alphabet.symbols[a] for a in self.letters)

    def count(self, letter_index):
        return self.letters.count(letter_index)

    def __str__(self):
        return " ".join(self.names()) if self.letters else "ε"


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free NFA.  States are 0..n-1; transitions are (p, a, q)
    triples with a a letter index; any number of initial states."""

    alphabet: Alphabet
    n: int
    transitions: frozenset
    initial: frozenset
    final: frozenset

    def __post_init__(self):
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        if self.n < 0:
            raise InputError("state count must be nonnegative")
        k = self.alphabet.k
        for p, a, q in self.transitions:
            if not (0 <= p < self.n and 0 <= q < self.n):
                raise InputError(f"transition ({p},{a},{q}) uses a state out of range")
            if not 0 <= a < k:
                raise InputError(f"transition ({p},{a},{q}) uses a letter out of range")
        for s in self.initial | self.final:
            if not 0 <= s < self.n:
                raise InputError(f"state {s} out of range")

    @property
    def k(self):
        return self.alphabet.k

    def succ_masks(self):
        """Flat n*k table of successor bitmasks (kernel input form)."""
        succ = [0] * (self.n * self.k)
        k = self.k
        for p, a, q in self.transitions:
            succ[p * k + a] |= 1 << q
        return succ

    def init_mask(self):
        m = 0
        for q in self.initial:
            m |= 1 << q
        return m

    def final_mask(self):
        m = 0
        for q in self.final:
            m |= 1 << q
        return m

    def transitions_sorted(self):
        return sorted(self.transitions)


class Dfa:
    """Partial DFA backed by a flat transition array (n*k, -1 = missing)."""

    __slots__ = ("alphabet", "n", "initial", "final", "_delta")

    def __init__(self, alphabet, n, delta, initial=0, final=()):
        if n < 1:
            raise InputError("a DFA needs at least one state")
        k = alphabet.k
        if isinstance(delta, Mapping):
            flat = [-1] * (n * k)
            for (q, a), t in delta.items():
                if not (0 <= q < n and 0 <= a < k):
                    raise InputError(f"transition key ({q},{a}) out of range")
                flat[q * k + a] = t
        else:
            flat = list(delta)
            if len(flat) != n * k:
                raise InputError(f"flat delta must have n*k = {n * k} entries, got {len(flat)}")
        for t in flat:
            if t != -1 and not 0 <= t < n:
                raise InputError(f"transition target {t} out of range")
        if not 0 <= initial < n:
            raise InputError(f"initial state {initial} out of range")
        final = frozenset(final)
        for q in final:
            if not 0 <= q < n:
                raise InputError(f"final state {q} out of range")
        self.alphabet = alphabet
        self.n = n
        self.initial = initial
        self.final = final
        self._delta = array("i", flat)

    @property
    def k(self):
        return self.alphabet.k

    def delta(self, q, a):
        """Target of (q, a), or None when the edge is missing."""
        if not (0 <= q < self.n and 0 <= a < self.k):
            raise InputError(f"({q},{a}) out of range")
        t = self._delta[q * self.k + a]
        return None if t < 0 else t

    def delta_flat(self):
        """The backing flat table (do not mutate)."""
        return self._delta

    def transitions(self):
        """Iterate (p, a, q) in (p, a) order."""
        k = self.k
        for i, t in enumerate(self._delta):
            if t >= 0:
                yield (i // k, i % k, t)

    def num_transitions(self):
        return sum(1 for t in self._delta if t >= 0)

    def is_complete(self):
        return all(t >= 0 for t in self._delta)

    def to_nfa(self):
        return Nfa(self.alphabet, self.n, frozenset(self.transitions()),
                   frozenset([self.initial]), self.final)

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.n == other.n
                and self.initial == other.initial and self.final == other.final
                and self._delta == other._delta)

    def __hash__(self):
        return hash((self.alphabet, self.n, self.initial, self.final, self._delta.tobytes()))

    def __repr__(self):
        return (f"Dfa(n={self.n}, k={self.k}, initial={self.initial}, "
                f"final={sorted(self.final)}, transitions={self.num_transitions()})")


def as_nfa(a):
    if isinstance(a, Nfa):
        return a
    if isinstance(a, Dfa):
        return a.to_nfa()
    raise InputError(f"expected an automaton, got {type(a).__name__}")


def empty_language_dfa(alphabet):
    return Dfa(alphabet, 1, {}, 0, ())


def sigma_star_dfa(alphabet):
    return Dfa(alphabet, 1, {(0, a): 0 for a in range(alphabet.k)}, 0, {0})


def dfa_from_words(alphabet, words):
    """Trie DFA of a finite word list (exact language, not minimal)."""
    delta = {}
    final = set()
    count = 1
    for w in words:
        letters = w.letters if isinstance(w, Word) else tuple(w)
        q = 0
        for a in letters:
            t = delta.get((q, a))
            if t is None:
                t = count
                count += 1
                delta[(q, a)] = t
            q = t
        final.add(q)
    return Dfa(alphabet, count, delta, 0, final)


def accepts(a, w):
    """Membership test; w may be a Word or a sequence of letter indices."""
    letters = w.letters if isinstance(w, Word) else tuple(w)
    if isinstance(w, Word) and w.alphabet != a.alphabet:
        raise InputError("word and automaton alphabets differ")
    if isinstance(a, Dfa):
        q = a.initial
        for x in letters:
            q = a._delta[q * a.k + x]
            if q < 0:
                return False
        return q in a.final
    a = as_nfa(a)
    succ = a.succ_masks()
    k = a.k
    cur = a.init_mask()
    for x in letters:
        nxt = 0
        m = cur
        while m:
            low = m & -m
            nxt |= succ[(low.bit_length() - 1) * k + x]
            m ^= low
        cur = nxt
        if not cur:
            return False
    return bool(cur & a.final_mask())


def determinize(a, budget=DEFAULT_BUDGET):
    """Subset construction; result states are reachable subsets in BFS order."""
    return determinize_subsets(a, budget)[0]


def determinize_subsets(a, budget=DEFAULT_BUDGET):
    """Like determinize, but also returns the subset behind each DFA state."""
    a = as_nfa(a)
    init = a.init_mask()
    if init == 0:
        return empty_language_dfa(a.alphabet), (frozenset(),)
    delta, subsets = kernels.subset_construction(a.n, a.k, a.succ_masks(), init, budget)
    fmask = a.final_mask()
    final = [i for i, s in enumerate(subsets) if s & fmask]
    dfa = Dfa(a.alphabet, len(subsets), delta, 0, final)
    sets = tuple(frozenset(_mask_bits(s)) for s in subsets)
    return dfa, sets


def _mask_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def minimize(d):
    """Canonical minimal partial DFA recognising the same language."""
    if not isinstance(d, Dfa):
        raise InputError("minimize expects a Dfa; use canonical_dfa for NFAs")
    n2, delta2, finals2 = kernels.dfa_minimize(d.n, d.k, d._delta, d.initial, sorted(d.final))
    return Dfa(d.alphabet, n2, delta2, 0, finals2)


def canonical_dfa(a, budget=DEFAULT_BUDGET):
    """Minimal canonical DFA of any automaton (determinize as needed)."""
    if isinstance(a, Dfa):
        return minimize(a)
    return minimize(determinize(a, budget))


def completed(d):
    """Complete DFA: add a rejecting sink for the missing edges (state n)."""
    if d.is_complete():
        return d
    k = d.k
    flat = [t if t >= 0 else d.n for t in d._delta]
    flat.extend([d.n] * k)
    return Dfa(d.alphabet, d.n + 1, flat, d.initial, d.final)


def complement(d):
    """Complement over the same alphabet (completes, then flips finals)."""
    c = completed(d)
    return Dfa(c.alphabet, c.n, c._delta, c.initial,
               frozenset(range(c.n)) - c.final)


def intersect(d1, d2):
    """Product DFA of the reachable pairs (partial: both edges must exist)."""
    if d1.alphabet != d2.alphabet:
        raise InputError("intersect needs a common alphabet")
    k = d1.k
    idx = {(d1.initial, d2.initial): 0}
    order = [(d1.initial, d2.initial)]
    delta = {}
    pos = 0
    while pos < len(order):
        p, q = order[pos]
        for a in range(k):
            t1 = d1._delta[p * k + a]
            if t1 < 0:
                continue
            t2 = d2._delta[q * k + a]
            if t2 < 0:
                continue
            t = (t1, t2)
            j = idx.get(t)
            if j is None:
                j = len(order)
                idx[t] = j
                order.append(t)
            delta[(pos, a)] = j
        pos += 1
    final = [i for i, (p, q) in enumerate(order) if p in d1.final and q in d2.final]
    return Dfa(d1.alphabet, len(order), delta, 0, final)


def equivalent(a, b, budget=DEFAULT_BUDGET):
    """Language equality via canonical forms."""
    if a.alphabet != b.alphabet:
        raise InputError("equivalence needs a common alphabet")
    return canonical_dfa(a, budget) == canonical_dfa(b, budget)


def trim(a):
    """Restrict an NFA to useful states (reachable and co-reachable).

    Kept states are renumbered in ascending original order.  An automaton
    with empty language trims to zero states.
    """
    a = as_nfa(a)
    fwd = {}
    bwd = {}
    for p, x, q in a.transitions:
        fwd.setdefault(p, []).append(q)
        bwd.setdefault(q, []).append(p)
    reach = set(a.initial)
    stack = list(a.initial)
    while stack:
        p = stack.pop()
        for q in fwd.get(p, ()):
            if q not in reach:
                reach.add(q)
                stack.append(q)
    co = set(a.final)
    stack = list(a.final)
    while stack:
        q = stack.pop()
        for p in bwd.get(q, ()):
            if p not in co:
                co.add(p)
                stack.append(p)
    keep = sorted(reach & co)
    remap = {q: i for i, q in enumerate(keep)}
    trans = frozenset((remap[p], x, remap[q]) for p, x, q in a.transitions
                      if p in remap and q in remap)
    return Nfa(a.alphabet, len(keep), trans,
               frozenset(remap[q] for q in a.initial if q in remap),
               frozenset(remap[q] for q in a.final if q in remap))


def is_unambiguous(a):
    """No word has two distinct accepting runs.

    DFAs are trivially unambiguous.  For NFAs this runs the self-product
    check: an off-diagonal pair that is reachable (from some initial pair)
    and co-reachable (to some final pair) yields two distinct runs on one
    word, and conversely.
    """
    if isinstance(a, Dfa):
        return True
    b = trim(a)
    if b.n == 0:
        return True
    succ = {}
    for p, x, q in b.transitions:
        succ.setdefault((p, x), []).append(q)
    k = b.k
    start = {(p, q) for p in b.initial for q in b.initial}
    seen = set(start)
    stack = list(start)
    redges = {}
    while stack:
        p, q = stack.pop()
        for x in range(k):
            for p2 in succ.get((p, x), ()):
                for q2 in succ.get((q, x), ()):
                    t = (p2, q2)
                    redges.setdefault(t, set()).add((p, q))
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
    goal = {(p, q) for p in b.final for q in b.final}
    co = {t for t in goal if t in seen}
    stack = list(co)
    while stack:
        t = stack.pop()
        for s in redges.get(t, ()):
            if s not in co:
                co.add(s)
                stack.append(s)
    return all(p == q for p, q in co)


def enumerate_upto(a, maxlen, budget=DEFAULT_BUDGET):
    """All accepted words of length at most maxlen, in length-lex order."""
    a = as_nfa(a)
    succ = a.succ_masks()
    k = a.k
    fmask = a.final_mask()
    out = []
    frontier = [((), a.init_mask())]
    if frontier[0][1] & fmask:
        out.append(Word(a.alphabet, ()))
    visited = 1
    for _ in range(maxlen):
        nxt = []
        for letters, mask in frontier:
            for x in range(k):
                t = 0
                m = mask
                while m:
                    low = m & -m
                    t |= succ[(low.bit_length() - 1) * k + x]
                    m ^= low
                if not t:
                    continue
                visited += 1
                if visited > budget:
                    raise BudgetExceededError("enumeration nodes", budget)
                w = letters + (x,)
                nxt.append((w, t))
                if t & fmask:
                    out.append(Word(a.alphabet, w))
        frontier = nxt
        if not frontier:
            break
    return out


def map_symbols(a, target, index_map):
    """Relabel letters through an injective index map into another alphabet.

    Useful for comparing automata over a sub-alphabet with automata over a
    larger one (the language is carried letter-for-letter).
    """
    amap = dict(index_map)
    if len(set(amap.values())) != len(amap):
        raise InputError("symbol map must be injective")
    for src, dst in amap.items():
        if not 0 <= src < a.alphabet.k:
            raise InputError(f"source letter {src} out of range")
        if not 0 <= dst < target.k:
            raise InputError(f"target letter {dst} out of range")
    if isinstance(a, Dfa):
        delta = {}
        for p, x, q in a.transitions():
            if x not in amap:
                raise InputError(f"letter {x} used but not mapped")
            delta[(p, amap[x])] = q
        return Dfa(target, a.n, delta, a.initial, a.final)
    b = as_nfa(a)
    trans = set()
    for p, x, q in b.transitions:
        if x not in amap:
            raise InputError(f"letter {x} used but not mapped")
        trans.add((p, amap[x], q))
    return Nfa(target, b.n, frozenset(trans), b.initial, b.final)
