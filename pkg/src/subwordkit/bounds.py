"""Lower-bound certificates: fooling sets and rank arguments.

A fooling set for L is a list of pairs (x_i, y_i) with every x_i y_i in L
and, for i != j, x_i y_j or x_j y_i outside L.  Any NFA for L needs at
least as many states as the fooling set has pairs.

For unambiguous NFAs the sharper bound comes from the rank of the 0/1
matrix M[i][j] = [x_i y_j in L]: a UFA needs at least rank(M) states, and
one more if no y_i is itself in L but the UFA's initial state is useful.
Ranks are computed exactly over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, VerificationError
from .core import Word, accepts, as_nfa


@dataclass(frozen=True)
class FoolingSet:
    """Candidate fooling set: a tuple of (x, y) word pairs over one alphabet."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((x, y) for x, y in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise InputError("a fooling set needs at least one pair")
        alphabet = pairs[0][0].alphabet
        for x, y in pairs:
            if not isinstance(x, Word) or not isinstance(y, Word):
                raise InputError("fooling set entries must be Word pairs")
            if x.alphabet != alphabet or y.alphabet != alphabet:
                raise InputError("all fooling set words must share one alphabet")
        if len(set(pairs)) != len(pairs):
            raise InputError("fooling set pairs must be distinct")

    @property
    def alphabet(self):
        return self.pairs[0][0].alphabet

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class FoolingMatrix:
    """Square 0/1 matrix of cross-memberships M[i][j] = [x_i y_j in L]."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        m = len(rows)
        for row in rows:
            if len(row) != m:
                raise InputError("fooling matrix must be square")
            for v in row:
                if v not in (0, 1):
                    raise InputError("fooling matrix entries must be 0 or 1")

    @property
    def m(self):
        return len(self.entries)


def subsets_in_order(k):
    """All subsets of range(k) ordered by size, then lexicographically."""
    out = []
    for size in range(k + 1):
        out.extend(frozenset(c) for c in combinations(range(k), size))
    return out


def verify_fooling(l, s):
    """Check the fooling-set conditions of s against automaton l.

    Returns len(s) on success, which is then a lower bound on the number
    of states of any NFA for L(l).  Raises VerificationError naming the
    offending pair otherwise.
    """
    a = as_nfa(l)
    if not isinstance(s, FoolingSet):
        s = FoolingSet(tuple(s))
    if s.alphabet != a.alphabet:
        raise VerificationError("fooling set alphabet does not match the automaton")
    pairs = s.pairs
    member = {}

    def cross(i, j):
        key = (i, j)
        v = member.get(key)
        if v is None:
            v = accepts(a, pairs[i][0] + pairs[j][1])
            member[key] = v
        return v

    for i in range(len(pairs)):
        if not cross(i, i):
            raise VerificationError(f"fooling pair ({i + 1},{i + 1}): x_i y_i is not in the language")
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if cross(i, j) and cross(j, i):
                raise VerificationError(
                    f"fooling pair ({i + 1},{j + 1}): both cross concatenations are in the language")
    return len(pairs)


def fooling_matrix(l, s):
    """Cross-membership matrix of a pair list against automaton l."""
    a = as_nfa(l)
    if not isinstance(s, FoolingSet):
        s = FoolingSet(tuple(s))
    if s.alphabet != a.alphabet:
        raise InputError("pair list alphabet does not match the automaton")
    rows = tuple(
        tuple(1 if accepts(a, x + y) else 0 for _, y in s.pairs)
        for x, _ in s.pairs)
    return FoolingMatrix(rows)


def rational_rank(matrix):
    """Rank of a FoolingMatrix (or any square 0/1 row table), exactly."""
    entries = matrix.entries if isinstance(matrix, FoolingMatrix) else tuple(matrix)
    rows = [[Fraction(v) for v in row] for row in entries]
    if not rows:
        return 0
    m = len(rows)
    cols = len(rows[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, m) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        for r in range(rank + 1, m):
            f = rows[r][col] * inv
            if f:
                rowr = rows[r]
                rowp = rows[rank]
                for c in range(col, cols):
                    rowr[c] -= f * rowp[c]
        rank += 1
        if rank == m:
            break
    return rank


def mx_matrix(n):
    """The 2^n x 2^n intersection matrix M_X[S][T] = [S ∩ T != ∅].

    Rows and columns are indexed by the subsets of an n-element set in
    canonical order (by size, then lexicographically).  Its rank is
    2^n - 1: the all-zero row for S = ∅ is the only defect.
    """
    if not isinstance(n, int) or not 1 <= n <= 6:
        raise InputError("mx_matrix supports 1 <= n <= 6")
    subsets = subsets_in_order(n)
    rows = tuple(
        tuple(1 if s & t else 0 for t in subsets)
        for s in subsets)
    return FoolingMatrix(rows)


def ufa_lower_bound(l, s, initial_excluded=False):
    """Rank lower bound on the size of any unambiguous NFA for L(l).

    The bound is rank(M) for M the cross-membership matrix of s.  With
    initial_excluded=True the bound is rank(M) + 1, which is only sound
    when no suffix y_i is itself in the language (so the initial state
    never doubles as a witness state); that side condition is checked.
    """
    a = as_nfa(l)
    if not isinstance(s, FoolingSet):
        s = FoolingSet(tuple(s))
    r = rational_rank(fooling_matrix(a, s))
    if not initial_excluded:
        return r
    for i, (_, y) in enumerate(s.pairs):
        if accepts(a, y):
            raise VerificationError(
                f"initial_excluded unsound: suffix y_{i + 1} is in the language")
    return r + 1
