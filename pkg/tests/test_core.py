import random

import pytest

from subwordkit import (
    Alphabet, BudgetExceededError, Dfa, InputError, Nfa, Word, accepts, as_nfa,
    auto_alphabet, canonical_dfa, complement, completed, determinize,
    determinize_subsets, dfa_from_words, empty_language_dfa, enumerate_upto,
    equivalent, intersect, is_unambiguous, map_symbols, minimize,
    sigma_star_dfa, trim,
)
from subwordkit.experiments import random_dfa, random_nfa

from oracles import (
    accepts_naive, all_words, count_accepting_runs, language_upto,
    minimal_dfa_size,
)


def test_alphabet_basics():
    ab = Alphabet(("a", "b", "c"))
    assert ab.k == 3
    assert ab.index("b") == 1
    assert ab.word("a", "c").letters == (0, 2)
    assert ab.word_of((2, 0)).names() == ("c", "a")


def test_alphabet_rejects_duplicates_and_unknowns():
    with pytest.raises(InputError):
        Alphabet(("a", "a"))
    with pytest.raises(InputError):
        Alphabet(("a", "b")).index("c")


def test_auto_alphabet_names():
    assert auto_alphabet(3).symbols == ("a1", "a2", "a3")
    assert auto_alphabet(2, prefix="x").symbols == ("x1", "x2")


def test_word_operations():
    ab = auto_alphabet(2)
    w = Word(ab, (0, 1, 0))
    assert len(w) == 3
    assert list(w) == [0, 1, 0]
    assert (w + Word(ab, (1,))).letters == (0, 1, 0, 1)
    assert (w * 2).letters == (0, 1, 0, 0, 1, 0)
    assert w.count(0) == 2
    assert str(w) == "a1 a2 a1"
    assert str(Word(ab, ())) == "ε"


def test_word_validation():
    ab = auto_alphabet(2)
    with pytest.raises(InputError):
        Word(ab, (0, 2))
    with pytest.raises(InputError):
        Word(ab, (-1,))


def test_nfa_validation():
    ab = auto_alphabet(2)
    with pytest.raises(InputError):
        Nfa(ab, 2, {(0, 0, 2)}, {0}, {1})
    with pytest.raises(InputError):
        Nfa(ab, 2, {(0, 2, 1)}, {0}, {1})
    with pytest.raises(InputError):
        Nfa(ab, 1, set(), {1}, set())


def test_dfa_construction_mapping_and_flat():
    ab = auto_alphabet(2)
    d1 = Dfa(ab, 2, {(0, 0): 1, (1, 1): 0}, 0, (1,))
    d2 = Dfa(ab, 2, [1, -1, -1, 0], 0, (1,))
    assert d1 == d2
    assert hash(d1) == hash(d2)
    assert d1.delta(0, 0) == 1
    assert d1.delta(0, 1) is None
    assert list(d1.transitions()) == [(0, 0, 1), (1, 1, 0)]
    assert d1.num_transitions() == 2
    assert not d1.is_complete()


def test_dfa_validation():
    ab = auto_alphabet(2)
    with pytest.raises(InputError):
        Dfa(ab, 0, {}, 0, ())
    with pytest.raises(InputError):
        Dfa(ab, 2, {(0, 0): 2}, 0, ())
    with pytest.raises(InputError):
        Dfa(ab, 2, {}, 2, ())
    with pytest.raises(InputError):
        Dfa(ab, 2, [0], 0, ())


def test_as_nfa_passthrough_and_conversion():
    ab = auto_alphabet(2)
    d = Dfa(ab, 2, {(0, 0): 1}, 0, (1,))
    a = as_nfa(d)
    assert isinstance(a, Nfa)
    assert a.initial == frozenset([0])
    assert a.transitions == frozenset([(0, 0, 1)])
    assert as_nfa(a) is a


def test_sigma_star_and_empty_language():
    ab = auto_alphabet(2)
    full = sigma_star_dfa(ab)
    assert full.n == 1 and full.is_complete() and 0 in full.final
    none = empty_language_dfa(ab)
    assert none.n == 1 and not none.final
    assert accepts(full, Word(ab, (0, 1))) and not accepts(none, Word(ab, ()))


def test_dfa_from_words_accepts_exactly_the_given_words():
    ab = auto_alphabet(2)
    words = [Word(ab, t) for t in [(), (0, 1), (0, 0, 1), (1,)]]
    d = dfa_from_words(ab, words)
    want = {t.letters for t in words}
    got = {w.letters for w in all_words(ab, 4) if accepts(d, w)}
    assert got == want


def test_accepts_matches_naive_simulation():
    rng = random.Random(11)
    for _ in range(150):
        a = random_nfa(rng, rng.randint(1, 6), 2)
        for w in all_words(a.alphabet, 3):
            assert accepts(a, w) == accepts_naive(a, w)


def test_determinize_preserves_language():
    rng = random.Random(12)
    for _ in range(80):
        a = random_nfa(rng, rng.randint(1, 5), 2)
        d = determinize(a)
        for w in all_words(a.alphabet, 4):
            assert accepts(d, w) == accepts_naive(a, w)


def test_determinize_subsets_labels_are_consistent():
    rng = random.Random(13)
    for _ in range(40):
        a = random_nfa(rng, rng.randint(1, 5), 2)
        d, subsets = determinize_subsets(a)
        assert len(subsets) == d.n
        assert subsets[d.initial] == frozenset(a.initial)
        for q in range(d.n):
            assert (q in d.final) == bool(subsets[q] & a.final)
            for x in range(a.k):
                t = d.delta(q, x)
                moved = frozenset(r for p, y, r in a.transitions
                                  if y == x and p in subsets[q])
                if t is None:
                    assert not moved
                else:
                    assert subsets[t] == moved


def test_determinize_budget():
    # the down-closure NFA of D(9) needs 2^9 = 512 subsets
    from subwordkit import down_closure, gen_family
    a = down_closure(gen_family("D", 9))
    with pytest.raises(BudgetExceededError):
        determinize(a, budget=500)
    assert determinize(a, budget=2048).n >= 512


def test_minimize_size_matches_moore_oracle():
    rng = random.Random(14)
    for _ in range(250):
        d = random_dfa(rng, rng.randint(1, 9), rng.randint(1, 3))
        assert minimize(d).n == minimal_dfa_size(d)


def test_minimize_preserves_language():
    rng = random.Random(15)
    for _ in range(100):
        d = random_dfa(rng, rng.randint(1, 8), 2)
        m = minimize(d)
        for w in all_words(d.alphabet, 4):
            assert accepts(m, w) == accepts(d, w)


def test_minimize_is_canonical_under_state_permutation():
    rng = random.Random(16)
    for _ in range(60):
        d = random_dfa(rng, rng.randint(2, 7), 2)
        perm = list(range(d.n))
        rng.shuffle(perm)
        delta = {(perm[p], x): perm[q] for p, x, q in d.transitions()}
        shuffled = Dfa(d.alphabet, d.n, delta, perm[d.initial],
                       tuple(perm[q] for q in d.final))
        assert minimize(d) == minimize(shuffled)


def test_minimize_idempotent():
    rng = random.Random(17)
    for _ in range(60):
        d = random_dfa(rng, rng.randint(1, 7), 2)
        m = minimize(d)
        assert minimize(m) == m


def test_minimize_empty_language_convention():
    ab = auto_alphabet(2)
    d = Dfa(ab, 3, {(0, 0): 1, (1, 1): 2}, 0, ())
    m = minimize(d)
    assert m.n == 1 and not m.final and m.num_transitions() == 0


def test_canonical_dfa_equals_minimize_of_determinize():
    rng = random.Random(18)
    for _ in range(60):
        a = random_nfa(rng, rng.randint(1, 5), 2)
        assert canonical_dfa(a) == minimize(determinize(a))


def test_completed_adds_sink_only_when_needed():
    ab = auto_alphabet(2)
    partial = Dfa(ab, 1, {(0, 0): 0}, 0, (0,))
    c = completed(partial)
    assert c.n == 2 and c.is_complete()
    full = sigma_star_dfa(ab)
    assert completed(full).n == full.n
    for w in all_words(ab, 3):
        assert accepts(c, w) == accepts(partial, w)


def test_complement_flips_membership():
    rng = random.Random(19)
    for _ in range(50):
        d = random_dfa(rng, rng.randint(1, 6), 2)
        c = complement(d)
        for w in all_words(d.alphabet, 3):
            assert accepts(c, w) != accepts(d, w)


def test_intersect_is_conjunction():
    rng = random.Random(20)
    for _ in range(50):
        d1 = random_dfa(rng, rng.randint(1, 5), 2)
        d2 = random_dfa(rng, rng.randint(1, 5), 2)
        p = intersect(d1, d2)
        for w in all_words(d1.alphabet, 3):
            assert accepts(p, w) == (accepts(d1, w) and accepts(d2, w))


def test_equivalent_on_constructed_pairs():
    from subwordkit import gen_family
    d = gen_family("D", 2)
    assert equivalent(d, minimize(d))
    assert equivalent(as_nfa(d), d)
    assert not equivalent(d, gen_family("E", 2))
    with pytest.raises(InputError):
        equivalent(d, gen_family("D", 3))


def test_equivalent_agrees_with_bounded_enumeration():
    # sound direction both ways on small instances where the bound suffices
    rng = random.Random(21)
    for _ in range(60):
        a = random_nfa(rng, rng.randint(1, 3), 2)
        b = random_nfa(rng, rng.randint(1, 3), 2)
        same = language_upto(a, 12) == language_upto(b, 12)
        if equivalent(a, b):
            assert same
        if not same:
            assert not equivalent(a, b)


def test_trim_keeps_only_useful_states():
    ab = auto_alphabet(2)
    # state 2 unreachable, state 3 a dead end
    a = Nfa(ab, 4, {(0, 0, 1), (2, 0, 1), (0, 1, 3)}, {0}, {1})
    t = trim(a)
    assert t.n == 2
    assert t.transitions == frozenset([(0, 0, 1)])
    for w in all_words(ab, 3):
        assert accepts(t, w) == accepts(a, w)


def test_trim_empty_language_gives_zero_states():
    ab = auto_alphabet(1)
    a = Nfa(ab, 2, {(0, 0, 0)}, {0}, {1})
    assert trim(a).n == 0


def test_is_unambiguous_known_cases():
    ab = auto_alphabet(1)
    # two initial states reaching the same final on "a": two runs
    amb = Nfa(ab, 3, {(0, 0, 2), (1, 0, 2)}, {0, 1}, {2})
    assert not is_unambiguous(amb)
    # same shape but only one initial
    assert is_unambiguous(Nfa(ab, 3, {(0, 0, 2), (1, 0, 2)}, {0}, {2}))
    assert is_unambiguous(sigma_star_dfa(auto_alphabet(2)))


def test_is_unambiguous_against_run_counting():
    rng = random.Random(22)
    for _ in range(120):
        a = random_nfa(rng, rng.randint(1, 4), 2)
        brute_ok = all(count_accepting_runs(a, w) <= 1
                       for w in all_words(a.alphabet, 5))
        if is_unambiguous(a):
            assert brute_ok
        if not brute_ok:
            assert not is_unambiguous(a)


def test_enumerate_upto_order_and_content():
    rng = random.Random(23)
    for _ in range(40):
        a = random_nfa(rng, rng.randint(1, 5), 2)
        out = enumerate_upto(a, 4)
        keys = [(len(w), w.letters) for w in out]
        assert keys == sorted(keys)
        assert {w.letters for w in out} == language_upto(a, 4)


def test_map_symbols_carries_language():
    src = auto_alphabet(2)
    dst = Alphabet(("x", "y", "z"))
    d = Dfa(src, 2, {(0, 0): 1, (1, 1): 1}, 0, (1,))
    m = map_symbols(d, dst, {0: 2, 1: 0})
    assert m.alphabet == dst
    assert accepts(m, dst.word("z", "x", "x"))
    assert not accepts(m, dst.word("y"))
    with pytest.raises(InputError):
        map_symbols(d, dst, {0: 1, 1: 1})
