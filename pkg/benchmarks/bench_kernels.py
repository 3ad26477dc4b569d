"""Compare the pure-Python kernels against the compiled twin.

Each kernel gets one representative workload; both backends see the exact
same flat inputs and must produce identical outputs (checked before the
numbers are printed, so a backend drift shows up here too).

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 5 --seed 1
"""

import argparse
import random
import time

from subwordkit import DEFAULT_BUDGET, down_closure, gen_family
from subwordkit import _kernels_py

try:
    from subwordkit import _kernels_c
except ImportError:
    _kernels_c = None


def bench(fn, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def workload_is_subword(rng):
    pairs = []
    for _ in range(2000):
        x = tuple(rng.randrange(4) for _ in range(rng.randint(10, 50)))
        y = tuple(rng.randrange(4) for _ in range(400))
        pairs.append((x, y))

    def run(mod):
        return sum(1 for x, y in pairs if mod.is_subword(x, y))

    return "is_subword", "2000 pairs, |y|=400, k=4", run


def workload_subset(rng):
    a = down_closure(gen_family("D", 14))
    succ = a.succ_masks()
    init = a.init_mask()

    def run(mod):
        delta, subsets = mod.subset_construction(a.n, a.k, succ, init, DEFAULT_BUDGET)
        return len(subsets), list(delta)

    return "subset_construction", "down-closure of D(14), 2^14 subsets", run


def workload_minimize(rng):
    a = down_closure(gen_family("D", 13))
    delta, subsets = _kernels_py.subset_construction(
        a.n, a.k, a.succ_masks(), a.init_mask(), DEFAULT_BUDGET)
    fmask = a.final_mask()
    finals = sorted(i for i, s in enumerate(subsets) if s & fmask)

    def run(mod):
        n2, d2, f2 = mod.dfa_minimize(len(subsets), a.k, delta, 0, finals)
        return n2, list(d2), list(f2)

    return "dfa_minimize", f"partial DFA, {len(subsets)} states, k={a.k}", run


def workload_cone(rng):
    # equal-length words are pairwise incomparable, keeping all generators
    k = 3
    words = sorted({tuple(rng.randrange(k) for _ in range(9))
                    for _ in range(12)})
    # keep only embedding-minimal generators, then build the suffix tables
    gens = [w for w in words
            if not any(v != w and _kernels_py.is_subword(v, w) for v in words)]
    sid = {}
    for w in gens:
        for i in range(len(w) + 1):
            sid.setdefault(w[i:], len(sid))
    num = len(sid)
    by_id = sorted(sid, key=sid.get)
    nxt = [0] * (num * k)
    for s, i in sid.items():
        for x in range(k):
            nxt[i * k + x] = sid[s[1:]] if s and s[0] == x else i
    dom = [0] * num
    for i, s in enumerate(by_id):
        for j, v in enumerate(by_id):
            if i != j and v != s and _kernels_py.is_subword(v, s):
                dom[i] |= 1 << j
    start = [sid[w] for w in gens]

    def run(mod):
        n, delta, finals = mod.cone_closure(num, k, nxt, sid[()], dom, start,
                                            DEFAULT_BUDGET)
        return n, list(delta), list(finals)

    return "cone_closure", f"{len(gens)} generators, {num} suffixes", run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed runs per backend; best is reported")
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernels not built; timing the pure backend only")

    rows = []
    for make in (workload_is_subword, workload_subset, workload_minimize,
                 workload_cone):
        name, desc, run = make(random.Random(args.seed))
        t_pure, out_pure = bench(lambda: run(_kernels_py), args.repeat)
        if _kernels_c is None:
            rows.append((name, desc, t_pure, None, None))
            continue
        t_c, out_c = bench(lambda: run(_kernels_c), args.repeat)
        if out_pure != out_c:
            raise SystemExit(f"backend mismatch on {name}: {desc}")
        rows.append((name, desc, t_pure, t_c, t_pure / t_c))

    head = f"{'kernel':<22}{'workload':<38}{'pure':>9}{'compiled':>10}{'speedup':>9}"
    print(head)
    print("-" * len(head))
    for name, desc, t_pure, t_c, ratio in rows:
        pure = f"{t_pure * 1000:.1f}ms"
        comp = "-" if t_c is None else f"{t_c * 1000:.1f}ms"
        speed = "-" if ratio is None else f"{ratio:.1f}x"
        print(f"{name:<22}{desc:<38}{pure:>9}{comp:>10}{speed:>9}")


if __name__ == "__main__":
    main()
