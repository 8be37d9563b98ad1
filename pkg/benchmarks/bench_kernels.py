"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from pinlab import kernels
from pinlab.lab.enumerate import endo_monoid, quasi_orders
from pinlab.relation import make_relation
from pinlab.rng import SplitMix64


def workloads():
    rng = SplitMix64(1)
    rels = []
    for _ in range(300):
        n = rng.between(4, 8)
        rels.append((bytes(rng.below(1 << n) for _ in range(n)), n))
    qo = [R for R in quasi_orders(4)][::7]
    fams = [(R.packed, endo_monoid(R)) for R in qo]
    chain = make_relation(3, [(0, 1), (1, 2)], reflexive=True)
    cfam = endo_monoid(chain)

    def closure(k):
        for rows, n in rels:
            k.closure(rows, n)

    def augment(k):
        for rows, F in fams:
            for kind in range(5):
                k.augment(kind, rows, 4, F.packed, len(F), F.packed, len(F))

    def properties(k):
        for rows, F in fams:
            for prop in range(6):
                k.prop_failure(prop, rows, 4, F.packed, len(F), F.packed, len(F))

    def brute(k):
        k.brute_min(bytes([1, 2, 4]), 3, kernels.P_CORRECT, cfam.packed, len(cfam), cfam.packed, len(cfam), False)

    return {"closure": closure, "augment": augment, "properties": properties, "brute_min": brute}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = kernels.implementations()
    print(f"{'workload':<12}" + "".join(f"{name:>12}" for name in impls) + f"{'speedup':>10}")
    for name, fn in workloads().items():
        times = {k: min(timeit.repeat(lambda m=m: fn(m), number=1, repeat=args.repeat)) for k, m in impls.items()}
        row = f"{name:<12}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times.values())
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
