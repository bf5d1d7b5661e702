"""Time the compiled strand tracer against the pure-Python one.

    python benchmarks/bench_tangle.py [--m 10] [--repeat 3]
"""

import argparse
import timeit

from springer_cups import tangle
from springer_cups.diagrams import enumerate_ckl
from springer_cups._tangle_py import trace as trace_py
from springer_cups.tangle import Tangle, _trace, diagram_arrays, stack, stack_py


def workload(m):
    pics = [Tangle.cup_cap(m, i, marked=b) for i in range(1, m) for b in (False, True)]
    return [(t, a) for a in enumerate_ckl(m) for t in pics]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--m", type=int, default=10)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    jobs = workload(args.m)
    for t, a in jobs:
        assert stack(t, a) == stack_py(t, a)
    fast = min(timeit.repeat(lambda: [stack(t, a) for t, a in jobs], number=1, repeat=args.repeat))
    slow = min(timeit.repeat(lambda: [stack_py(t, a) for t, a in jobs], number=1, repeat=args.repeat))
    print(f"backend={tangle.BACKEND} m={args.m} stacks={len(jobs)}")
    print(f"  stack    {fast:.3f}s")
    print(f"  stack_py {slow:.3f}s")
    print(f"  speedup  {slow / fast:.2f}x (includes diagram conversion)")
    raw = [(a.m, *diagram_arrays(a), list(t.partner), list(t.marks)) for t, a in jobs]
    k_fast = min(timeit.repeat(lambda: [_trace(*r) for r in raw], number=1, repeat=args.repeat))
    k_slow = min(timeit.repeat(lambda: [trace_py(*r) for r in raw], number=1, repeat=args.repeat))
    print(f"  trace kernel {k_fast:.3f}s vs {k_slow:.3f}s, {k_slow / k_fast:.2f}x")


if __name__ == "__main__":
    main()
