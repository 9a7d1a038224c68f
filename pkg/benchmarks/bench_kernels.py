"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--cases 2000] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from artinkit.graph import P4
from artinkit.kernels import _pure

try:
    from artinkit.kernels import _speedups
except ImportError:
    _speedups = None


def make_cases(n_cases: int, seed: int) -> dict[str, list[tuple]]:
    rng = random.Random(seed)
    masks = P4.commute_masks()
    free = [tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(64)) for _ in range(n_cases)]
    raag = [(tuple(rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]) for _ in range(48)), masks) for _ in range(n_cases)]
    braid = [(4, 0, (), tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(32))) for _ in range(n_cases)]
    return {
        "free_reduce": [(w,) for w in free],
        "raag_normal_form": raag,
        "garside_extend": braid,
    }


def bench(module, name: str, cases: list[tuple], repeat: int) -> float:
    fn = getattr(module, name)

    def run() -> None:
        for args in cases:
            fn(*args)

    return min(timeit.repeat(run, number=1, repeat=repeat))


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--cases", type=int, default=2000)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    if _speedups is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    cases = make_cases(args.cases, args.seed)
    print(f"{'kernel':<18} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for name, batch in cases.items():
        for a in batch[:50]:
            assert getattr(_pure, name)(*a) == getattr(_speedups, name)(*a)
        slow = bench(_pure, name, batch, args.repeat)
        fast = bench(_speedups, name, batch, args.repeat)
        print(f"{name:<18} {slow * 1e3:12.1f} {fast * 1e3:12.1f} {slow / fast:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
