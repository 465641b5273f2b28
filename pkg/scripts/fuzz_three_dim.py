"""Fuzz 3-dimensional associative algebras and summarize tameness verdicts.

Every algebra must come out tame; a non-tame verdict raises.

    python3 scripts/fuzz_three_dim.py [--count N] [--seed S]
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from zerodiv.families import fuzz_three_dim
from zerodiv.tameness import tameness_report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    start = time.perf_counter()
    shapes = Counter()
    for case in fuzz_three_dim(args.count, args.seed):
        r = tameness_report(case.algebra)
        assert r.tame is True, case.algebra.name
        dims = tuple(sorted(W.dim for W in r.z.components))
        shapes[(case.family, r.z.kind, dims, r.splits_over_closure)] += 1
    print(f"{'family':<13} {'Z kind':<15} {'dims':<10} {'splits':<13} count")
    for (family, kind, dims, splits), n in sorted(shapes.items(), key=str):
        print(f"{family:<13} {kind:<15} {str(dims):<10} {splits:<13} {n}")
    print(f"{args.count} algebras, all tame, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
