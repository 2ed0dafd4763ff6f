"""Compare the compiled and pure-Python kernels on random programs.

    python benchmarks/bench_kernel.py [--programs 300] [--atoms 8] [--rules 12]

Both kernels get the same encoded rule lists. Their results are checked for
agreement before timings are reported.
"""

import argparse
import sys
import time
from dataclasses import replace

from lprevise import _kernel, _pykernel
from lprevise.postulates import GeneratorConfig, random_program
from lprevise.semantics import encode


def workload(n_programs, atoms, rules):
    cfg = GeneratorConfig(max_atoms=atoms, max_rules=rules, max_body=3)
    encs = [encode(random_program(replace(cfg, seed=s))) for s in range(n_programs)]
    return [(e.rules, e.n_atoms, e.naf) for e in encs]


def run(kernel, jobs, repeat):
    best = float("inf")
    results = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = [kernel.answer_sets(r, n, naf) for r, n, naf in jobs]
        best = min(best, time.perf_counter() - start)
        results = out
    return best, results


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--programs", type=int, default=300)
    ap.add_argument("--atoms", type=int, default=8)
    ap.add_argument("--rules", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if not _kernel.COMPILED:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return 1
    from lprevise import _ckernel

    jobs = workload(args.programs, args.atoms, args.rules)
    t_py, r_py = run(_pykernel, jobs, args.repeat)
    t_c, r_c = run(_ckernel, jobs, args.repeat)
    agree = all(a[0] == b[0] and sorted(a[1]) == sorted(b[1]) for a, b in zip(r_py, r_c))
    print(f"{len(jobs)} programs, <= {args.atoms} atoms, <= {args.rules} rules, best of {args.repeat}")
    print(f"  pure Python  {t_py * 1e3:9.1f} ms")
    print(f"  compiled     {t_c * 1e3:9.1f} ms")
    print(f"  speedup      {t_py / t_c:9.1f}x")
    print(f"  results agree: {'yes' if agree else 'NO'}")
    return 0 if agree else 1


if __name__ == "__main__":
    sys.exit(main())
