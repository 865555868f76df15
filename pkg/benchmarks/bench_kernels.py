"""Compare the compiled and pure-Python row-reduction kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Two workloads: raw fraction-free elimination of random integer rows, and the
full Hodge-ideal pipeline on a few curves (which is dominated by the kernel).
"""

import argparse
import random
import time

from hodgeideals import linalg
from hodgeideals.jets import _table
from hodgeideals.poly import parse
from hodgeideals.surface import hodge_ideals


def elimination(seed=0, nrows=45, ncols=40):
    rng = random.Random(seed)
    rows = [[rng.choice((0, 0, 0, rng.randint(-50, 50))) for _ in range(ncols)] for _ in range(nrows)]
    ech = linalg.Echelon(ncols)
    for r in rows:
        ech.add(list(r))
    return ech.rank


def pipeline():
    out = []
    for text, kmax in (("x^2+y^6", 6), ("x*y*(x+y)*(x-y)", 6), ("x^3+x*y^3", 6)):
        fam = hodge_ideals(parse(text, ["x", "y"]), (0, 0), kmax)
        out.append(fam.ideals[-1].colength)
    return out


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        _table.cache_clear()
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    kernels = ["python"]
    try:
        linalg.use_kernel("cython")
        kernels.append("cython")
    except ImportError:
        print("compiled kernel not built; only the Python kernel is timed")
    rows = {}
    for name in kernels:
        linalg.use_kernel(name)
        rows[name] = [timed(elimination, args.repeat), timed(pipeline, args.repeat)]
    print(f"{'workload':<28}" + "".join(f"{k:>12}" for k in kernels) + ("     speedup" if len(kernels) == 2 else ""))
    for i, label in enumerate(("random elimination 45x40", "pipeline (3 curves, k<=6)")):
        line = f"{label:<28}" + "".join(f"{rows[k][i][0]:>11.3f}s" for k in kernels)
        if len(kernels) == 2:
            line += f"{rows['python'][i][0] / rows['cython'][i][0]:>11.2f}x"
            assert rows["python"][i][1] == rows["cython"][i][1], "kernels disagree"
        print(line)


if __name__ == "__main__":
    main()
