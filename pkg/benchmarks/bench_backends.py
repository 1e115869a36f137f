"""Compare the pure Python kernels with the compiled extension.

Times the two hot kernels on representative shapes drawn from real suite
workloads (hom-space systems and structure-map products), then times one
full suite run per backend in a subprocess.

Usage: python benchmarks/bench_backends.py [--repeat N] [--group NAME]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time

from sepmonad import _pure
from sepmonad.exactlin import Field, mat_kron, mat_sub, vstack, Matrix
from sepmonad.presets import load_preset
from sepmonad.repcat import random_rep

try:
    from sepmonad import _speed
except ImportError:
    _speed = None


def _random_case(rng, rows, cols, mag):
    return [rng.randrange(-mag, mag + 1) for _ in range(rows * cols)]


def _hom_system(group_name, dx, dy):
    """The stacked intertwiner constraint matrix the suite actually reduces."""
    group, _ = load_preset(group_name)
    field = Field(0)
    x = random_rep(group, field, seed=1, budget=dx)
    y = random_rep(group, field, seed=2, budget=dy)
    eye_x = Matrix.identity(field, dx)
    eye_y = Matrix.identity(field, dy)
    blocks = [
        mat_sub(mat_kron(eye_y, x.mat(g).transpose()), mat_kron(y.mat(g), eye_x))
        for g in group.gens
    ]
    stacked = vstack(blocks)
    return list(stacked.nums), stacked.rows, stacked.cols


def _time(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def bench_kernels(repeat):
    rng = random.Random(12345)
    cases = [
        ("mul_int 32x32 . 32x32, small entries", "mul_int",
         (_random_case(rng, 32, 32, 9), 32, 32, _random_case(rng, 32, 32, 9), 32)),
        ("mul_int 96x96 . 96x96, small entries", "mul_int",
         (_random_case(rng, 96, 96, 9), 96, 96, _random_case(rng, 96, 96, 9), 96)),
        ("rrefj_int s4 hom system 4x4", "rrefj_int", _hom_system("s4", 4, 4)),
        ("rrefj_int s4 hom system 12x12", "rrefj_int", _hom_system("s4", 12, 12)),
        ("rref_mod 96x144 mod 5", "rref_mod",
         ([v % 5 for v in _random_case(rng, 96, 144, 100)], 96, 144, 5)),
    ]
    print(f"{'case':<42} {'pure':>10} {'speed':>10} {'ratio':>7}")
    for label, name, args in cases:
        pure_best, _ = _time(getattr(_pure, name), [list(args[0])] + list(args[1:]), repeat)
        if _speed is None:
            print(f"{label:<42} {pure_best * 1000:>8.2f}ms {'n/a':>10} {'':>7}")
            continue
        try:
            speed_best, _ = _time(getattr(_speed, name), [list(args[0])] + list(args[1:]), repeat)
        except OverflowError:
            # intermediates left the int64-safe range; the dispatcher would
            # rerun this input on the pure kernels
            print(f"{label:<42} {pure_best * 1000:>8.2f}ms {'overflow':>10} {'':>7}")
            continue
        ratio = pure_best / speed_best if speed_best else float("inf")
        print(f"{label:<42} {pure_best * 1000:>8.2f}ms {speed_best * 1000:>8.2f}ms {ratio:>6.1f}x")


def bench_suite(group, repeat):
    print(f"\nfull suite, group {group}, family size 10, field q")
    for backend in ("pure", "speed") if _speed is not None else ("pure",):
        env = dict(os.environ, SEPMONAD_BACKEND=backend)
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            subprocess.run(
                [sys.executable, "-m", "sepmonad", "--group", group],
                check=True,
                env=env,
                stdout=subprocess.DEVNULL,
            )
            times.append(time.perf_counter() - t0)
        print(f"  backend {backend:<6} best {min(times):.2f}s median {statistics.median(times):.2f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--group", default="s4")
    args = parser.parse_args()
    if _speed is None:
        print("compiled extension not built; showing pure timings only\n")
    bench_kernels(args.repeat)
    bench_suite(args.group, args.repeat)


if __name__ == "__main__":
    main()
