"""Benchmark the compiled kernels against the pure-Python fallback.

Run as ``python -m weylmax.bench [--type E6] [--repeat 3]``.  Times the
four hot operations (composition, inversion counting, group enumeration,
conjugacy partition) on each importable backend and prints a comparison
table.  Timings are wall-clock and machine-dependent; this tool is
diagnostic, not part of the deterministic CLI surface.
"""

from __future__ import annotations

import argparse
import random
import time

from . import _kernel
from .rootsys import build_root_system


def _partition(backend, gens, width, perms):
    unassigned = set(perms)
    n = 0
    while unassigned:
        seed = min(unassigned)
        unassigned -= _call(backend, "conjugacy_orbit", seed, gens,
                            width=width)
        n += 1
    return n


def _call(backend, name, *args, width):
    fn = getattr(backend, name)
    if backend.__name__.endswith("pure"):
        return fn(*args, width)
    return fn(*args)  # compiled kernels are width-1 only


def run(type_name: str, repeat: int) -> None:
    rs = build_root_system(type_name)
    if rs.width != 1:
        raise SystemExit("benchmark requires a width-1 type (up to E8)")
    gens = list(rs.gen_perms)
    n2 = 2 * rs.n_positive

    print(f"type {rs.cartan_type}: {rs.n_positive} positive roots")
    rows = []
    for name, backend in _kernel.backends().items():
        # enumeration
        best_enum = min(
            _timed(lambda: _call(backend, "generate_group", gens, n2,
                                 width=rs.width))
            for _ in range(repeat))
        perms = _call(backend, "generate_group", gens, n2, width=rs.width)
        order = len(perms)

        # composition throughput on a fixed random sample
        rng = random.Random(0)
        sample = rng.sample(sorted(perms), min(2000, order))
        pairs = [(sample[i], sample[-1 - i]) for i in range(len(sample) // 2)]

        def compose_all():
            for a, b in pairs:
                _call(backend, "compose", a, b, width=rs.width)

        best_compose = min(_timed(compose_all) for _ in range(repeat))

        def count_all():
            for a, _ in pairs:
                _call(backend, "inversions", a, rs.n_positive, width=rs.width)

        best_count = min(_timed(count_all) for _ in range(repeat))

        best_part = min(
            _timed(lambda: _partition(backend, gens, rs.width, perms))
            for _ in range(repeat))
        rows.append((name, order, best_enum, best_compose / len(pairs),
                     best_count / len(pairs), best_part))

    print(f"{'backend':<10} {'|W|':>9} {'enumerate':>12} {'compose':>12} "
          f"{'inversions':>12} {'partition':>12}")
    for name, order, t_enum, t_comp, t_cnt, t_part in rows:
        print(f"{name:<10} {order:>9} {t_enum:>11.3f}s {t_comp * 1e6:>10.2f}us "
              f"{t_cnt * 1e6:>10.2f}us {t_part:>11.3f}s")
    if len(rows) == 2:
        pure = next(r for r in rows if r[0] == "pure")
        comp = next(r for r in rows if r[0] == "compiled")
        print(f"speedup (enumerate): {pure[2] / comp[2]:.2f}x, "
              f"(partition): {pure[5] / comp[5]:.2f}x")


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--type", default="D5")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    run(args.type, args.repeat)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
