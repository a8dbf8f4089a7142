#!/usr/bin/env python3
"""Time the compiled kernels against their pure-Python mirrors.

Run from the repository root:

    python benchmarks/bench_kernels.py

The compiled extension must be built (pip install -e .) for the
comparison to be meaningful; otherwise both columns time the same code.
"""

import math
import timeit

from fluxtail._kernels import backend_name, impl, pure

PW_ARGS = dict(
    ln_pref=1.611425,
    pow_exp=0.0936,
    a=2.3,
    c=0.0918,
    ln_x0=math.log(5.15682e7),
    xi=4.5147e-4,
    l_max=50_000,
)


def _time(fn, number):
    return min(timeit.repeat(fn, number=number, repeat=5)) / number


def main() -> None:
    print(f"active backend: {backend_name()}")
    rows = [
        (
            "partial_wave_sum (l_max=50k)",
            lambda: impl.partial_wave_sum(**PW_ARGS),
            lambda: pure.partial_wave_sum(**PW_ARGS),
            20,
        ),
        (
            "count_connected_scalar(7)",
            lambda: impl.count_connected_scalar(7),
            lambda: pure.count_connected_scalar(7),
            50,
        ),
        (
            "count_connected_flux_strict(7)",
            lambda: impl.count_connected_flux_strict(7),
            lambda: pure.count_connected_flux_strict(7),
            50,
        ),
    ]
    print(f"{'kernel':<32} {'compiled':>12} {'pure':>12} {'speedup':>9}")
    for label, fast, slow, number in rows:
        t_fast = _time(fast, number)
        t_slow = _time(slow, number)
        print(
            f"{label:<32} {t_fast * 1e3:>10.3f}ms {t_slow * 1e3:>10.3f}ms "
            f"{t_slow / t_fast:>8.1f}x"
        )


if __name__ == "__main__":
    main()
