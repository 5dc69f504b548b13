"""Compare the jitted and pure-numpy lanes of the three hot kernels.

Run:  python3 benchmarks/bench_kernels.py [--repeats 30]

Each kernel is warmed first (the jitted lane compiles on first call),
then timed over many repeats; the table reports median wall time per
call, the speedup of the jitted lane, and the largest disagreement
between the two lanes on identical inputs.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from scenesmith import kernels
from scenesmith.kinematics.skeleton import canonical_skeleton


def _time(fn, args, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def workloads():
    rng = np.random.default_rng(7)

    # one minute of speech split into word-sized segments
    n_seg = 400
    lengths = np.full(n_seg, 8820, dtype=np.int64)
    freqs = rng.uniform(100.0, 300.0, n_seg)
    freqs[::4] = 0.0
    yield (
        "render_segments",
        (kernels.render_segments_numba, kernels.render_segments_numpy),
        (lengths, freqs, 22050, 0.89, 1323),
    )

    samples = rng.uniform(-0.8, 0.8, 22050 * 60)
    yield (
        "rms_envelope",
        (kernels.rms_envelope_numba, kernels.rms_envelope_numpy),
        (samples, 1102, 441),
    )

    skel = canonical_skeleton()
    n_frames = 3600  # one minute at 60 fps
    rotations = rng.uniform(-40.0, 40.0, (n_frames, len(skel.joints), 3))
    root = rng.uniform(-1.0, 1.0, (n_frames, 3))
    yield (
        "fk_positions",
        (kernels.fk_positions_numba, kernels.fk_positions_numpy),
        (skel.parents, skel.offsets, rotations, root),
    )


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=30)
    args = parser.parse_args()

    print(f"numba available: {kernels.HAVE_NUMBA}")
    rows = []
    for name, (jitted, plain), call_args in workloads():
        out_a = jitted(*call_args)  # warm-up also compiles the jitted lane
        out_b = plain(*call_args)
        worst = float(np.max(np.abs(out_a - out_b)))
        t_jit = _time(jitted, call_args, args.repeats)
        t_np = _time(plain, call_args, args.repeats)
        rows.append((name, t_jit, t_np, t_np / t_jit, worst))

    print(f"{'kernel':<16} {'jitted':>10} {'numpy':>10} {'speedup':>8} {'max |diff|':>12}")
    for name, t_jit, t_np, speedup, worst in rows:
        print(f"{name:<16} {t_jit * 1e3:>8.2f}ms {t_np * 1e3:>8.2f}ms {speedup:>7.1f}x {worst:>12.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
