"""Compare the compiled channel kernel against the numpy fallback.

Both implement the same documented splitmix-style bit-flip stream; the
benchmark checks they agree byte-for-byte, then times each on the
acceptance workload (10,000 transmissions of a 1000-byte frame at
bit error rate 1/1000).

Run:  python benchmarks/bench_channel.py
"""

import time

from bcp._chanfallback import corrupt_bits as numpy_kernel
from bcp._chanrng import stream_base, threshold

try:
    from bcp._chankernel import corrupt_bits as compiled_kernel
except ImportError:
    compiled_kernel = None

FRAME = bytes((i * 37 + 11) % 256 for i in range(1000))
ROUNDS = 10_000
SEED = 90
THR = threshold(1, 1000)


def run(kernel):
    start = time.perf_counter()
    flips = 0
    ref = int.from_bytes(FRAME, "big")
    for pos in range(ROUNDS):
        out = kernel(FRAME, stream_base(SEED, pos), THR, False)
        flips += (int.from_bytes(out, "big") ^ ref).bit_count()
    return time.perf_counter() - start, flips


def main():
    kernels = [("numpy fallback", numpy_kernel)]
    if compiled_kernel is not None:
        s0 = stream_base(SEED, 0)
        assert compiled_kernel(FRAME, s0, THR, False) == numpy_kernel(FRAME, s0, THR, False)
        kernels.insert(0, ("compiled (cython)", compiled_kernel))
    else:
        print("compiled kernel not built; timing fallback only")

    results = {}
    for name, kernel in kernels:
        elapsed, flips = run(kernel)
        results[name] = elapsed
        rate = ROUNDS * len(FRAME) * 8 / elapsed / 1e6
        print(f"{name:18s} {elapsed:6.2f}s  {rate:8.1f} Mbit/s  ({flips} flips)")
    if len(results) == 2:
        a, b = results["compiled (cython)"], results["numpy fallback"]
        print(f"speedup: {b / a:.2f}x")


if __name__ == "__main__":
    main()
