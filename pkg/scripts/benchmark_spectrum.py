#!/usr/bin/env python3
"""Time full-spectrum assembly, serial vs process-parallel.

Usage: python scripts/benchmark_spectrum.py 30 35 40 --threads 4
"""

import argparse
import time

from tnspectrum import partition_count, spectrum


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("ns", type=int, nargs="*", default=[30, 35, 40])
    parser.add_argument("--threads", type=int, default=4)
    args = parser.parse_args()

    print(f"{'n':>4} {'partitions':>11} {'serial[s]':>10} {'parallel[s]':>12} identical")
    for n in args.ns:
        start = time.perf_counter()
        serial = spectrum(n)
        mid = time.perf_counter()
        parallel = spectrum(n, threads=args.threads)
        end = time.perf_counter()
        print(
            f"{n:>4} {partition_count(n):>11} {mid - start:>10.2f} "
            f"{end - mid:>12.2f} {serial == parallel}"
        )


if __name__ == "__main__":
    main()
