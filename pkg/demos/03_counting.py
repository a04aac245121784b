"""Counting equilateral triangles and regular tetrahedra in the cube {0..n}^3.

Three independent counters are compared, then timed.
"""
import time

from eqlattice.enumeration import count_et, count_et_bruteforce, count_rt

# The brute-force oracle tests every triple of grid points; it is honest but
# only usable for small n.
for n in range(1, 5):
    fast = count_et(n)
    slow = count_et_bruteforce(n)
    print(f"n={n}: pair-scan {fast.count:6d}  brute {slow.count:6d}  ({slow.elapsed:.2f}s brute)")

# Up to n = 10 the pair-scan and family-cover methods give the same series.
print()
for method in ("pair-scan", "family-cover"):
    t0 = time.perf_counter()
    series = [count_et(n, method=method).count for n in range(1, 11)]
    print(f"{method:13s} {series}  {time.perf_counter() - t0:.2f}s")

# Threads split the scan into blocks; the total never depends on the split.
print("\nn=8 with 1, 4, 8 threads:", [count_et(8, threads=t).count for t in (1, 4, 8)])

# Tetrahedra: every one has four equilateral faces, so they are found by
# trying the apex construction on each counted triangle.
print("RT(0..6):", [count_rt(n).count for n in range(7)])
