"""Counts and timings for the brute-force oracle on X = {0, ..., n-1}.

    python3 scripts/finite_universe.py
"""

import time

from cofin import finoracle as fo


def main():
    print(f"{'n':>2} {'upper families':>15} {'filters':>8} {'adjunction items':>17} {'seconds':>8}")
    for n in range(0, fo.MAX_FILTER_N + 1):
        t = time.perf_counter()
        u = fo.FinUniverse(n)
        uppers = sum(1 for _ in fo.upper_families(u))
        filters = len(fo.all_filters(u))
        if 1 <= n <= fo.MAX_FAMILY_N:
            items = fo.clu1_check(u)
            status = f"{sum(r['status'] == 'pass' for r in items)}/{len(items)} pass"
        else:
            status = "-"
        print(f"{n:>2} {uppers:>15} {filters:>8} {status:>17} {time.perf_counter() - t:>8.2f}")


if __name__ == "__main__":
    main()
