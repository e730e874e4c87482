"""Run every verification suite for several seeds and write a JSON summary.

    python3 scripts/run_suites.py --seeds 1 2 3 --out results/suites.json
"""

import argparse
import json
import os
import time

from cofin import suites


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[suites.DEFAULT_SEED])
    ap.add_argument("--out", default="results/suites.json")
    args = ap.parse_args()

    rows = []
    for seed in args.seeds:
        t = time.perf_counter()
        reports = suites.run("all", seed=seed)
        failed = [f"{r['suite']}: {c['name']}" for r in reports for c in r["checks"]
                  if c["status"] != "pass"]
        rows.append({"seed": seed, "seconds": round(time.perf_counter() - t, 2),
                     "failed": failed, "reports": reports})
        print(f"seed {seed:>10}  {'pass' if not failed else 'FAIL'}  {rows[-1]['seconds']:6.2f} s")
        for f in failed:
            print("   ", f)
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    with open(args.out, "w") as fh:
        json.dump(rows, fh, indent=1)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
