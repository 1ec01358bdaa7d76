"""Time the orderly generator against the Burnside count for each order."""
import argparse
import time

from stlab.generate import burnside_graph_count, count, parse_filter

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--max-n", type=int, default=9)
ap.add_argument("--jobs", type=int, default=1)
ap.add_argument("--filter", action="append", default=[], help="e.g. st:4,2 or triangle-free")
args = ap.parse_args()
filters = [parse_filter(f) for f in args.filter]

print(f"{'n':>3} {'count':>10} {'burnside':>10} {'seconds':>9}")
for n in range(1, args.max_n + 1):
    t0 = time.perf_counter()
    c = count(n, filters, jobs=args.jobs)
    dt = time.perf_counter() - t0
    ref = burnside_graph_count(n) if not filters else "-"
    print(f"{n:>3} {c:>10} {ref:>10} {dt:>9.2f}", flush=True)
