"""Run every default campaign and write one JSON report per campaign.

    python3 scripts/run_campaigns.py --out results/ --jobs 4
"""
import argparse
import json
import sys
from pathlib import Path

from stlab import campaigns as C


def default_runs():
    yield "theorem6", lambda jobs: C.campaign_theorem6([7, 8, 9], jobs=jobs)
    yield "theorem6-boundary", lambda jobs: C.theorem6_boundary(jobs=jobs)
    yield "ce-gap", lambda jobs: C.campaign_ce_gap(9, jobs=jobs)
    yield "theorem2", lambda jobs: C.campaign_theorem2([7, 8], jobs=jobs)
    yield "lemma5-p2", lambda jobs: C.campaign_lemma5(2, jobs=jobs)
    yield "lemma5-p4", lambda jobs: C.campaign_lemma5(4, jobs=jobs)
    yield "lemma5-p6", lambda jobs: C.campaign_lemma5(6, jobs=jobs)
    yield "qform", lambda jobs: C.campaign_qform(14)
    yield "z", lambda jobs: C.campaign_z()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name, run in default_runs():
        rep = run(args.jobs)
        (args.out / f"{name}.json").write_text(rep.to_json() + "\n")
        print(f"{name:18s} {rep.verdict:4s} population={rep.population:<7d} {rep.runtime:7.1f}s", flush=True)
        failed += rep.verdict != "pass"
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
