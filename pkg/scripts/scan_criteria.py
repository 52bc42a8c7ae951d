"""Scan (q, a, b) up to a denominator bound and tabulate the criteria verdicts.

Writes the JSONL records, then prints label counts and, for triples where eq2
holds everywhere but eq1 does not, how many unit classes satisfy eq1.
"""

import argparse
import json
from collections import Counter
from pathlib import Path

from hyperlog.cli import ScanConfig, run_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-denominator", type=int, default=8)
    ap.add_argument("--output", default="scan.jsonl")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    cfg = ScanConfig(args.max_denominator, args.output, parallelism=args.jobs)
    n = run_scan(cfg)
    rows = [json.loads(line) for line in Path(cfg.output).read_text().splitlines()]
    labels = Counter(r["label"] for r in rows)
    print(f"{n} records -> {cfg.output}")
    for label, count in labels.most_common():
        print(f"  {label:<20} {count}")
    shares = Counter(
        f"{sum(r['eq1'].values())}/{len(r['eq1'])}" for r in rows if r["label"] == "LogAtOneOnly"
    )
    print("LogAtOneOnly: unit classes with eq1 / all classes")
    for share, count in sorted(shares.items(), key=lambda kv: -kv[1]):
        print(f"  {share:>7}  {count}")
    log = [r for r in rows if r["label"] == "LogFunctional"]
    print("first LogFunctional triples:")
    for r in log[:10]:
        print(f"  q={r['q']} a={r['a']} b={r['b']} N={r['N']}")


if __name__ == "__main__":
    main()
