"""Run the table verifier over the default matrix and write one JSON report per system."""
import argparse
import json
import time
from pathlib import Path

from liecoh import paper_tables as pt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--max-rank", type=int)
    ap.add_argument("--threads", type=int)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for rs in pt.default_matrix(args.max_rank):
        t0 = time.perf_counter()
        verdict = pt.verify(rs, threads=args.threads)
        elapsed = time.perf_counter() - t0
        (out / f"{rs.name}.json").write_text(json.dumps(verdict.to_json(), indent=2, sort_keys=True) + "\n",
                                             encoding="utf-8")
        summary[rs.name] = {t: verdict.best(t).hard_mismatches for t in verdict.tables}
        print(f"{rs.name:<4} {'ok' if verdict.ok else 'MISMATCH':<9} {elapsed:6.1f}s  {summary[rs.name]}")
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
