#!/usr/bin/env python3
"""Write the certified small-poset catalog: one poset file per class plus a
summary of routes and verification verdicts."""

import argparse
from pathlib import Path

from poscert.catalog import certify_all
from poscert.formats import write_poset_file


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    lines = []
    for entry in certify_all(args.max_n):
        n = entry.representative.n
        cid = entry.classification.catalog_id or f"{n}.disc"
        name = f"c{cid.replace('.', '_')}_{entry.canonical.hex()[:8]}"
        (args.outdir / f"{name}.poset").write_text(
            write_poset_file(name, entry.representative))
        ok = entry.witness.verify_all()
        lines.append(f"{name}: route={entry.witness.route} "
                     f"theorem={entry.witness.theorem} verified={ok}")
    (args.outdir / "SUMMARY.txt").write_text("\n".join(lines) + "\n")
    print(f"{len(lines)} classes written to {args.outdir}")


if __name__ == "__main__":
    main()
