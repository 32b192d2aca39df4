"""Run the closed-form audits and write JSON findings reports.

    python3 scripts/audit.py --out reports --descent-n 8 --hessenberg-n 6
"""

import argparse
import json
import time
from pathlib import Path

from permbound.audit import descent_kendall_rows, descent_linf_rows, hessenberg_rows


def dump(path: Path, rows: list[dict], mismatch) -> None:
    bad = [r for r in rows if mismatch(r)]
    path.write_text(json.dumps({"checked": len(rows), "mismatches": bad}, indent=1) + "\n")
    print(f"{path.name}: {len(rows)} rows, {len(bad)} mismatches")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--descent-n", type=int, default=8)
    ap.add_argument("--oracle-n", type=int, default=7)
    ap.add_argument("--hessenberg-n", type=int, default=6)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    start = time.perf_counter()
    dump(args.out / "descent_linf.json",
         descent_linf_rows(args.descent_n, oracle_max=args.oracle_n),
         lambda r: r["closed_form"] != r["generic"] or r.get("oracle", r["generic"]) != r["generic"])
    dump(args.out / "descent_kendall.json", descent_kendall_rows(args.oracle_n),
         lambda r: r["closed_form"] != r["oracle"])
    dump(args.out / "hessenberg.json", hessenberg_rows(args.hessenberg_n),
         lambda r: not r["matches"])
    print(f"done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
