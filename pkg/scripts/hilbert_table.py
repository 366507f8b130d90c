"""Print engine vs oracle Hilbert dimensions for every shipped config.

    python scripts/hilbert_table.py [--max-degree D]
"""
import argparse
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from qpbw.config import load_config  # noqa: E402
from qpbw.pbw import enumerate_pbw, finiteness_verdict  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=None)
    args = ap.parse_args()
    for path in sorted((ROOT / "configs").glob("*.yaml")):
        cfg = load_config(path)
        ctx, P = cfg.build()
        D = args.max_degree or cfg.max_degree
        t0 = time.perf_counter()
        R = enumerate_pbw(P, D)
        dt = time.perf_counter() - t0
        dims = " ".join(str(R.hilbert[d]) for d in range(D + 1))
        flag = "ok" if R.consistent else "MISMATCH"
        print(f"{path.stem:<22} D={D:<2} [{dims}]  {flag}  {finiteness_verdict(P, R)}  ({dt:.2f}s)")


if __name__ == "__main__":
    main()
