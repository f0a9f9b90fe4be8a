"""Irreducible dimensions from the Chebyshev formula next to exact projection ranks."""

import argparse
from dataclasses import dataclass

from ncfusion import analytics, linmap
from ncfusion import partition as pc
from ncfusion.category import family_table


@dataclass
class Config:
    family: str = "allnc"
    N: int = 4
    max_row: int = 2
    bound: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default=Config.family)
    ap.add_argument("--N", type=int, default=Config.N)
    ap.add_argument("--max-row", type=int, default=Config.max_row)
    a = ap.parse_args()
    cfg = Config(a.family, a.N, a.max_row)
    table = family_table(cfg.family, cfg.bound)
    print(f"{'partition':<28} {'t':>2} {'pushforward':<14} {'dim':>5} {'rank':>5}")
    for row in analytics.dimension_table(table, cfg.N, cfg.max_row):
        rank = linmap.projection_rank_or_none(table, pc.from_text(row["partition"]), cfg.N)
        flag = "" if rank is None or rank == row["dim"] else "  MISMATCH"
        print(f"{row['partition']:<28} {row['t']:>2} {str(row['pushforward']):<14} {row['dim']:>5} {str(rank):>5}{flag}")


if __name__ == "__main__":
    main()
