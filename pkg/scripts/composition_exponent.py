"""Tabulate which power of N makes T_p T_q proportional to T_pq.

For every composable pair of white noncrossing partitions with short rows,
count how often N^gamma and N^-gamma give the right scalar.
"""

import argparse
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from ncfusion import linmap
from ncfusion.verify import shape_pairs


@dataclass
class Config:
    N: int = 4
    max_row: int = 2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=Config.N)
    ap.add_argument("--max-row", type=int, default=Config.max_row)
    a = ap.parse_args()
    cfg = Config(a.N, a.max_row)
    tally = Counter()
    for p, q in shape_pairs(cfg.max_row):
        rep = linmap.verify_functoriality(p, q, cfg.N, check_tensor=False)
        tally[(str(rep.gamma), rep.composition_ok, rep.composition_inverse_ok)] += 1
    print(f"{'gamma':>6} {'N^gamma':>8} {'N^-gamma':>9} {'pairs':>7}")
    for (g, plus, minus), n in sorted(tally.items(), key=lambda kv: Fraction(kv[0][0])):
        print(f"{g:>6} {str(plus):>8} {str(minus):>9} {n:>7}")


if __name__ == "__main__":
    main()
