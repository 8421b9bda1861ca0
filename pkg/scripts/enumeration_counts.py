"""Count 3-constellations (and optionally 4-constellations) by degree and genus."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from critfilt import constellation as cs


@dataclass
class Config:
    max_degree: int = 6
    branch: int = 3
    check_naive_upto: int = 4


def run(cfg: Config):
    rows = []
    for d in range(1, cfg.max_degree + 1):
        t0 = time.perf_counter()
        found = cs.enumerate_tuples(d, cfg.branch) if cfg.branch == 4 else cs.enumerate_triples(d, budget=cfg.max_degree)
        dt = time.perf_counter() - t0
        by_genus = Counter(c.genus() for c in found)
        naive = len(cs.naive_enumerate(d, cfg.branch)) if d <= cfg.check_naive_upto else None
        rows.append((d, len(found), dict(sorted(by_genus.items())), naive, dt))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    ap.add_argument("--branch", type=int, choices=[3, 4], default=Config.branch)
    ap.add_argument("--check-naive-upto", type=int, default=Config.check_naive_upto)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'d':>3} {'classes':>8} {'naive':>6} {'seconds':>8}  by genus")
    for d, n, g, naive, dt in run(cfg):
        print(f"{d:>3} {n:>8} {naive if naive is not None else '-':>6} {dt:>8.2f}  {g}")


if __name__ == "__main__":
    main()
