"""Sampled check of the genus-2 base function, with optional perturbation as a sanity control."""

import argparse
import time
from dataclasses import dataclass

from critfilt.friedbase import BOXED, beta_bas_sampled_verify


@dataclass
class Config:
    samples: int | None = None  # None: the certified bound
    start: int = 0
    perturb: int = 0  # add this constant to the candidate to see the check fail
    workers: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--start", type=int, default=0)
    ap.add_argument("--perturb", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    cfg = Config(**vars(ap.parse_args()))

    cand = BOXED["d5g2"].value + cfg.perturb
    t0 = time.perf_counter()
    rep = beta_bas_sampled_verify("d5g2", cand, N=cfg.samples, start=cfg.start, workers=cfg.workers)
    dt = time.perf_counter() - t0
    print(f"bound: {rep.bound}")
    print(f"agreeing samples: {rep.samples} / required {rep.required}  skipped: {len(rep.skipped)}")
    for v, why in rep.skipped:
        print(f"  skipped p={v}: {why}")
    if rep.failure:
        print(f"mismatch at p={rep.failure['value']}")
    print(f"passed: {rep.passed}  ({dt:.1f}s)")


if __name__ == "__main__":
    main()
