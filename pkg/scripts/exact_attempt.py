"""Try the symbolic elimination for a family under a wall-clock limit."""

import argparse
import multiprocessing as mp
import time
from dataclasses import dataclass

from critfilt.errors import DegreeBudgetExceeded
from critfilt.friedbase import BOXED, beta_bas_exact, exact_cost_estimate


@dataclass
class Config:
    family: str = "d5g2"
    budget: int = 100
    seconds: float = 600.0


def _work(family, budget, q):
    t0 = time.perf_counter()
    try:
        res = beta_bas_exact(family, budget=budget)
    except DegreeBudgetExceeded as exc:
        q.put(("budget", str(exc), time.perf_counter() - t0))
        return
    q.put(("done", res.value == BOXED[family].value, time.perf_counter() - t0))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default=Config.family, choices=sorted(BOXED))
    ap.add_argument("--budget", type=int, default=Config.budget)
    ap.add_argument("--seconds", type=float, default=Config.seconds)
    cfg = Config(**vars(ap.parse_args()))

    print(f"{cfg.family}: estimated parameter degree {exact_cost_estimate(cfg.family)}, budget {cfg.budget}")
    q = mp.Queue()
    proc = mp.Process(target=_work, args=(cfg.family, cfg.budget, q))
    proc.start()
    proc.join(cfg.seconds)
    if proc.is_alive():
        proc.terminate()
        print(f"gave up after {cfg.seconds:.0f}s")
        return
    status, detail, dt = q.get()
    if status == "budget":
        print(f"not attempted: {detail}")
    else:
        print(f"finished in {dt:.1f}s; equals the boxed formula: {detail}")


if __name__ == "__main__":
    main()
