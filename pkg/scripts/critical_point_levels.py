"""For each boxed base function, list its rational critical points and the level of the member there."""

import argparse
from dataclasses import dataclass

from critfilt.friedbase import BOXED, beta_bas_is_belyi, fiber_levels_at_critical_points


@dataclass
class Config:
    families: tuple = tuple(BOXED)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("families", nargs="*", default=list(Config.families))
    cfg = Config(tuple(ap.parse_args().families))
    for name in cfg.families:
        rep = beta_bas_is_belyi(BOXED[name])
        print(f"{name}: base has {rep.level} critical values {[str(v) for v in rep.values]}")
        for row in fiber_levels_at_critical_points(name, BOXED[name]):
            lvl = row.get("level", "-")
            print(f"  point {row['point']!s:>6}  value {row['value']!s:>6}  mult {row['multiplicity']}  "
                  f"level {lvl}  {row['status']}")


if __name__ == "__main__":
    main()
