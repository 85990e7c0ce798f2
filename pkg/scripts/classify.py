"""List the maximal but not maximum VC-d classes of the n-cube up to
symmetry, with deficiency and the degree sequences of the complement graph."""

import argparse
from dataclasses import dataclass

from vcmax.constructions import classify_maximal, forest_degrees
from vcmax.vc import deficiency


@dataclass
class Config:
    n: int = 4
    d: int = 2
    show: bool = False


def main(cfg: Config) -> None:
    reps = classify_maximal(cfg.n, cfg.d)
    print(f"{len(reps)} orbits of maximal non-maximum VC-{cfg.d} classes in the {cfg.n}-cube")
    for i, c in enumerate(reps, 1):
        rep = deficiency(c)
        print(f"[{i}] size {len(c)} deficiency {rep.deficiency} complement components {forest_degrees(c)}")
        if cfg.show:
            print("    " + " ".join(c.strings()))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--d", type=int, default=Config.d)
    p.add_argument("--show", action="store_true")
    a = p.parse_args()
    main(Config(a.n, a.d, a.show))
