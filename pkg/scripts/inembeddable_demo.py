"""The majority-anchored class for (d, n): its VC dimension, its 2d-maximum
witness, how the complement cubes split between the two sides, and what an
exact solver says about (d+1)-maximum superclasses."""

import argparse
from dataclasses import dataclass

from vcmax.constructions import inembeddable_class, inembeddable_witness, side_intersection_cubes, side_split
from vcmax.embedding import maximum_superclasses
from vcmax.vc import greedy_maximal_extension, is_maximum, vc_dimension


@dataclass
class Config:
    d: int = 2
    n: int = 7


def main(cfg: Config) -> None:
    ic = inembeddable_class(cfg.d, cfg.n)
    c = ic.cls
    w = inembeddable_witness(cfg.d, cfg.n)
    print(f"class: {len(c)} points, VC {vc_dimension(c)}, A={[i + 1 for i in ic.A]}, B={[i + 1 for i in ic.B]}")
    print(f"witness: {len(w)} points, VC {vc_dimension(w)}, maximum {is_maximum(w)}, contains class {c <= w}")
    print(f"d-cubes inside both sides: {side_intersection_cubes(cfg.d, cfg.n, cfg.d)}")
    for k in range(cfg.n - 2 * cfg.d - 1, cfg.n - cfg.d):
        s = side_split(cfg.d, cfg.n, k)
        print(f"{k}-cubes of the complement: {s.total} total, {s.in_a} in A side, {s.in_b} in B side, {len(s.mixed)} in neither")
    big = greedy_maximal_extension(c)
    sols = maximum_superclasses(big, cfg.d + 1, limit=1)
    if sols:
        sup = sols[0]
        print(f"a {cfg.d + 1}-maximum superclass exists: {len(sup)} points, maximum {is_maximum(sup)}, contains class {c <= sup}")
    else:
        print(f"no {cfg.d + 1}-maximum superclass exists")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d", type=int, default=Config.d)
    p.add_argument("--n", type=int, default=Config.n)
    a = p.parse_args()
    main(Config(a.d, a.n))
