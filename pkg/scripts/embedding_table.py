"""Number of (d+k)-maximum superclasses for every maximal VC-d class of the
n-cube (one per symmetry orbit), from the lifting search."""

import argparse
import time
from dataclasses import dataclass

from vcmax.constructions import classify_maximal
from vcmax.embedding import maximum_embeddings


@dataclass
class Config:
    n: int = 5
    d: int = 2
    ks: tuple[int, ...] = (1, 2)


def main(cfg: Config) -> None:
    reps = classify_maximal(cfg.n, cfg.d)
    ks = [k for k in cfg.ks if cfg.d + k < cfg.n]
    print("orbit  size  " + "  ".join(f"k={k:<6}" for k in ks))
    t = time.perf_counter()
    empty = {k: 0 for k in ks}
    for i, c in enumerate(reps, 1):
        counts = [len(maximum_embeddings(c, k)) for k in ks]
        for k, m in zip(ks, counts):
            empty[k] += m == 0
        print(f"{i:>5}  {len(c):>4}  " + "  ".join(f"{m:<8}" for m in counts))
    print(f"empty results per k: {empty}; {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--d", type=int, default=Config.d)
    p.add_argument("--k", type=int, nargs="+", default=list(Config.ks))
    a = p.parse_args()
    main(Config(a.n, a.d, tuple(a.k)))
