"""Count maximum classes per (n, d) by lifting, with timing and the number
of lift candidates rejected by the VC test."""

import argparse
import time
from dataclasses import dataclass

from vcmax.liftshift import MAX_ENUM_N, enumerate_maximum_classes, enumeration_stats


@dataclass
class Config:
    max_n: int = 5


def main(cfg: Config) -> None:
    print(f"{'n':>2} {'d':>2} {'classes':>8} {'rejected':>8} {'seconds':>8}")
    for n in range(1, cfg.max_n + 1):
        for d in range(n + 1):
            t = time.perf_counter()
            count = len(enumerate_maximum_classes(n, d))
            dt = time.perf_counter() - t
            print(f"{n:>2} {d:>2} {count:>8} {enumeration_stats(n, d).rejected:>8} {dt:>8.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n, choices=range(1, MAX_ENUM_N + 1))
    main(Config(p.parse_args().max_n))
