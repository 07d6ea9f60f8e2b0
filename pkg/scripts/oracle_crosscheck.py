"""Compare closed-form traces against the brute-force quotient on random symplectic matrices."""
import argparse
import random
import time
from dataclasses import dataclass

from surface_lie.charring import SymplecticMatrix, random_symplectic
from surface_lie.lieoracle import OracleConfig, verify_character


@dataclass(frozen=True)
class CrossCheckConfig:
    genus: int = 2
    max_degree: int = 5
    matrices: int = 5
    seed: int = 0
    word_length: int = 12
    budget: int = 20_000


def run(cfg: CrossCheckConfig) -> bool:
    rng = random.Random(cfg.seed)
    mats = [SymplecticMatrix.identity(cfg.genus)]
    mats += [random_symplectic(cfg.genus, rng, steps=cfg.word_length) for _ in range(cfg.matrices)]
    oracle_cfg = OracleConfig(budget=cfg.budget)
    ok = True
    for n in range(1, cfg.max_degree + 1):
        start = time.perf_counter()
        rep = verify_character(cfg.genus, n, mats, oracle_cfg)
        ok &= rep.passed
        traces = ", ".join(str(c.oracle) for c in rep.checks)
        print(f"N={n:<3} {'ok  ' if rep.passed else 'FAIL'} traces [{traces}]  {time.perf_counter() - start:.2f}s")
    return ok


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--matrices", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--word-length", type=int, default=12)
    p.add_argument("--budget", type=int, default=20_000)
    a = p.parse_args()
    raise SystemExit(0 if run(CrossCheckConfig(a.genus, a.max_degree, a.matrices, a.seed, a.word_length, a.budget)) else 1)


if __name__ == "__main__":
    main()
