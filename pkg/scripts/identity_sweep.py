"""Check the generating-function identities over a grid of genera and truncation orders."""
import argparse
import time
from dataclasses import dataclass

from surface_lie.charring import PowerTracePoly, SymCharacter
from surface_lie.formulas import VERIFIERS


@dataclass(frozen=True)
class SweepConfig:
    genera: tuple = (1, 2, 3, 4)
    order: int = 10
    laurent: bool = False


def run(cfg: SweepConfig) -> bool:
    rings = [PowerTracePoly] + ([SymCharacter] if cfg.laurent else [])
    ok = True
    for ring in rings:
        for g in cfg.genera:
            for name, fn in VERIFIERS.items():
                start = time.perf_counter()
                r = fn(g, cfg.order, ring)
                ok &= r.passed
                status = "PASS" if r.passed else f"FAIL at degree {r.first_failure_degree}"
                print(f"{ring.__name__:<15} g={g} {name:<7} {status}  {time.perf_counter() - start:.2f}s")
    return ok


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--genera", type=int, nargs="+", default=[1, 2, 3, 4])
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--laurent", action="store_true", help="also check in the Laurent ring")
    a = p.parse_args()
    raise SystemExit(0 if run(SweepConfig(tuple(a.genera), a.order, a.laurent)) else 1)


if __name__ == "__main__":
    main()
