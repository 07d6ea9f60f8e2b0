"""Print dimensions and Sp-decompositions of the graded pieces for a range of genera."""
import argparse
from dataclasses import dataclass

from surface_lie.charring import to_laurent
from surface_lie.formulas import chi_piece
from surface_lie.spdecomp import decompose, irrep_dimension


@dataclass(frozen=True)
class TableConfig:
    genera: tuple = (1, 2, 3)
    max_degree: int = 6
    decompose: bool = True


def run(cfg: TableConfig):
    for g in cfg.genera:
        print(f"genus {g}")
        for n in range(1, cfg.max_degree + 1):
            chi = chi_piece(g, n)
            line = f"  N={n:<3} dim={chi.dimension()}"
            if cfg.decompose:
                parts = decompose(to_laurent(chi))
                line += "  " + " + ".join(
                    f"{m}*{lam}[{irrep_dimension(lam, g)}]" if m != 1 else f"{lam}[{irrep_dimension(lam, g)}]"
                    for lam, m in parts
                ) if parts else "  0"
            print(line)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--genera", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--no-decompose", action="store_true")
    a = p.parse_args()
    run(TableConfig(tuple(a.genera), a.max_degree, not a.no_decompose))


if __name__ == "__main__":
    main()
