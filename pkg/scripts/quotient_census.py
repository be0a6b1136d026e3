"""Tabulate quotient sizes for the named congruence families.

Counts diagrams inside each family's arc set for a range of n, so the
growth of the classical sequences (Catalan, Baxter, the bounded-length
products, the single-inflection counts) can be eyeballed side by side.

    python3 scripts/quotient_census.py --n-max 8
    python3 scripts/quotient_census.py --n-max 6 --by-arcs
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from arcdiag import count_by_arcs, full_arc_set, named_congruence


@dataclass(frozen=True)
class CensusConfig:
    n_max: int = 7
    by_arcs: bool = False
    clump_bounds: tuple[int, ...] = (1, 2)
    length_bounds: tuple[int, ...] = (2, 3)
    orientations: tuple[str, ...] = ("alternating",)


def families(config: CensusConfig, n: int):
    yield "full", full_arc_set(n)
    yield "tamari", named_congruence(n, "tamari")
    yield "baxter", named_congruence(n, "baxter")
    for k in config.clump_bounds:
        yield f"clumped:{k}", named_congruence(n, "clumped", k=k)
    for k in config.length_bounds:
        if k <= n:
            yield f"maxlen:{k}", named_congruence(n, "maxlen", k=k)
    for name in config.orientations:
        if name == "alternating":
            orientation = ("LR" * n)[:n]
            yield f"cambrian:{orientation}", named_congruence(n, "cambrian", orientation=orientation)


def run(config: CensusConfig) -> None:
    for n in range(1, config.n_max + 1):
        print(f"n={n}")
        for label, arcset in families(config, n):
            table = count_by_arcs(n, arcset)
            line = f"  {label:<16} {table.total:>8}"
            if config.by_arcs:
                line += "  " + ",".join(str(c) for c in table.counts)
            print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--by-arcs", action="store_true", help="append per-arc-count rows")
    args = parser.parse_args()
    run(CensusConfig(n_max=args.n_max, by_arcs=args.by_arcs))


if __name__ == "__main__":
    main()
