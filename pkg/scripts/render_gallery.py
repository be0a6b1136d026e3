"""Render every diagram of S_n (or of a quotient) to a directory of SVGs.

Files are named by the permutation whose diagram they draw, and an
index.html stitches them into a single scrollable page.

    python3 scripts/render_gallery.py 4 --out gallery4
    python3 scripts/render_gallery.py 5 --congruence tamari --out tamari5 --ascii
"""
from __future__ import annotations

import argparse
import html
from dataclasses import dataclass
from pathlib import Path

from arcdiag import (
    enumerate_diagrams,
    format_diagram_body,
    format_permutation,
    full_arc_set,
    permutation_from_diagram,
    render_ascii,
    render_svg,
)
from arcdiag.textforms import parse_congruence_spec


@dataclass(frozen=True)
class GalleryConfig:
    n: int
    out: Path
    congruence: str | None = None
    ascii_mode: bool = False


def run(config: GalleryConfig) -> None:
    arcset = (
        parse_congruence_spec(config.congruence, config.n)
        if config.congruence
        else full_arc_set(config.n)
    )
    diagrams = sorted(
        enumerate_diagrams(config.n, keep=lambda alpha: alpha in arcset.members),
        key=lambda d: permutation_from_diagram(d).entries,
    )
    if config.ascii_mode:
        for d in diagrams:
            word = format_permutation(permutation_from_diagram(d))
            print(f"{word}  {format_diagram_body(d)}")
            print(render_ascii(d))
            print()
        print(f"{len(diagrams)} diagrams")
        return

    config.out.mkdir(parents=True, exist_ok=True)
    rows = []
    for d in diagrams:
        word = format_permutation(permutation_from_diagram(d))
        name = f"{word.replace(',', '-')}.svg"
        (config.out / name).write_text(render_svg(d), encoding="utf-8")
        caption = html.escape(f"{word}  {format_diagram_body(d)}".rstrip())
        rows.append(
            f'<figure><img src="{name}" alt="{caption}"><figcaption>{caption}</figcaption></figure>'
        )
    index = (
        "<!doctype html><meta charset='utf-8'><title>arc diagrams</title>"
        "<style>figure{display:inline-block;margin:8px;text-align:center;"
        "font-family:monospace}</style>\n" + "\n".join(rows) + "\n"
    )
    (config.out / "index.html").write_text(index, encoding="utf-8")
    print(f"wrote {len(diagrams)} diagrams to {config.out}/")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int)
    parser.add_argument("--congruence", default=None, help="tamari | baxter | cambrian:<dirs> | clumped:<k> | maxlen:<k>")
    parser.add_argument("--out", type=Path, default=Path("gallery"))
    parser.add_argument("--ascii", action="store_true", help="print ASCII art to stdout instead of writing SVGs")
    args = parser.parse_args()
    run(GalleryConfig(n=args.n, out=args.out, congruence=args.congruence, ascii_mode=args.ascii))


if __name__ == "__main__":
    main()
