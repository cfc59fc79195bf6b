#!/usr/bin/env python3
"""Export the two reference quotient graphs as Graphviz dot files.

Usage: python scripts/export_figures.py [--out-dir figures]
"""

import argparse
import pathlib

from a2cent import build_quotient, load_named

FIXTURES = {
    "quotient_05": (0, 5),
    "quotient_014": (0, 1, 4),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    pres = load_named("c1")
    for name, word in FIXTURES.items():
        graph = build_quotient(pres, word)
        path = out_dir / f"{name}.dot"
        path.write_text(graph.to_dot())
        print(f"wrote {path} ({len(graph.vertices)} vertices, {len(graph.edges)} edges)")


if __name__ == "__main__":
    main()
