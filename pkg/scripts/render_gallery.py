#!/usr/bin/env python3
"""Render a small gallery of O-blades and metric honeycombs as SVG files.

Covers the three SU(5) branchings used throughout the test suite: the
unique non-degenerate filling of the 371, all three fillings of the
multiplicity-3 case, and a pentagon-bearing filling of the 1427.
"""

import argparse
import os

from hiveforge import (
    BranchingTriple,
    RenderSpec,
    enumerate_fillings,
    honeycomb_dual,
    is_degenerate,
    render_honeycomb,
    render_oblade,
)

LAM = (3, 4, 3, 5)
MU = (4, 3, 5, 4)


def write(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(doc)
    print(path)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="gallery")
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    spec = RenderSpec(kind="oblade", show_labels=True, highlight_zero_edges=True)

    nondeg = next(
        f for f in enumerate_fillings(BranchingTriple(5, LAM, MU, (2, 2, 4, 2)))
        if not is_degenerate(f)
    )
    write(os.path.join(args.out, "blade_371_nondegenerate.svg"), render_oblade(nondeg, spec))
    write(os.path.join(args.out, "honeycomb_371_nondegenerate.svg"), render_honeycomb(nondeg, spec))

    for i, f in enumerate(enumerate_fillings(BranchingTriple(5, LAM, MU, (7, 9, 8, 3)))):
        write(os.path.join(args.out, f"blade_mult3_{i}.svg"), render_oblade(f, spec))

    for f in enumerate_fillings(BranchingTriple(5, LAM, MU, (3, 4, 4, 7))):
        cells = honeycomb_dual(f).cells
        if sorted(c.distinct_corner_count() for c in cells) == [5, 6, 6, 6, 6, 6]:
            write(os.path.join(args.out, "blade_1427_pentagon.svg"), render_oblade(f, spec))
            write(os.path.join(args.out, "honeycomb_1427_pentagon.svg"), render_honeycomb(f, spec))
            break


if __name__ == "__main__":
    main()
