#!/usr/bin/env python3
"""Reproduce every headline number end to end and print a PASS/FAIL table.

Usage:
    python scripts/reproduce_results.py            # quick set (~1 min)
    python scripts/reproduce_results.py --full     # adds the 5223-component decomposition
"""

import argparse
import sys
import time
from fractions import Fraction

from hiveforge import (
    BranchingTriple,
    count_fillings,
    enumerate_fillings,
    g2_combo,
    horn_volume,
    is_degenerate,
    kappa_sets,
    r_coefficients,
    series_R,
    verify_alternative_R5_forms,
    verify_r7,
)
from hiveforge.rootsys import dimension, root_system
from hiveforge.rpoly import character_form_value
from hiveforge.stretch import evaluate, stretch_polynomial
from hiveforge.tensor import kostka, kostka_sequence, tensor_decompose

LAM = (3, 4, 3, 5)
MU = (4, 3, 5, 4)
NU = (2, 2, 4, 2)

RESULTS = []


def check(name, got, expect):
    ok = got == expect
    RESULTS.append((name, ok))
    mark = "PASS" if ok else "FAIL"
    print(f"[{mark}] {name}: {got}" + ("" if ok else f"  (expected {expect})"))
    return ok


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true", help="include the full tensor decomposition")
    args = parser.parse_args()
    t0 = time.time()

    rs = root_system("A4")
    check("dim(3,4,3,5)", dimension(rs, LAM), 5001750)
    check("dim(4,3,5,4)", dimension(rs, MU), 9281250)

    check("C -> (2,2,4,2)", count_fillings(BranchingTriple(5, LAM, MU, NU)), 371)
    check("C -> (7,9,8,3)", count_fillings(BranchingTriple(5, LAM, MU, (7, 9, 8, 3))), 3)
    check("C -> (3,4,4,7)", count_fillings(BranchingTriple(5, LAM, MU, (3, 4, 4, 7))), 1427)

    nondeg = sum(1 for f in enumerate_fillings(BranchingTriple(5, LAM, MU, NU)) if not is_degenerate(f))
    check("non-degenerate fillings among 371", nondeg, 1)

    check(
        "Kostka sequence p=1..10",
        kostka_sequence(5, LAM, (0, 3, 0, 1), 10),
        [0, 103, 685, 1198, 1424, 1468, 1473, 1473, 1473, 1473],
    )
    check("Kostka value", kostka(5, LAM, (0, 3, 0, 1)), 1473)

    poly = stretch_polynomial(5, LAM, MU, NU)
    check(
        "stretch samples s=1..7",
        [evaluate(poly, s) for s in range(1, 8)],
        [371, 7983, 60849, 277394, 930849, 2548764, 6037641],
    )
    check(
        "stretch coefficients",
        poly.coeffs,
        (Fraction(1), Fraction(167, 20), Fraction(2407, 72), Fraction(1921, 24),
         Fraction(8401, 72), Fraction(11593, 120), Fraction(314, 9)),
    )
    check("value at scale 100", evaluate(poly, 100), 35866720654586)
    check("Horn volume", horn_volume(5, LAM, MU, NU).value, Fraction(314, 9))

    rho = (1, 1, 1, 1)
    for nu, lead in [(rho, Fraction(1, 8)), ((2, 1, 1, 2), Fraction(1, 36)), ((1, 2, 2, 1), Fraction(1, 360))]:
        check(f"leading coefficient for {nu}", horn_volume(5, rho, rho, nu).value, lead)

    combo = r_coefficients("A4")
    check(
        "R coefficients for SU(5)",
        combo.coeffs,
        {(0, 0, 0, 0): Fraction(1, 8), (1, 0, 0, 1): Fraction(1, 36), (0, 1, 1, 0): Fraction(1, 360)},
    )
    check("R normalization", combo.normalization(), 1)
    check("R for SU(3)", r_coefficients("A2").coeffs, {(0, 0): Fraction(1)})
    check("alternative R forms agree", verify_alternative_R5_forms(), True)

    check("kappa set A4", kappa_sets("A4").K,
          frozenset({(0, 1, 1, 0), (1, 0, 0, 1), (0, 0, 0, 0)}))
    check("kappa set sizes A5", (len(kappa_sets("A5").K), len(kappa_sets("A5").K_hat)), (11, 7))
    check("kappa set size A6", len(kappa_sets("A6").K), 21)
    check("E7 rho rings", (kappa_sets("E7").rho_ring, kappa_sets("E7").rho_hat_ring),
          ((1, 0, 2, 1, 1, 0, 1), (0, 1, 1, 2, 1, 0, 0)))

    check("SU(7) table verification", verify_r7().ok, True)
    check("G2 normalization", g2_combo().normalization(), 1)

    u = (0.7, 0.9)
    check("series close to 1 for SU(3)", abs(series_R(3, u, 400) - 1.0) < 1e-3, True)
    u5 = (0.7, 0.9, 1.1, 0.6)
    check("series close to character form for SU(5)",
          abs(series_R(5, u5, 16) - character_form_value(5, u5)) < 1e-5, True)

    if args.full:
        dec = tensor_decompose(5, LAM, MU)
        check("distinct components", len(dec), 5223)
        check("multiplicity range", (min(dec.values()), max(dec.values())), (1, 1657))
        check("total multiplicity", sum(dec.values()), 1043606)
        total = sum(c * dimension(rs, nu) for nu, c in dec.items())
        check("dimension sum rule", total, 5001750 * 9281250)

    failed = [name for name, ok in RESULTS if not ok]
    print(f"\n{len(RESULTS) - len(failed)}/{len(RESULTS)} checks passed in {time.time() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
