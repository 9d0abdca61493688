#!/usr/bin/env python3
"""The three involutions, side by side.

IM negates-and-inverts the T generators and flips lattice weights; iota
fixes t = v T and the weights while sending v to -v; their composite is
computed literally as the composition, and lands on the closed generator
formulas T -> T - v + v^{-1}, theta_x -> theta_{-x}, t -> -t + v^2 - 1.
"""

from heckekoszul import make_root_datum, gen_T, gen_theta, gen_t, render, apply
from heckekoszul.involutions import InvolutionKind, check_theorem

datum = make_root_datum("B2")

for name, kind in [("IM", InvolutionKind.IM), ("iota", InvolutionKind.IOTA),
                   ("kappa_im", InvolutionKind.KAPPA_IM)]:
    print("--", name)
    for label, elt in [("T[s1]", gen_T(datum, 0)),
                       ("th[1,0]", gen_theta(datum, (1, 0))),
                       ("t_1 = v*T[s1]", gen_t(datum, 0))]:
        print("   %-14s ->  %s" % (label, render(apply(kind, elt))))
    print()

print("generator identities for the composite, including -q t^{-1}:")
report = check_theorem(datum, [(1, 0), (0, 1), (2, 2)])
for check in report["checks"]:
    print("  [%s] %s" % ("ok" if check["pass"] else "FAIL", check["name"]))
print("passed:", report["passed"])
