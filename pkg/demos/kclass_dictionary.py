#!/usr/bin/env python3
"""The K-class dictionary calculus and the two-route generator computation.

Classes on the Z side are combinations of the diagonal twists DiagN(x) and
the wall classes Y(i); on the CZ side of DiagG(x) and W(i).  Expanding
through the dictionaries lands in the Hecke algebra, and the atom-level
involution (with its v -> -v semilinearity and the shift-becomes-sign rule)
must produce the same answer as the algebra-level composite involution.
"""

from heckekoszul import make_root_datum, gen_T, render, apply
from heckekoszul.involutions import InvolutionKind
from heckekoszul.kclasses import (diag_class, expand, kappa_im_on_classes,
                                  replay_generator_images, t_dictionary_class,
                                  twist, y_class, w_class)

datum = make_root_datum("A2")

print("atom expansions:")
for cls, label in [(y_class(datum, 0), "Y(1)"), (w_class(datum, 0), "W(1)"),
                   (diag_class(datum, (1, -1)), "DiagN(1,-1)")]:
    print("  %-12s ->  %s" % (label, render(expand(cls))))
print()

print("the generator T_1 as a Z-side class and its image:")
z_class = t_dictionary_class(datum, 0)
print("  class:", z_class)
image = kappa_im_on_classes(z_class)
print("  image:", image)
print("  expanded:", render(expand(image)))
print("  algebra route:", render(apply(InvolutionKind.KAPPA_IM, gen_T(datum, 0))))
print()

print("the twist calculus: [1] is a sign, <1> is a factor of v:")
cls = y_class(datum, 1)
print("  [1]:", twist(cls, 1, 0))
print("  <1>:", twist(cls, 0, 1))
print()

report = replay_generator_images(datum, [(1, 0), (0, 2)])
for check in report["checks"]:
    print("  [%s] %s" % ("ok" if check["pass"] else "FAIL", check["name"]))
print("passed:", report["passed"])
