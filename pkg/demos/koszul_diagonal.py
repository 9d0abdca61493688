#!/usr/bin/env python3
"""The duality engine over a point, on the diagonal configuration.

For V of small dimension and a subspace F, the structure sheaf of the
diagonal copy of F inside F x F is pushed through the duality functor and
the diagonal/anti-diagonal sign automorphism; its cohomology must be the
structure sheaf of the diagonal copy of the orthogonal subspace, with the
correct bigraded dimensions and generator actions.  The alternating
dimension sum is the class-level shadow: it never changes when passing to
cohomology.
"""

from heckekoszul import euler_class, cohomology
from heckekoszul.diagonal import (DiagonalSetup, check_diagonal,
                                  check_euler_lemma, check_shift_rule,
                                  random_dg_module, structure_sheaf)
from heckekoszul.koszul import kappa_point
import random

diag = DiagonalSetup(2, [[1, 0]])
sheaf = structure_sheaf(diag, 8)
print("O of the diagonal F (dim V = 2, dim F = 1), dimensions by (p,q):")
print(" ", sheaf.dims_table())
print("its class:", euler_class(sheaf))
print()

image = kappa_point(diag.setup, sheaf, 6)
h = cohomology(image, with_actions=False)
print("cohomology of the duality image, dimensions by (p,q):")
print(" ", h.dims_table())
print("(one line of dimensions in cohomological degree zero: functions on V/F)")
print()

for dim_v in (1, 2, 3):
    for dim_f in range(dim_v + 1):
        report = check_diagonal(dim_v, dim_f, cutoff=6)
        print("check-diagonal dimV=%d dimF=%d: %s"
              % (dim_v, dim_f, "PASS" if report["passed"] else "FAIL"))
print()

print("chain-level twist-shift exchange:")
report = check_shift_rule(diag, 6)
for check in report["checks"]:
    print("  [%s] %s" % ("ok" if check["pass"] else "FAIL", check["name"]))
print()

rng = random.Random(0)
module = random_dg_module(rng)
print("a random bounded dg-module has class", euler_class(module))
print("its cohomology has class        ", euler_class(cohomology(module, with_actions=False)))
print("euler lemma on 50 random modules:", check_euler_lemma(1, 50)["passed"])
