#!/usr/bin/env python3
"""A tour of the Hecke algebra arithmetic in Bernstein normal form.

Every element is a finite sum  theta_x * c(v) * T_w  with integer Laurent
coefficients; products are rewritten into this form exactly, with no
floating point anywhere.
"""

from heckekoszul import make_root_datum, gen_T, gen_theta, mul, inv_Tw, render
from heckekoszul import simple, verify_relations
from heckekoszul.poly import Laurent

datum = make_root_datum("A2")
print("root datum:", datum.to_json())
print()

T1, T2 = gen_T(datum, 0), gen_T(datum, 1)
print("the quadratic relation turns T^2 into a sum:")
print("  T[s1]*T[s1] =", render(mul(T1, T1)))
print()

print("a braid product is length-additive, so it stays a single term:")
print("  T[s1]*T[s2]*T[s1] =", render(mul(mul(T1, T2), T1)))
print()

theta = gen_theta(datum, (1, 0))
print("moving a T past a theta produces the cross-commutation correction:")
print("  T[s1]*th[1,0] =", render(mul(T1, theta)))
print("  th[1,0]*T[s1] =", render(mul(theta, T1)))
print()

print("inverses of the T_w basis elements are Laurent-coefficient sums:")
w = simple(datum, 0)
print("  T[s1]^-1 =", render(inv_Tw(datum, w)))
print("  check:", render(mul(inv_Tw(datum, w), T1)))
print()

print("the full defining-relation suite on a few sample weights:")
report = verify_relations(datum, [(1, 0), (0, 1), (2, -1), (-1, 3), (1, 1)])
for check in report["checks"]:
    print("  [%s] %s" % ("ok" if check["pass"] else "FAIL", check["name"]))
print("passed:", report["passed"])
