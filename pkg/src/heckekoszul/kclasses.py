"""Formal K-theory classes of the two Steinberg-type fiber products.

A ``KClass`` is a Laurent-coefficient combination of atom symbols.  On the
Z side the atoms are

    DiagN(x)      -- a line-bundle twist of the diagonal, expanding to theta_x
    Y(i, A) / Y(i, B) -- the two line-bundle twists of the wall correspondence
                     over the i-th simple root; both expand to -v T_i - 1

and on the CZ side

    DiagG(x)      -- diagonal twist, expanding to theta_x
    W(i)          -- the wall correspondence, expanding to -v T_i + v^2.

The two Y twists are kept as distinct atoms with equal expansion: the
identification of their classes is an explicit axiom of this calculus, not a
computed fact.  The map ``kappa_im_on_classes`` rewrites Z-side atoms to
CZ-side atoms (the one-step cohomological shift becomes a sign) and twists
coefficients by v -> -v; ``replay_generator_images`` replays the generator
computation along both the class-level and the algebra-level routes and
insists they agree.
"""

from __future__ import annotations

from .rootdata import RootDatum, wneg, wzero
from .poly import Laurent
from . import hecke, involutions
from .hecke import HeckeElt

Z_SIDE = "Z"
CZ_SIDE = "CZ"

_Z_ATOMS = ("DiagN", "Y")
_CZ_ATOMS = ("DiagG", "W")


def _atom_side(atom) -> str:
    return Z_SIDE if atom[0] in _Z_ATOMS else CZ_SIDE


class KClass:
    """Formal combination of atoms with Laurent coefficients, on one side."""

    __slots__ = ("datum", "side", "atoms")

    def __init__(self, datum: RootDatum, side: str, atoms=None):
        if side not in (Z_SIDE, CZ_SIDE):
            raise ValueError("side must be %r or %r" % (Z_SIDE, CZ_SIDE))
        self.datum = datum
        self.side = side
        data = {}
        if atoms:
            for atom, c in atoms.items():
                if c:
                    if _atom_side(atom) != side:
                        raise ValueError("atom %r does not live on side %s" % (atom, side))
                    data[atom] = c
        self.atoms = data

    def __add__(self, other: "KClass") -> "KClass":
        if self.side != other.side:
            raise ValueError("cannot add classes on different sides")
        out = dict(self.atoms)
        for atom, c in other.atoms.items():
            s = out.get(atom)
            s = c if s is None else s + c
            if s:
                out[atom] = s
            else:
                out.pop(atom, None)
        return KClass(self.datum, self.side, out)

    def __neg__(self) -> "KClass":
        return KClass(self.datum, self.side, {a: -c for a, c in self.atoms.items()})

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def scale(self, c) -> "KClass":
        if isinstance(c, int):
            c = Laurent.of(c)
        return KClass(self.datum, self.side,
                      {a: c0 * c for a, c0 in self.atoms.items()})

    def __eq__(self, other):
        return (isinstance(other, KClass) and self.side == other.side
                and self.atoms == other.atoms)

    def __hash__(self):
        return hash((self.side, frozenset(self.atoms.items())))

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "atoms": [{"atom": atom_text(a), "coeff": c.to_json()}
                      for a, c in sorted(self.atoms.items(), key=lambda kv: atom_text(kv[0]))],
        }

    def __str__(self):
        if not self.atoms:
            return "0"
        return " + ".join("(%s)*%s" % (c, atom_text(a))
                          for a, c in sorted(self.atoms.items(), key=lambda kv: atom_text(kv[0])))

    __repr__ = __str__


def atom_text(atom) -> str:
    kind = atom[0]
    if kind == "DiagN" or kind == "DiagG":
        return "%s(%s)" % (kind, ",".join(str(c) for c in atom[1]))
    if kind == "Y":
        return "Y(%d;%s)" % (atom[1] + 1, atom[2])
    if kind == "W":
        return "W(%d)" % (atom[1] + 1)
    raise ValueError("unknown atom %r" % (atom,))


def diag_class(datum: RootDatum, x, side: str = Z_SIDE) -> KClass:
    x = datum.check_weight(x)
    kind = "DiagN" if side == Z_SIDE else "DiagG"
    return KClass(datum, side, {(kind, x): Laurent.one()})


def y_class(datum: RootDatum, i: int, twist: str = "A") -> KClass:
    if not 0 <= i < datum.rank:
        raise IndexError("simple-root index out of range")
    if twist not in ("A", "B"):
        raise ValueError("twist must be 'A' or 'B'")
    return KClass(datum, Z_SIDE, {("Y", i, twist): Laurent.one()})


def w_class(datum: RootDatum, i: int) -> KClass:
    if not 0 <= i < datum.rank:
        raise IndexError("simple-root index out of range")
    return KClass(datum, CZ_SIDE, {("W", i): Laurent.one()})


def t_dictionary_class(datum: RootDatum, i: int, side: str = Z_SIDE) -> KClass:
    """The dictionary image of the generator T_i on the requested side.

    Z side:  T_i = -v^{-1} [Y(i)] - v^{-1} [DiagN(0)]
    CZ side: T_i = -v^{-1} [W(i)] + v [DiagG(0)]
    """
    vinv = Laurent.v(-1)
    zero_wt = wzero(datum.rank)
    if side == Z_SIDE:
        return (y_class(datum, i, "A").scale(-vinv)
                + diag_class(datum, zero_wt, Z_SIDE).scale(-vinv))
    return (w_class(datum, i).scale(-vinv)
            + diag_class(datum, zero_wt, CZ_SIDE).scale(Laurent.v()))


def theta_dictionary_class(datum: RootDatum, x, side: str = Z_SIDE) -> KClass:
    return diag_class(datum, x, side)


_EXPANSIONS = {
    # atom -> (theta weight or None, T index or None, laurent for T, laurent for unit)
}


def expand(c: KClass) -> HeckeElt:
    """Expand a class into the Hecke algebra through the atom dictionary.

    DiagN(x), DiagG(x) -> theta_x;  Y(i, *) -> -v T_i - 1;  W(i) -> -v T_i + v^2.
    The atom expansions invert the dictionary's generator assignments.
    """
    datum = c.datum
    out = hecke.zero(datum)
    minus_v = Laurent.v(1, -1)
    for atom, coeff in c.atoms.items():
        kind = atom[0]
        if kind in ("DiagN", "DiagG"):
            piece = hecke.gen_theta(datum, atom[1])
        elif kind == "Y":
            piece = hecke.gen_T(datum, atom[1]).scale(minus_v) - hecke.unit(datum)
        elif kind == "W":
            piece = (hecke.gen_T(datum, atom[1]).scale(minus_v)
                     + hecke.scalar(datum, Laurent.v(2)))
        else:
            raise ValueError("unknown atom %r" % (atom,))
        out = out + piece.scale(coeff)
    return out


def twist(c: KClass, shift_m: int, internal_n: int) -> KClass:
    """Cohomological shift [m] (a sign (-1)^m) and internal twist <n> (v^n)."""
    factor = Laurent.v(internal_n, -1 if shift_m % 2 else 1)
    return c.scale(factor)


def kappa_im_on_classes(c: KClass) -> KClass:
    """Atom-level composite involution, Z side to CZ side.

    DiagN(x) -> DiagG(-x); Y(i, A|B) -> -W(i); coefficients get v -> -v.
    """
    if c.side != Z_SIDE:
        raise ValueError("kappa_im_on_classes expects a Z-side class")
    out: dict = {}
    for atom, coeff in c.atoms.items():
        coeff = coeff.negate_v()
        if atom[0] == "DiagN":
            key, sign = ("DiagG", wneg(atom[1])), 1
        else:
            key, sign = ("W", atom[1]), -1
        s = out.get(key)
        add = coeff * sign
        s = add if s is None else s + add
        if s:
            out[key] = s
        else:
            del out[key]
    return KClass(c.datum, CZ_SIDE, out)


def kappa_im_inverse_on_classes(c: KClass) -> KClass:
    """Inverse dictionary direction, CZ side back to Z side (B twist)."""
    if c.side != CZ_SIDE:
        raise ValueError("expects a CZ-side class")
    out: dict = {}
    for atom, coeff in c.atoms.items():
        coeff = coeff.negate_v()
        if atom[0] == "DiagG":
            key, sign = ("DiagN", wneg(atom[1])), 1
        else:
            key, sign = ("Y", atom[1], "B"), -1
        s = out.get(key)
        add = coeff * sign
        s = add if s is None else s + add
        if s:
            out[key] = s
        else:
            del out[key]
    return KClass(c.datum, Z_SIDE, out)


def replay_generator_images(datum: RootDatum, sample_weights=()) -> dict:
    """Replay the generator computation along two independent routes.

    For each simple root: take the Z-side dictionary class of T_i, push it
    through the atom-level involution, expand on the CZ side, and compare
    with (1) the expected T_i - v + v^{-1} and (2) the algebra-level
    composite involution applied to T_i.  Same for theta_x on samples.
    """
    checks = []
    v = Laurent.v()
    vinv = Laurent.v(-1)
    kim = involutions.InvolutionKind.KAPPA_IM

    for i in range(datum.rank):
        z_class = t_dictionary_class(datum, i, Z_SIDE)
        assert expand(z_class) == hecke.gen_T(datum, i)  # dictionary sanity
        image = kappa_im_on_classes(z_class)
        class_route = expand(image)
        expected = (hecke.gen_T(datum, i) - hecke.scalar(datum, v)
                    + hecke.scalar(datum, vinv))
        algebra_route = involutions.apply(kim, hecke.gen_T(datum, i))
        checks.append({"name": "T_%d class route = T - v + v^-1" % (i + 1),
                       "pass": class_route == expected})
        checks.append({"name": "T_%d class route = algebra route" % (i + 1),
                       "pass": class_route == algebra_route})

    weights = [datum.check_weight(x) for x in sample_weights] or [datum.rho]
    for x in weights:
        image = kappa_im_on_classes(diag_class(datum, x, Z_SIDE))
        class_route = expand(image)
        algebra_route = involutions.apply(kim, hecke.gen_theta(datum, x))
        ok = (class_route == hecke.gen_theta(datum, wneg(x))
              and class_route == algebra_route)
        checks.append({"name": "theta path x=%s" % (x,), "pass": ok})

    return {
        "suite": "kclass",
        "type": datum.type_string,
        "checks": checks,
        "passed": all(c["pass"] for c in checks),
    }
