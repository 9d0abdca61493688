"""The extended affine Hecke algebra in Bernstein normal form.

Elements are sparse sums  sum theta_x * c_{x,w}(v) * T_w  with the lattice
part on the left.  Multiplication rewrites T-letters rightward past theta's
using the cross-commutation rule

    T_s * theta_z  =  theta_{s(z)} * T_s + (v - v^{-1}) * bl_sum(z, s)

and then folds the remaining T-letters with the descent rule
T_w * T_s = T_{ws}, plus (v - v^{-1}) T_w when s is a descent of w.  The
quadratic relation enters through T_s^{-1} = T_s - (v - v^{-1}).

Rewrites are memoised per root datum, keyed by (WeylElt, weight); the caches
never change results, only speed.
"""

from __future__ import annotations

from .rootdata import RootDatum, wadd, wneg, wzero
from .poly import Laurent, LatticePoly, V_MINUS_VINV, bl_sum
from . import weyl
from .weyl import WeylElt


class HeckeElt:
    """Sparse Bernstein-basis element: dict (weight, WeylElt) -> Laurent."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms=None):
        self.datum = datum
        data = {}
        if terms:
            for key, c in terms.items():
                if c:
                    data[key] = c
        self.terms = data

    # -- ring structure -------------------------------------------------------

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        _check_datum(self, other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw(self.datum, out)

    def __neg__(self) -> "HeckeElt":
        return _raw(self.datum, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "HeckeElt":
        if isinstance(c, int):
            c = Laurent.of(c)
        out = {}
        for key, c0 in self.terms.items():
            s = c0 * c
            if s:
                out[key] = s
        return _raw(self.datum, out)

    def theta_shift(self, x) -> "HeckeElt":
        """Left multiplication by theta_x (a pure re-keying)."""
        x = self.datum.check_weight(x)
        return _raw(self.datum,
                    {(wadd(x, z), w): c for (z, w), c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, HeckeElt)
                and self.datum.same_lattice(other.datum)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].word))

    def to_json(self) -> dict:
        return {"terms": [
            {"weight": list(x), "word": list(w.word), "coeff": c.to_json()}
            for (x, w), c in self.sorted_terms()
        ]}

    def __str__(self):
        from .exprs import render
        return render(self)

    def __repr__(self):
        return "HeckeElt(%s)" % str(self)


def _raw(datum: RootDatum, terms: dict) -> HeckeElt:
    elt = HeckeElt.__new__(HeckeElt)
    elt.datum = datum
    elt.terms = terms
    return elt


def _check_datum(a: HeckeElt, b: HeckeElt):
    if not a.datum.same_lattice(b.datum):
        raise ValueError("Hecke elements over different root data")


# -- generators ----------------------------------------------------------------


def unit(datum: RootDatum) -> HeckeElt:
    return _raw(datum, {(wzero(datum.rank), weyl.identity(datum)): Laurent.one()})


def zero(datum: RootDatum) -> HeckeElt:
    return _raw(datum, {})


def scalar(datum: RootDatum, p) -> HeckeElt:
    if isinstance(p, int):
        p = Laurent.of(p)
    return unit(datum).scale(p)


def gen_T(datum: RootDatum, i: int) -> HeckeElt:
    return _raw(datum, {(wzero(datum.rank), weyl.simple(datum, i)): Laurent.one()})


def gen_Tw(datum: RootDatum, w: WeylElt) -> HeckeElt:
    return _raw(datum, {(wzero(datum.rank), w): Laurent.one()})


def gen_theta(datum: RootDatum, x) -> HeckeElt:
    x = datum.check_weight(x)
    return _raw(datum, {(x, weyl.identity(datum)): Laurent.one()})


def gen_t(datum: RootDatum, i: int) -> HeckeElt:
    """t_alpha = v * T_alpha."""
    return gen_T(datum, i).scale(Laurent.v())


# -- multiplication -------------------------------------------------------------


def _t_mul_letter(datum: RootDatum, w: WeylElt, i: int) -> dict:
    """T_w * T_{s_i} as dict WeylElt -> Laurent, via the descent rule."""
    ws = weyl.compose(w, weyl.simple(datum, i))
    if weyl.descent(w, i):
        return {ws: Laurent.one(), w: V_MINUS_VINV}
    return {ws: Laurent.one()}


def _t_mul(datum: RootDatum, w: WeylElt, u: WeylElt) -> dict:
    """T_w * T_u as dict WeylElt -> Laurent (memoised)."""
    if u.is_identity():
        return {w: Laurent.one()}
    key = (w, u)
    cached = datum._tmul_cache.get(key)
    if cached is not None:
        return cached
    j = u.word[0]
    rest = weyl.compose(weyl.simple(datum, j), u)  # s_j * u, one letter shorter
    out: dict = {}
    for w2, c2 in _t_mul_letter(datum, w, j).items():
        for w3, c3 in _t_mul(datum, w2, rest).items():
            s = out.get(w3)
            prod = c2 * c3
            s = prod if s is None else s + prod
            if s:
                out[w3] = s
            else:
                del out[w3]
    datum._tmul_cache[key] = out
    return out


def _push_theta(datum: RootDatum, w: WeylElt, y) -> dict:
    """Normal form of T_w * theta_y as dict (weight, WeylElt) -> Laurent."""
    if w.is_identity():
        return {(y, w): Laurent.one()}
    key = (w, y)
    cached = datum._push_cache.get(key)
    if cached is not None:
        return cached
    # strip the rightmost letter s of the canonical word: w = w1 * s
    s = w.word[-1]
    w1 = weyl.compose(w, weyl.simple(datum, s))
    out: dict = {}
    # T_{w1} * theta_{s(y)} * T_s
    for (z, u), c in _push_theta(datum, w1, datum.reflect(y, s)).items():
        for u2, c2 in _t_mul_letter(datum, u, s).items():
            k = (z, u2)
            s0 = out.get(k)
            prod = c * c2
            s0 = prod if s0 is None else s0 + prod
            if s0:
                out[k] = s0
            else:
                del out[k]
    # (v - v^{-1}) * T_{w1} * bl_sum(y, s)
    for z, cz in bl_sum(datum, y, s).terms.items():
        coeff = V_MINUS_VINV * cz
        for (z2, u), c in _push_theta(datum, w1, z).items():
            k = (z2, u)
            s0 = out.get(k)
            prod = coeff * c
            s0 = prod if s0 is None else s0 + prod
            if s0:
                out[k] = s0
            else:
                del out[k]
    datum._push_cache[key] = out
    return out


def mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in Bernstein normal form."""
    _check_datum(a, b)
    datum = a.datum
    out: dict = {}
    for (x, w), c in a.terms.items():
        for (y, u), d in b.terms.items():
            cd = c * d
            for (z, w2), c2 in _push_theta(datum, w, y).items():
                xz = wadd(x, z)
                lead = cd * c2
                for w3, c3 in _t_mul(datum, w2, u).items():
                    k = (xz, w3)
                    s = out.get(k)
                    prod = lead * c3
                    s = prod if s is None else s + prod
                    if s:
                        out[k] = s
                    else:
                        del out[k]
    return _raw(datum, out)


def inv_Tw(datum: RootDatum, w: WeylElt) -> HeckeElt:
    """Inverse of T_w: reversed product of T_s^{-1} = T_s - (v - v^{-1})."""
    cached = datum._inv_tw_cache.get(w)
    if cached is not None:
        return cached
    result = unit(datum)
    for i in reversed(w.word):
        step = gen_T(datum, i) - scalar(datum, V_MINUS_VINV)
        result = mul(result, step)
    datum._inv_tw_cache[w] = result
    return result


# -- relation suite ---------------------------------------------------------------


def _braid_products(datum: RootDatum, i: int, j: int):
    n = datum.coxeter_orders[i][j]
    left = right = unit(datum)
    for k in range(n):
        left = mul(left, gen_T(datum, i if k % 2 == 0 else j))
        right = mul(right, gen_T(datum, j if k % 2 == 0 else i))
    return left, right


def verify_relations(datum: RootDatum, sample_weights) -> dict:
    """Check the defining presentation as exact identities of normal forms.

    Returns a report dict; failures carry a witness string instead of raising.
    """
    checks = []

    def record(name, ok, witness=None):
        entry = {"name": name, "pass": bool(ok)}
        if not ok and witness is not None:
            entry["witness"] = witness
        checks.append(entry)

    weights = [datum.check_weight(x) for x in sample_weights]

    # (i) braid relations, one per unordered pair
    for i in range(datum.rank):
        for j in range(i + 1, datum.rank):
            left, right = _braid_products(datum, i, j)
            record("(i) braid s%d,s%d n=%d" % (i + 1, j + 1, datum.coxeter_orders[i][j]),
                   left == right)

    # (ii) theta_0 = 1
    record("(ii) theta_0 = 1", gen_theta(datum, wzero(datum.rank)) == unit(datum))

    # (iii) theta_x theta_y = theta_{x+y} on sampled pairs
    ok, witness = True, None
    for k in range(len(weights) - 1):
        x, y = weights[k], weights[k + 1]
        if mul(gen_theta(datum, x), gen_theta(datum, y)) != gen_theta(datum, wadd(x, y)):
            ok, witness = False, "x=%r y=%r" % (x, y)
            break
    record("(iii) theta_x theta_y = theta_{x+y}", ok, witness)

    # (iv) commuting case: s_i(x) = x
    ok, witness, hits = True, None, 0
    for x in weights:
        for i in range(datum.rank):
            if datum.pairing(x, i) == 0:
                hits += 1
                if mul(gen_T(datum, i), gen_theta(datum, x)) != \
                        mul(gen_theta(datum, x), gen_T(datum, i)):
                    ok, witness = False, "x=%r i=%d" % (x, i)
    record("(iv) T theta = theta T when s(x)=x [%d cases]" % hits, ok, witness)

    # (v) theta_x = T theta_{x-alpha} T when <x, alpha^vee> = 1
    ok, witness, hits = True, None, 0
    for x in weights:
        for i in range(datum.rank):
            if datum.pairing(x, i) == 1:
                hits += 1
                lhs = gen_theta(datum, x)
                shifted = tuple(a - b for a, b in zip(x, datum.simple_roots[i]))
                rhs = mul(mul(gen_T(datum, i), gen_theta(datum, shifted)), gen_T(datum, i))
                if lhs != rhs:
                    ok, witness = False, "x=%r i=%d" % (x, i)
    record("(v) theta_x = T theta_{x-alpha} T [%d cases]" % hits, ok, witness)

    # (vi) quadratic relation (T + v^{-1})(T - v) = 0 for every i
    for i in range(datum.rank):
        lhs = mul(gen_T(datum, i) + scalar(datum, Laurent.v(-1)),
                  gen_T(datum, i) - scalar(datum, Laurent.v()))
        record("(vi) quadratic i=%d" % (i + 1), lhs.is_zero())

    return {
        "suite": "relations",
        "type": datum.type_string,
        "samples": len(weights),
        "checks": checks,
        "passed": all(c["pass"] for c in checks),
    }
