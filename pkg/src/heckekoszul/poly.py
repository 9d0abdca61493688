"""Exact coefficient arithmetic.

``Laurent`` is a sparse Laurent polynomial in v over the integers (Python
ints, so coefficients never overflow).  ``LatticePoly`` is the group algebra
of the weight lattice with Laurent coefficients; the basis element attached
to a weight x is written theta_x and multiplies by theta_x * theta_y =
theta_{x+y}.  Zero coefficients are pruned on every write so that equality is
structural equality.
"""

from __future__ import annotations

from .rootdata import RootDatum, wadd, wneg, wzero


class Laurent:
    """Sparse Laurent polynomial in v with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    data[int(exp)] = int(coeff)
        self.terms = data

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def of(n: int) -> "Laurent":
        return Laurent({0: n})

    @staticmethod
    def v(exp: int = 1, coeff: int = 1) -> "Laurent":
        return Laurent({exp: coeff})

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp, 0) + coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        result = Laurent.__new__(Laurent)
        result.terms = out
        return result

    def __neg__(self) -> "Laurent":
        result = Laurent.__new__(Laurent)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Laurent.zero()
            result = Laurent.__new__(Laurent)
            result.terms = {e: c * other for e, c in self.terms.items()}
            return result
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        result = Laurent.__new__(Laurent)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative powers only defined for monomials +-v^k")
        result = Laurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def negate_v(self) -> "Laurent":
        """Substitute v -> -v: the coefficient of v^k picks up (-1)^k."""
        result = Laurent.__new__(Laurent)
        result.terms = {e: (-c if e % 2 else c) for e, c in self.terms.items()}
        return result

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return isinstance(other, Laurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            coeff = self.terms[exp]
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                vpart = "v" if exp == 1 else "v^%d" % exp
                body = vpart if mag == 1 else "%d*%s" % (mag, vpart)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = first_body if first_sign == "+" else "-" + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    __repr__ = __str__


V = Laurent.v()
V_INV = Laurent.v(-1)
V_MINUS_VINV = V - V_INV


def laurent_eval_negate_v(p: Laurent) -> Laurent:
    return p.negate_v()


class LatticePoly:
    """Element of the weight-lattice group algebra over Laurent polynomials."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        data = {}
        if terms:
            for x, c in terms.items():
                if c:
                    data[tuple(x)] = c
        self.terms = data

    @staticmethod
    def zero(rank: int) -> "LatticePoly":
        return LatticePoly(rank)

    @staticmethod
    def theta(x, coeff: Laurent | None = None) -> "LatticePoly":
        x = tuple(x)
        return LatticePoly(len(x), {x: coeff if coeff is not None else Laurent.one()})

    @staticmethod
    def one(rank: int) -> "LatticePoly":
        return LatticePoly.theta(wzero(rank))

    def __add__(self, other: "LatticePoly") -> "LatticePoly":
        out = dict(self.terms)
        for x, c in other.terms.items():
            s = out.get(x)
            s = c if s is None else s + c
            if s:
                out[x] = s
            else:
                out.pop(x, None)
        result = LatticePoly.__new__(LatticePoly)
        result.rank, result.terms = self.rank, out
        return result

    def __neg__(self) -> "LatticePoly":
        result = LatticePoly.__new__(LatticePoly)
        result.rank = self.rank
        result.terms = {x: -c for x, c in self.terms.items()}
        return result

    def __sub__(self, other: "LatticePoly") -> "LatticePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            scale = Laurent.of(other) if isinstance(other, int) else other
            out = {}
            for x, c in self.terms.items():
                s = c * scale
                if s:
                    out[x] = s
            result = LatticePoly.__new__(LatticePoly)
            result.rank, result.terms = self.rank, out
            return result
        out: dict = {}
        for x, c1 in self.terms.items():
            for y, c2 in other.terms.items():
                z = wadd(x, y)
                s = out.get(z)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[z] = s
                else:
                    del out[z]
        result = LatticePoly.__new__(LatticePoly)
        result.rank, result.terms = self.rank, out
        return result

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, LatticePoly) and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset((x, c) for x, c in self.terms.items()))

    def to_json(self) -> dict:
        return {",".join(str(a) for a in x): c.to_json()
                for x, c in sorted(self.terms.items())}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for x in sorted(self.terms):
            c = self.terms[x]
            theta = "th[%s]" % ",".join(str(a) for a in x)
            parts.append("%s*(%s)" % (theta, c))
        return " + ".join(parts)

    __repr__ = __str__


def bl_sum(datum: RootDatum, x, i: int) -> LatticePoly:
    """Closed form of (theta_x - theta_{s_i x}) / (1 - theta_{-alpha_i}).

    With n = <x, alpha_i^vee> this is the geometric sum
    sum_{k=0}^{n-1} theta_{x - k alpha_i} for n > 0, zero for n = 0, and
    -sum_{k=1}^{-n} theta_{x + k alpha_i} for n < 0.  Multiplying the result
    by (1 - theta_{-alpha_i}) recovers theta_x - theta_{s_i x} exactly.
    """
    x = datum.check_weight(x)
    n = datum.pairing(x, i)
    alpha = datum.simple_roots[i]
    terms: dict = {}
    if n > 0:
        z = x
        for _ in range(n):
            terms[z] = Laurent.one()
            z = tuple(a - b for a, b in zip(z, alpha))
    elif n < 0:
        z = x
        for _ in range(-n):
            z = tuple(a + b for a, b in zip(z, alpha))
            terms[z] = Laurent.of(-1)
    return LatticePoly(datum.rank, terms)
