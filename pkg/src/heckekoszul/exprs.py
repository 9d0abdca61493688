"""Expression parsing, evaluation and canonical rendering.

Grammar (recursive descent):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' int)?
    atom   := 'v' | int | 'T[s' idx ']' | 'th[' coords ']' | '(' expr ')'
    coords := int (',' int)* | 'rho'

Indices in T[s...] are 1-based.  Negative powers are only defined for the
invertible atoms T[si] and v.  The optional leading '-' extends the plain
sum-of-terms grammar so that every canonical rendering re-parses.
"""

from __future__ import annotations

from .rootdata import RootDatum
from .poly import Laurent
from . import hecke, weyl
from .hecke import HeckeElt


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


# -- tokenizer -------------------------------------------------------------

_SIMPLE = {"+", "-", "*", "^", "(", ")", ",", "]"}


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _SIMPLE:
            tokens.append((c, c, i))
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif text.startswith("T[s", i):
            tokens.append(("T[s", None, i))
            i += 3
        elif text.startswith("th[", i):
            tokens.append(("th[", None, i))
            i += 3
        elif text.startswith("rho", i):
            tokens.append(("rho", None, i))
            i += 3
        elif c == "v":
            tokens.append(("v", None, i))
            i += 1
        else:
            raise ParseError("unexpected character %r" % c, i)
    tokens.append(("end", None, n))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[0]), tok[2])
        self.pos += 1
        return tok

    def parse_expr(self):
        signs, terms = [], []
        if self.peek()[0] == "-":
            self.take()
            signs.append(-1)
        else:
            signs.append(1)
        terms.append(self.parse_term())
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            signs.append(1 if op == "+" else -1)
            terms.append(self.parse_term())
        if len(terms) == 1 and signs[0] == 1:
            return terms[0]
        return ("sum", tuple(signs), tuple(terms))

    def parse_term(self):
        factors = [self.parse_factor()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.parse_factor())
        if len(factors) == 1:
            return factors[0]
        return ("prod", tuple(factors))

    def parse_factor(self):
        atom = self.parse_atom()
        if self.peek()[0] == "^":
            self.take()
            k = self.parse_int()
            return ("pow", atom, k)
        return atom

    def parse_int(self) -> int:
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        tok = self.take("int")
        return sign * tok[1]

    def parse_atom(self):
        kind, value, pos = self.peek()
        if kind == "v":
            self.take()
            return ("v",)
        if kind == "int":
            self.take()
            return ("int", value)
        if kind == "-":
            # signed integer literal inside a factor position
            self.take()
            tok = self.take("int")
            return ("int", -tok[1])
        if kind == "T[s":
            self.take()
            idx = self.take("int")[1]
            self.take("]")
            return ("T", idx - 1)
        if kind == "th[":
            self.take()
            if self.peek()[0] == "rho":
                self.take()
                self.take("]")
                return ("theta_rho",)
            coords = [self.parse_int()]
            while self.peek()[0] == ",":
                self.take()
                coords.append(self.parse_int())
            self.take("]")
            return ("theta", tuple(coords))
        if kind == "(":
            self.take()
            inner = self.parse_expr()
            self.take(")")
            return inner
        raise ParseError("expected an atom, found %r" % kind, pos)


def parse(text: str):
    """Parse an expression into a small tagged-tuple syntax tree."""
    parser = _Parser(text)
    tree = parser.parse_expr()
    parser.take("end")
    return tree


# -- evaluation --------------------------------------------------------------


def eval_expr(datum: RootDatum, expr) -> HeckeElt:
    """Evaluate a parsed expression to Bernstein normal form."""
    if isinstance(expr, str):
        expr = parse(expr)
    return _eval(datum, expr)


def _eval(datum: RootDatum, node) -> HeckeElt:
    tag = node[0]
    if tag == "v":
        return hecke.scalar(datum, Laurent.v())
    if tag == "int":
        return hecke.scalar(datum, node[1])
    if tag == "T":
        i = node[1]
        if not 0 <= i < datum.rank:
            raise ValueError("generator index s%d out of range" % (i + 1))
        return hecke.gen_T(datum, i)
    if tag == "theta":
        return hecke.gen_theta(datum, node[1])
    if tag == "theta_rho":
        return hecke.gen_theta(datum, datum.rho)
    if tag == "sum":
        signs, terms = node[1], node[2]
        out = hecke.zero(datum)
        for sign, term in zip(signs, terms):
            value = _eval(datum, term)
            out = out + (value if sign > 0 else -value)
        return out
    if tag == "prod":
        out = None
        for factor in node[1]:
            value = _eval(datum, factor)
            out = value if out is None else hecke.mul(out, value)
        return out
    if tag == "pow":
        base, k = node[1], node[2]
        if k >= 0:
            out = hecke.unit(datum)
            for _ in range(k):
                out = hecke.mul(out, _eval(datum, base))
            return out
        if base[0] == "T":
            inv = hecke.inv_Tw(datum, weyl.simple(datum, base[1]))
        elif base[0] == "v":
            inv = hecke.scalar(datum, Laurent.v(-1))
        else:
            raise ValueError("negative powers are only defined for T[si] and v")
        out = hecke.unit(datum)
        for _ in range(-k):
            out = hecke.mul(out, inv)
        return out
    raise ValueError("unknown expression node %r" % (tag,))


# -- rendering ------------------------------------------------------------------


def _render_coeff(c: Laurent) -> str | None:
    """Coefficient factor; None when the coefficient is 1."""
    if c == Laurent.one():
        return None
    if len(c.terms) == 1:
        exp, coeff = next(iter(c.terms.items()))
        if coeff > 0:
            if exp == 0:
                return str(coeff)
            vpart = "v" if exp == 1 else "v^%d" % exp
            return vpart if coeff == 1 else "%d*%s" % (coeff, vpart)
    return "(%s)" % c


def render(h: HeckeElt) -> str:
    """Canonical text form; always re-parses to an equal element."""
    if not h.terms:
        return "0"
    parts = []
    for (x, w), c in h.sorted_terms():
        factors = []
        if any(x):
            factors.append("th[%s]" % ",".join(str(a) for a in x))
        factors.extend("T[s%d]" % (i + 1) for i in w.word)
        coeff = _render_coeff(c)
        if coeff is not None:
            factors.append(coeff)
        parts.append("*".join(factors) if factors else "1")
    return " + ".join(parts)
