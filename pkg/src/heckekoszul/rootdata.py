"""Root-system and weight-lattice data for simply-connected semisimple groups.

All weights live in fundamental-weight coordinates, so a weight is a plain
tuple of integers of length ``rank`` and the pairing with a simple coroot is
just a coordinate read.  Simple roots are the columns of the Cartan matrix.
Products of simple types ("A1xA1", "A2xB2", ...) are supported through
block-diagonal Cartan matrices.
"""

from __future__ import annotations

import re
from fractions import Fraction

Weight = tuple  # tuple[int, ...], length == datum rank


def wadd(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def wsub(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def wneg(x: Weight) -> Weight:
    return tuple(-a for a in x)


def wzero(rank: int) -> Weight:
    return (0,) * rank


def _chain_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def _cartan_simple(letter: str, n: int):
    """Cartan matrix of one simple type, entries c[i][j] = <alpha_j, alpha_i^vee>."""
    if letter == "A":
        if n < 1:
            raise ValueError("type A needs rank >= 1")
        edges = _chain_edges(n)
        special = {}
    elif letter == "B":
        if n < 2:
            raise ValueError("type B needs rank >= 2")
        edges = _chain_edges(n)
        # alpha_n is the short root: <alpha_{n-1}, alpha_n^vee> = -2
        special = {(n - 1, n - 2): -2}
    elif letter == "C":
        if n < 2:
            raise ValueError("type C needs rank >= 2")
        edges = _chain_edges(n)
        special = {(n - 2, n - 1): -2}
    elif letter == "D":
        if n < 4:
            raise ValueError("type D needs rank >= 4")
        edges = _chain_edges(n - 1) + [(n - 3, n - 1)]
        special = {}
    elif letter == "E":
        if n not in (6, 7, 8):
            raise ValueError("type E needs rank 6, 7 or 8")
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if n >= 7:
            edges.append((5, 6))
        if n == 8:
            edges.append((6, 7))
        special = {}
    elif letter == "F":
        if n != 4:
            raise ValueError("type F needs rank 4")
        edges = _chain_edges(4)
        special = {(2, 1): -2}
    elif letter == "G":
        if n != 2:
            raise ValueError("type G needs rank 2")
        edges = [(0, 1)]
        special = {(1, 0): -3}
    else:
        raise ValueError("unknown type letter %r" % letter)

    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        cartan[i][i] = 2
    for i, j in edges:
        cartan[i][j] = -1
        cartan[j][i] = -1
    for (i, j), value in special.items():
        cartan[i][j] = value
    return cartan


_BRAID_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


def _invert_cartan(cartan):
    """Exact inverse of the Cartan matrix (Gauss-Jordan over Fraction)."""
    n = len(cartan)
    aug = [[Fraction(cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RootDatum:
    """Immutable Cartan/weight-lattice data for a (product of) simple type(s).

    Weights are tuples in fundamental-weight coordinates; ``simple_roots[j]``
    is column j of the Cartan matrix, ``rho`` is the all-ones vector, and
    ``positive_roots`` is computed once by reflection closure.
    """

    def __init__(self, type_string: str, cartan):
        rank = len(cartan)
        if rank == 0:
            raise ValueError("rank 0 root datum")
        for i in range(rank):
            if cartan[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(rank):
                if i != j and cartan[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise ValueError("Cartan matrix zero pattern must be symmetric")
                if i != j and cartan[i][j] * cartan[j][i] not in _BRAID_ORDER:
                    raise ValueError("not a finite-type Cartan matrix")
        self.type_string = type_string
        self.rank = rank
        self.cartan = tuple(tuple(row) for row in cartan)
        self.simple_roots = tuple(tuple(cartan[i][j] for i in range(rank)) for j in range(rank))
        self.rho = (1,) * rank
        self.coxeter_orders = tuple(
            tuple(1 if i == j else _BRAID_ORDER[cartan[i][j] * cartan[j][i]] for j in range(rank))
            for i in range(rank)
        )
        self._inv_cartan = _invert_cartan(cartan)
        self.positive_roots = self._close_positive_roots()
        self.n_pos_roots = len(self.positive_roots)
        self._pos_set = frozenset(self.positive_roots)
        # per-datum memo tables, filled lazily by the weyl/hecke layers
        self._weyl_intern: dict = {}
        self._weyl_elements = None
        self._push_cache: dict = {}
        self._tmul_cache: dict = {}
        self._inv_tw_cache: dict = {}

    # -- basic operations ---------------------------------------------------

    def pairing(self, x: Weight, i: int) -> int:
        """<x, alpha_i^vee>; a plain coordinate read in these coordinates."""
        if not 0 <= i < self.rank:
            raise IndexError("simple-root index out of range")
        return x[i]

    def reflect(self, x: Weight, i: int) -> Weight:
        """Simple reflection s_i(x) = x - <x, alpha_i^vee> alpha_i."""
        n = self.pairing(x, i)
        if n == 0:
            return tuple(x)
        alpha = self.simple_roots[i]
        return tuple(a - n * b for a, b in zip(x, alpha))

    def root_coordinates(self, x: Weight):
        """Coordinates of x in the simple-root basis (exact Fractions)."""
        return tuple(
            sum(self._inv_cartan[i][j] * x[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def is_positive_root(self, x: Weight) -> bool:
        return x in self._pos_set

    def _close_positive_roots(self):
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(self.rank):
                    gamma = self.reflect(beta, i)
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        positives = [b for b in seen if all(c >= 0 for c in self.root_coordinates(b))]
        positives.sort()
        return tuple(positives)

    # -- misc ----------------------------------------------------------------

    def check_weight(self, x) -> Weight:
        x = tuple(int(c) for c in x)
        if len(x) != self.rank:
            raise ValueError(
                "weight arity %d does not match rank %d" % (len(x), self.rank))
        return x

    def same_lattice(self, other: "RootDatum") -> bool:
        return self is other or self.cartan == other.cartan

    def to_json(self) -> dict:
        return {
            "type": self.type_string,
            "cartan": [list(row) for row in self.cartan],
            "rho": list(self.rho),
            "n_pos_roots": self.n_pos_roots,
        }

    def __repr__(self):
        return "RootDatum(%r)" % self.type_string


_TYPE_TOKEN = re.compile(r"^([A-G])([0-9]+)$")


def make_root_datum(type_string: str) -> RootDatum:
    """Build the root datum named by a type string like "A2", "B3" or "A1xA1"."""
    factors = []
    for token in type_string.split("x"):
        m = _TYPE_TOKEN.match(token.strip())
        if not m:
            raise ValueError("unknown type token %r" % token)
        factors.append((m.group(1), int(m.group(2))))
    blocks = [_cartan_simple(letter, n) for letter, n in factors]
    rank = sum(len(b) for b in blocks)
    if rank == 0:
        raise ValueError("rank 0 root datum")
    cartan = [[0] * rank for _ in range(rank)]
    offset = 0
    for block in blocks:
        n = len(block)
        for i in range(n):
            for j in range(n):
                cartan[offset + i][offset + j] = block[i][j]
        offset += n
    return RootDatum(type_string, cartan)


def pairing(datum: RootDatum, x: Weight, i: int) -> int:
    return datum.pairing(x, i)


def reflect(datum: RootDatum, x: Weight, i: int) -> Weight:
    return datum.reflect(x, i)
