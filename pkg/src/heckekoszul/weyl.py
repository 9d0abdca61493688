"""Finite Weyl group arithmetic on the weight lattice.

An element is stored as the integer matrix of its action in fundamental-weight
coordinates together with a canonical reduced word.  The canonical word is
produced by greedy descent stripping, always taking the smallest descent
index, so normal forms and test transcripts are reproducible.  Elements are
interned per root datum, keyed by their matrix.
"""

from __future__ import annotations

from .rootdata import RootDatum, wzero


def _identity_matrix(rank: int):
    return tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))


def _mat_mul(a, b):
    rank = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(rank)) for j in range(rank))
        for i in range(rank)
    )


def _mat_vec(m, x):
    rank = len(m)
    return tuple(sum(m[i][j] * x[j] for j in range(rank)) for i in range(rank))


def _reflection_matrix(datum: RootDatum, i: int):
    # column j of s_i is s_i(omega_j) = omega_j - delta_{ij} alpha_i
    rank = datum.rank
    alpha = datum.simple_roots[i]
    return tuple(
        tuple(int(r == j) - (alpha[r] if j == i else 0) for j in range(rank))
        for r in range(rank)
    )


class WeylElt:
    """A Weyl group element; hashable, compared by its lattice matrix."""

    __slots__ = ("datum", "matrix", "word", "length")

    def __init__(self, datum: RootDatum, matrix, word):
        self.datum = datum
        self.matrix = matrix
        self.word = word
        self.length = len(word)

    def act(self, x):
        return _mat_vec(self.matrix, x)

    def is_identity(self) -> bool:
        return self.length == 0

    def inverse(self) -> "WeylElt":
        return from_word(self.datum, reversed(self.word))

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __lt__(self, other):  # deterministic sort order for rendering
        return (self.length, self.word) < (other.length, other.word)

    def to_json(self) -> dict:
        return {"word": list(self.word)}

    def __repr__(self):
        if not self.word:
            return "e"
        return "*".join("s%d" % (i + 1) for i in self.word)


def _descent_of_matrix(datum: RootDatum, matrix, i: int) -> bool:
    """True iff the element sends alpha_i to a negative root."""
    image = _mat_vec(matrix, datum.simple_roots[i])
    return not datum.is_positive_root(image)


def _intern(datum: RootDatum, matrix) -> WeylElt:
    cached = datum._weyl_intern.get(matrix)
    if cached is not None:
        return cached
    # canonical word by smallest-descent-first stripping
    word = []
    m = matrix
    ident = _identity_matrix(datum.rank)
    while m != ident:
        for i in range(datum.rank):
            if _descent_of_matrix(datum, m, i):
                word.append(i)
                m = _mat_mul(m, _reflection_matrix(datum, i))
                break
        else:
            raise ValueError("matrix is not a Weyl group element")
    elt = WeylElt(datum, matrix, tuple(reversed(word)))
    datum._weyl_intern[matrix] = elt
    return elt


def identity(datum: RootDatum) -> WeylElt:
    return _intern(datum, _identity_matrix(datum.rank))


def simple(datum: RootDatum, i: int) -> WeylElt:
    if not 0 <= i < datum.rank:
        raise IndexError("simple-root index out of range")
    return _intern(datum, _reflection_matrix(datum, i))


def from_word(datum: RootDatum, word) -> WeylElt:
    m = _identity_matrix(datum.rank)
    for i in word:
        if not 0 <= i < datum.rank:
            raise IndexError("simple-root index out of range")
        m = _mat_mul(m, _reflection_matrix(datum, i))
    return _intern(datum, m)


def compose(a: WeylElt, b: WeylElt) -> WeylElt:
    if not a.datum.same_lattice(b.datum):
        raise ValueError("Weyl elements from different root data")
    return _intern(a.datum, _mat_mul(a.matrix, b.matrix))


def descent(w: WeylElt, i: int) -> bool:
    """True iff right multiplication by s_i shortens w, i.e. w(alpha_i) < 0."""
    if not 0 <= i < w.datum.rank:
        raise IndexError("simple-root index out of range")
    return _descent_of_matrix(w.datum, w.matrix, i)


def reduced_word(w: WeylElt):
    """The canonical reduced word (smallest descent stripped first)."""
    return list(w.word)


def length_by_inversions(w: WeylElt) -> int:
    """Number of positive roots sent negative; oracle for the length field."""
    datum = w.datum
    return sum(1 for beta in datum.positive_roots
               if not datum.is_positive_root(w.act(beta)))


def all_elements(datum: RootDatum):
    """Enumerate the full Weyl group (orbit of the identity under generators)."""
    if datum._weyl_elements is None:
        seen = {identity(datum)}
        frontier = [identity(datum)]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(datum.rank):
                    u = compose(w, simple(datum, i))
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        datum._weyl_elements = tuple(sorted(seen))
    return datum._weyl_elements


def all_reduced_words(w: WeylElt):
    """Every reduced word of w (DFS over descents); small groups only."""
    if w.is_identity():
        return [[]]
    words = []
    for i in range(w.datum.rank):
        if descent(w, i):
            shorter = compose(w, simple(w.datum, i))
            words.extend(word + [i] for word in all_reduced_words(shorter))
    return words


def longest_element(datum: RootDatum) -> WeylElt:
    elements = all_elements(datum)
    return max(elements, key=lambda w: w.length)
