"""Chain-level linear Koszul duality over a zero-dimensional base.

The data of a duality setup is a finite-dimensional rational vector space V
with two subspaces F1, F2.  Three free graded-commutative dg-algebras are
attached to it:

    T = Sym( F1-perp (-1,2)  ->  F2-dual (0,2) )     differential: restriction
    R = Sym( F2 (-1,-2)      ->  V/F1 (0,-2) )       differential: minus the
    S = Sym( F2 (1,-2)       ->  V/F1 (2,-2) )       natural map

(bidegrees are (cohomological, internal); odd generators sit in odd
cohomological degree).  The duality functor sends a finite T-dg-module M to
the regraded module xi(S (x) M-dual), where xi remaps bidegree (p, q) to
(p + q, q) and the differential is a sum of four terms: the S differential,
the transposed differential of M, and two Koszul contractions pairing the odd
S-generators with the even T-generators and vice versa.  Internal degrees are
truncated to a window |q| <= cutoff; the differential preserves q, so
cohomology inside the window is exact.

Sign conventions (transposed differentials/actions and the relative sign of
the two Koszul terms) are the unique-up-to-equivalence choice that makes
d^2 = 0 and the Leibniz rule hold, which ``BigradedDgModule.verify`` checks,
and that makes the one-dimensional diagonal checks pass.

All linear algebra is exact over Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .poly import Laurent


# ---------------------------------------------------------------------------
# dg-algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DgGen:
    key: str
    parity: int                     # 0 even, 1 odd
    bidegree: tuple
    image: tuple = ()               # d(gen) as ((other key, Fraction), ...)


class DgAlgebra:
    """Free graded-commutative dg-algebra on finitely many generators.

    The differential maps odd generators to linear combinations of even
    generators and kills even generators; that is the only shape this engine
    needs and it is validated here.
    """

    def __init__(self, name: str, gens):
        self.name = name
        self.gens = tuple(gens)
        self.index = {g.key: i for i, g in enumerate(self.gens)}
        if len(self.index) != len(self.gens):
            raise ValueError("duplicate generator keys")
        signs = {g.bidegree[1] > 0 for g in self.gens if g.bidegree[1] != 0}
        if len(signs) > 1:
            raise ValueError("mixed-sign internal degrees are not supported")
        for g in self.gens:
            if g.parity not in (0, 1):
                raise ValueError("parity must be 0 or 1")
            if g.parity != (g.bidegree[0] % 2):
                raise ValueError("parity must match cohomological degree mod 2")
            if g.parity == 0 and g.image:
                raise ValueError("even generators must be closed")
            for key, _ in g.image:
                h = self.gens[self.index[key]]
                if h.parity != 0 or h.bidegree != (g.bidegree[0] + 1, g.bidegree[1]):
                    raise ValueError("generator image must be even of degree (+1, 0)")

    def gen(self, key: str) -> DgGen:
        return self.gens[self.index[key]]

    def __repr__(self):
        return "DgAlgebra(%s, %d gens)" % (self.name, len(self.gens))


TRIVIAL_ALGEBRA = DgAlgebra("trivial", ())


def _mono_bidegree(alg: DgAlgebra, mono):
    p = q = 0
    for g, e in zip(alg.gens, mono):
        if e:
            p += e * g.bidegree[0]
            q += e * g.bidegree[1]
    return (p, q)


def _mono_parity(alg: DgAlgebra, mono) -> int:
    return sum(e for g, e in zip(alg.gens, mono) if g.parity) % 2


def _mono_mul_gen(alg: DgAlgebra, gi: int, mono):
    """Left multiplication by generator gi; returns (sign, monomial) or None."""
    g = alg.gens[gi]
    if g.parity:
        if mono[gi]:
            return None
        crossings = sum(e for t in range(gi) if alg.gens[t].parity
                        for e in (mono[t],))
        sign = -1 if crossings % 2 else 1
    else:
        sign = 1
    out = list(mono)
    out[gi] += 1
    return sign, tuple(out)


def _mono_diff(alg: DgAlgebra, mono):
    """d(monomial) as a list of (coefficient, monomial)."""
    out = []
    odd_before = 0
    for t, e in enumerate(mono):
        g = alg.gens[t]
        if e and g.parity:
            sign = -1 if odd_before % 2 else 1
            for key, coef in g.image:
                hi = alg.index[key]
                m2 = list(mono)
                m2[t] = 0
                m2[hi] += 1
                out.append((coef * sign, tuple(m2)))
            odd_before += 1
    return out


def _enumerate_monomials(alg: DgAlgebra, qlo: int, qhi: int):
    """All monomials with internal degree in [qlo, qhi], sorted."""
    gens = alg.gens
    out = []

    def rec(idx, exps, q):
        if idx == len(gens):
            if qlo <= q <= qhi:
                out.append(tuple(exps))
            return
        b = gens[idx].bidegree[1]
        if b == 0:
            raise ValueError("generators with internal degree 0 unsupported")
        max_e = 1 if gens[idx].parity else max((qhi - q) // b if b > 0 else (qlo - q) // b, 0)
        for e in range(max_e + 1):
            rec(idx + 1, exps + [e], q + e * b)

    rec(0, [], 0)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# bigraded dg-modules
# ---------------------------------------------------------------------------


class BigradedDgModule:
    """Finite bidegree-indexed rational vector spaces with differential and
    generator actions.

    components: {(p, q): dim}; diff: {(p, q): matrix} stored at the source
    bidegree, mapping to (p+1, q); actions: {gen key: {(p, q): matrix}} with
    the generator's own bidegree offset.  Maps whose source or target falls
    outside the stored components are simply absent (window truncation drops
    whole internal degrees at a time, and the differential preserves q, so
    nothing inside the window is affected).  window = (qlo, qhi) marks the
    internal-degree range on which the module is complete; qlo may be None
    for "complete below".
    """

    def __init__(self, algebra: DgAlgebra, components, diff=None, actions=None,
                 window=(None, 0)):
        self.algebra = algebra
        self.components = {k: int(d) for k, d in components.items() if d}
        self.diff = {k: m for k, m in (diff or {}).items()
                     if k in self.components and not linalg.is_zero(m)}
        acts = {}
        for key, table in (actions or {}).items():
            kept = {k: m for k, m in table.items()
                    if k in self.components and not linalg.is_zero(m)}
            if kept:
                acts[key] = kept
        self.actions = acts
        self.window = window

    # -- shape helpers ------------------------------------------------------

    def dim(self, p: int, q: int) -> int:
        return self.components.get((p, q), 0)

    def total_dim(self) -> int:
        return sum(self.components.values())

    def _map(self, table, key, tshape):
        m = table.get(key)
        if m is not None:
            return m
        return linalg.zeros(*tshape)

    def diff_at(self, p, q):
        return self._map(self.diff, (p, q), (self.dim(p + 1, q), self.dim(p, q)))

    def action_at(self, genkey, p, q):
        g = self.algebra.gen(genkey)
        a, b = g.bidegree
        table = self.actions.get(genkey, {})
        return self._map(table, (p, q), (self.dim(p + a, q + b), self.dim(p, q)))

    def in_window(self, q: int) -> bool:
        lo, hi = self.window
        return (lo is None or q >= lo) and (hi is None or q <= hi)

    # -- structural checks ----------------------------------------------------

    @staticmethod
    def _compose(a, b, rows, cols):
        """a after b with an explicit (rows x cols) zero fallback."""
        if rows == 0 or cols == 0:
            return linalg.zeros(rows, cols)
        if not a or not b or not a[0] or not b[0]:
            return linalg.zeros(rows, cols)
        return linalg.mat_mul(a, b)

    def verify(self):
        """Raise ValueError unless d^2 = 0, Leibniz, graded commutativity and
        odd squares hold on every stored bidegree."""
        for (p, q), m in self.diff.items():
            if len(m) != self.dim(p + 1, q) or (m and len(m[0]) != self.dim(p, q)):
                raise ValueError("differential shape mismatch at %r" % ((p, q),))
        for key, table in self.actions.items():
            a, b = self.algebra.gen(key).bidegree
            for (p, q), m in table.items():
                if len(m) != self.dim(p + a, q + b) or (m and len(m[0]) != self.dim(p, q)):
                    raise ValueError("action shape mismatch for %s at %r" % (key, (p, q)))

        for (p, q) in self.components:
            m2 = self._compose(self.diff_at(p + 1, q), self.diff_at(p, q),
                               self.dim(p + 2, q), self.dim(p, q))
            if not linalg.is_zero(m2):
                raise ValueError("d^2 != 0 at %r" % ((p, q),))

        gens = self.algebra.gens
        for g in gens:
            a, b = g.bidegree
            for (p, q) in self.components:
                if not (self.in_window(q) and self.in_window(q + b)):
                    continue
                rows, cols = self.dim(p + a + 1, q + b), self.dim(p, q)
                # d A_g - (-1)^|g| A_g d = A_{dg}
                lhs = self._compose(self.diff_at(p + a, q + b),
                                    self.action_at(g.key, p, q), rows, cols)
                rhs = self._compose(self.action_at(g.key, p + 1, q),
                                    self.diff_at(p, q), rows, cols)
                sign = -1 if g.parity else 1
                total = [[lhs[i][j] - sign * rhs[i][j] for j in range(cols)]
                         for i in range(rows)]
                expected = linalg.zeros(rows, cols)
                for key, coef in g.image:
                    im = self.action_at(key, p, q)
                    for i in range(rows):
                        for j in range(cols):
                            expected[i][j] += coef * im[i][j]
                if total != expected:
                    raise ValueError("Leibniz fails for %s at %r" % (g.key, (p, q)))
        for i, g in enumerate(gens):
            for h in gens[i:]:
                ag, bg = g.bidegree
                ah, bh = h.bidegree
                sign = -1 if (g.parity and h.parity) else 1
                for (p, q) in self.components:
                    if not (self.in_window(q) and self.in_window(q + bg)
                            and self.in_window(q + bh) and self.in_window(q + bg + bh)):
                        continue
                    rows, cols = self.dim(p + ag + ah, q + bg + bh), self.dim(p, q)
                    gh = self._compose(self.action_at(g.key, p + ah, q + bh),
                                       self.action_at(h.key, p, q), rows, cols)
                    hg = self._compose(self.action_at(h.key, p + ag, q + bg),
                                       self.action_at(g.key, p, q), rows, cols)
                    if g is h and g.parity:
                        if not linalg.is_zero(gh):
                            raise ValueError("odd generator %s does not square to zero" % g.key)
                        continue
                    ok = all(gh[r][c] == sign * hg[r][c]
                             for r in range(rows) for c in range(cols))
                    if not ok:
                        raise ValueError("actions of %s, %s do not graded-commute" % (g.key, h.key))
        return True

    # -- relabelings -----------------------------------------------------------

    def relabeled(self, dp: int, dq: int) -> "BigradedDgModule":
        """Pure bidegree relabeling: new (p, q) holds old (p+dp, q+dq).

        The internal twist <n> is relabeled(0, -n); the shift [m] is
        relabeled(m, 0).  No signs are introduced.
        """
        comps = {(p - dp, q - dq): d for (p, q), d in self.components.items()}
        diff = {(p - dp, q - dq): m for (p, q), m in self.diff.items()}
        acts = {key: {(p - dp, q - dq): m for (p, q), m in table.items()}
                for key, table in self.actions.items()}
        lo, hi = self.window
        window = (None if lo is None else lo - dq, None if hi is None else hi - dq)
        return BigradedDgModule(self.algebra, comps, diff, acts, window)

    def same_as(self, other: "BigradedDgModule", qlo: int, qhi: int) -> bool:
        """Exact equality of components, differential and actions on a window."""
        keys = {k for k in list(self.components) + list(other.components)
                if qlo <= k[1] <= qhi}
        for (p, q) in keys:
            if self.dim(p, q) != other.dim(p, q):
                return False
            if self.diff_at(p, q) != other.diff_at(p, q):
                return False
        genkeys = set(self.actions) | set(other.actions)
        for key in genkeys:
            b = self.algebra.gen(key).bidegree[1] if key in self.algebra.index \
                else other.algebra.gen(key).bidegree[1]
            for (p, q) in keys:
                if not (qlo <= q + b <= qhi):
                    continue
                if self.action_at(key, p, q) != other.action_at(key, p, q):
                    return False
        return True

    def dims_table(self) -> dict:
        return {"%d,%d" % k: d for k, d in sorted(self.components.items())}


def euler_class(m: BigradedDgModule) -> Laurent:
    """Alternating bigraded dimension sum: sum (-1)^p dim M^{p,q} v^q."""
    terms: dict = {}
    for (p, q), d in m.components.items():
        terms[q] = terms.get(q, 0) + (d if p % 2 == 0 else -d)
    return Laurent(terms)


def direct_sum(a: BigradedDgModule, b: BigradedDgModule) -> BigradedDgModule:
    if a.algebra is not b.algebra:
        raise ValueError("direct sum needs a common algebra")
    comps = dict(a.components)
    for k, d in b.components.items():
        comps[k] = comps.get(k, 0) + d

    def block(ma, mb, key, rdim_a, cdim_a, rdim_b, cdim_b):
        rows = rdim_a + rdim_b
        cols = cdim_a + cdim_b
        out = linalg.zeros(rows, cols)
        for i in range(rdim_a):
            for j in range(cdim_a):
                out[i][j] = ma[i][j]
        for i in range(rdim_b):
            for j in range(cdim_b):
                out[rdim_a + i][cdim_a + j] = mb[i][j]
        return out

    diff = {}
    for (p, q) in comps:
        if a.dim(p + 1, q) + b.dim(p + 1, q) == 0:
            continue
        m = block(a.diff_at(p, q), b.diff_at(p, q), (p, q),
                  a.dim(p + 1, q), a.dim(p, q), b.dim(p + 1, q), b.dim(p, q))
        diff[(p, q)] = m
    actions = {}
    for key in set(a.actions) | set(b.actions):
        da, db = a.algebra.gen(key).bidegree
        table = {}
        for (p, q) in comps:
            if a.dim(p + da, q + db) + b.dim(p + da, q + db) == 0:
                continue
            table[(p, q)] = block(a.action_at(key, p, q), b.action_at(key, p, q), (p, q),
                                  a.dim(p + da, q + db), a.dim(p, q),
                                  b.dim(p + da, q + db), b.dim(p, q))
        actions[key] = table
    a_lo, a_hi = a.window
    b_lo, b_hi = b.window
    lo = b_lo if a_lo is None else (a_lo if b_lo is None else max(a_lo, b_lo))
    hi = b_hi if a_hi is None else (a_hi if b_hi is None else min(a_hi, b_hi))
    return BigradedDgModule(a.algebra, comps, diff, actions, (lo, hi))


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------


def dual(m: BigradedDgModule) -> BigradedDgModule:
    """Graded dual: (M-dual)^{p,q} = (M^{-p,-q})*, with transposed structure.

    Signs: (d phi)(x) = -(-1)^{|phi|} phi(dx) and
    (a phi)(x) = (-1)^{|a||phi|} phi(ax); verify() certifies the result.
    """
    comps = {(-p, -q): d for (p, q), d in m.components.items()}
    diff = {}
    for (p, q) in comps:
        src = (-p - 1, -q)  # d_M : M^{-p-1,-q} -> M^{-p,-q}
        mat = m.diff.get(src)
        if mat is None:
            continue
        sign = Fraction(-1 if p % 2 == 0 else 1)  # -(-1)^p
        diff[(p, q)] = linalg.mat_scale(linalg.transpose(mat), sign)
    actions = {}
    for key, table in m.actions.items():
        a, b = m.algebra.gen(key).bidegree
        parity = m.algebra.gen(key).parity
        new_table = {}
        for (p, q) in comps:
            src = (-p - a, -q - b)  # A_g : M^{-p-a,-q-b} -> M^{-p,-q}
            mat = table.get(src)
            if mat is None:
                continue
            sign = Fraction(-1) if (parity and p % 2) else Fraction(1)
            new_table[(p, q)] = linalg.mat_scale(linalg.transpose(mat), sign)
        if new_table:
            actions[key] = new_table
    lo, hi = m.window
    window = (None if hi is None else -hi, None if lo is None else -lo)
    return BigradedDgModule(m.algebra, comps, diff, actions, window)


# ---------------------------------------------------------------------------
# cohomology
# ---------------------------------------------------------------------------


class _CohomologyData:
    """Kernel/image bases and projections for one module."""

    def __init__(self, m: BigradedDgModule):
        self.module = m
        self.reps = {}       # (p,q) -> list of representative vectors
        self.basis = {}      # (p,q) -> matrix [im-basis | reps] (columns)
        self.im_rank = {}
        for (p, q) in sorted(m.components):
            d = m.diff_at(p, q)
            kernel = linalg.nullspace(d, cols=m.dim(p, q))
            prev = m.diff_at(p - 1, q)
            im_cols = [ [row[j] for row in prev] for j in linalg.column_space_basis(prev) ] \
                if prev and prev[0] else []
            combined = linalg.from_columns(im_cols + kernel, m.dim(p, q))
            pivots = linalg.column_space_basis(combined) if combined and combined[0] else []
            reps = [kernel[j - len(im_cols)] for j in pivots if j >= len(im_cols)]
            self.reps[(p, q)] = reps
            self.basis[(p, q)] = linalg.from_columns(im_cols + reps, m.dim(p, q))
            self.im_rank[(p, q)] = len(im_cols)

    def h_dim(self, p, q) -> int:
        return len(self.reps.get((p, q), []))

    def project(self, p, q, vec):
        """Coordinates of a cycle's class on the chosen representatives."""
        basis = self.basis.get((p, q))
        if basis is None:
            if any(vec):
                raise ValueError("vector not a cycle at %r" % ((p, q),))
            return []
        if not basis or not basis[0]:
            if any(vec):
                raise ValueError("vector not a cycle at %r" % ((p, q),))
            return []
        sol = linalg.solve(basis, vec)
        if sol is None:
            raise ValueError("vector is not a cycle at %r" % ((p, q),))
        return sol[self.im_rank[(p, q)]:]

    def induced_operator(self, coeffs, p, q):
        """Matrix of sum_g coeffs[g] A_g on cohomology, (p,q) -> target.

        Only defined for cocycle combinations (sum coeffs * image(g) = 0);
        the caller is responsible for that, project() will fail otherwise.
        """
        m = self.module
        some_key = next(iter(coeffs))
        a, b = m.algebra.gen(some_key).bidegree
        cols = []
        for rep in self.reps.get((p, q), []):
            img = [Fraction(0)] * m.dim(p + a, q + b)
            for key, c in coeffs.items():
                mat = m.action_at(key, p, q)
                for i in range(len(img)):
                    img[i] += c * sum(mat[i][j] * rep[j] for j in range(len(rep)))
            cols.append(self.project(p + a, q + b, img))
        return linalg.from_columns(cols, self.h_dim(p + a, q + b))


def cohomology(m: BigradedDgModule, with_actions: bool = True) -> BigradedDgModule:
    """Per-bidegree cohomology as a module with zero differential.

    Actions are induced for the closed generators (those with zero image);
    the non-closed ones do not act on cohomology.
    """
    data = _CohomologyData(m)
    comps = {k: data.h_dim(*k) for k in m.components}
    actions = {}
    if with_actions:
        for g in m.algebra.gens:
            if g.image:
                continue
            table = {}
            for (p, q) in sorted(comps):
                if not comps.get((p, q)):
                    continue
                target = (p + g.bidegree[0], q + g.bidegree[1])
                if not m.in_window(target[1]):
                    continue
                mat = data.induced_operator({g.key: Fraction(1)}, p, q)
                if mat and not linalg.is_zero(mat):
                    table[(p, q)] = mat
            if table:
                actions[g.key] = table
    return BigradedDgModule(m.algebra, comps, {}, actions, m.window)


# ---------------------------------------------------------------------------
# duality setups
# ---------------------------------------------------------------------------


def _complement_basis(vectors, dim):
    """Standard basis vectors completing span(vectors) to the full space."""
    basis = [list(v) for v in vectors]
    chosen = []
    for i in range(dim):
        e = [Fraction(int(j == i)) for j in range(dim)]
        if linalg.rank(linalg.from_columns(basis + [e], dim)) > len(basis):
            basis.append(e)
            chosen.append(e)
    return chosen


class KoszulSetup:
    """A finite-dimensional space with two subspaces and the derived bases.

    Carries the three dg-algebras of the duality, the quotient-coordinate
    map for V/F1, and the two dual-basis pairings feeding the Koszul
    differentials.
    """

    def __init__(self, dim: int, f1_basis, f2_basis):
        self.dim = dim
        self.f1 = [ [Fraction(c) for c in v] for v in f1_basis ]
        self.f2 = [ [Fraction(c) for c in v] for v in f2_basis ]
        for v in self.f1 + self.f2:
            if len(v) != dim:
                raise ValueError("subspace vector of wrong length")
        if linalg.rank(linalg.from_columns(self.f1, dim) or [[]]) != len(self.f1):
            raise ValueError("F1 basis is dependent")
        if linalg.rank(linalg.from_columns(self.f2, dim) or [[]]) != len(self.f2):
            raise ValueError("F2 basis is dependent")

        # F1-perp: functionals vanishing on F1 (coordinates in the dual basis)
        rows = [list(v) for v in self.f1]
        self.f1_perp = linalg.nullspace(rows, cols=dim) if rows else \
            [[Fraction(int(i == j)) for i in range(dim)] for j in range(dim)]
        if len(self.f1_perp) != dim - len(self.f1):
            raise ValueError("orthogonal dimension mismatch")

        # complement basis representing V/F1
        self.quot_basis = _complement_basis(self.f1, dim)
        full = linalg.from_columns(self.f1 + self.quot_basis, dim)
        n = len(self.f1)
        self._quot_rows = []
        inv_cols = []
        for i in range(dim):
            e = [Fraction(int(j == i)) for j in range(dim)]
            inv_cols.append(linalg.solve(full, e))
        # quotient coordinates of e_i are the tail of full^{-1} e_i
        self._quot_tail = [[inv_cols[i][n + t] for i in range(dim)]
                           for t in range(dim - n)]

        t_gens = []
        for a, lam in enumerate(self.f1_perp):
            image = []
            for j, f in enumerate(self.f2):
                coef = sum(lam[r] * f[r] for r in range(dim))
                if coef:
                    image.append(("p%d" % j, coef))
            t_gens.append(DgGen("l%d" % a, 1, (-1, 2), tuple(image)))
        for j in range(len(self.f2)):
            t_gens.append(DgGen("p%d" % j, 0, (0, 2)))
        self.t_algebra = DgAlgebra("T", t_gens)

        s_gens = []
        for j, f in enumerate(self.f2):
            qc = self.quotient_coords(f)
            image = tuple(("c%d" % b, -qc[b]) for b in range(len(qc)) if qc[b])
            s_gens.append(DgGen("f%d" % j, 1, (1, -2), image))
        for b in range(dim - len(self.f1)):
            s_gens.append(DgGen("c%d" % b, 0, (2, -2)))
        self.s_algebra = DgAlgebra("S", s_gens)

        r_gens = [DgGen(g.key, g.parity, (g.bidegree[0] + g.bidegree[1], g.bidegree[1]),
                        g.image) for g in s_gens]
        self.r_algebra = DgAlgebra("R", r_gens)

        # Koszul pairing 1: S odd generators against their dual T even generators
        self.k1_pairs = [("f%d" % j, "p%d" % j) for j in range(len(self.f2))]
        # Koszul pairing 2: S even generators against the dual basis of F1-perp
        nq = dim - len(self.f1)
        pairing = [[sum(self.f1_perp[a][r] * self.quot_basis[b][r] for r in range(dim))
                    for b in range(nq)] for a in range(nq)]
        self.k2_pairs = []
        if nq:
            ident = linalg.identity(nq)
            for b in range(nq):
                col = linalg.solve(pairing, [ident[a][b] for a in range(nq)])
                terms = [("l%d" % a, col[a]) for a in range(nq) if col[a]]
                self.k2_pairs.append(("c%d" % b, terms))

    def quotient_coords(self, v):
        return [sum(row[i] * Fraction(v[i]) for i in range(self.dim))
                for row in self._quot_tail]


# ---------------------------------------------------------------------------
# the duality functor
# ---------------------------------------------------------------------------


def _dual_diff_matrix(m: BigradedDgModule, pm, qm):
    """Transposed differential acting on the dual of component (pm, qm)."""
    src = m.diff.get((pm - 1, qm))
    if src is None:
        return None
    sign = Fraction(-1 if pm % 2 == 0 else 1)
    return linalg.mat_scale(linalg.transpose(src), sign)


def _dual_action_matrix(m: BigradedDgModule, key, pm, qm):
    """Transposed action of one generator on the dual of component (pm, qm).

    Returns (target M-component, matrix) or None.
    """
    g = m.algebra.gen(key)
    a, b = g.bidegree
    src = m.actions.get(key, {}).get((pm - a, qm - b))
    if src is None:
        return None
    sign = Fraction(-1) if (g.parity and pm % 2) else Fraction(1)
    return (pm - a, qm - b), linalg.mat_scale(linalg.transpose(src), sign)


def kappa_point(setup: KoszulSetup, m: BigradedDgModule, cutoff: int) -> BigradedDgModule:
    """The duality functor at a point: xi(S (x) M-dual) within |q| <= cutoff.

    The differential is the four-term sum described in the module docstring;
    the result is a module over setup.r_algebra with window (-cutoff, cutoff).
    """
    if m.algebra is not setup.t_algebra:
        raise ValueError("module is not over this setup's T algebra")
    if m.window[1] is None or m.window[1] < cutoff:
        raise ValueError(
            "module window is insufficient: complete through q <= %d required, "
            "got %r" % (cutoff, m.window))

    s_alg = setup.s_algebra
    if m.components:
        m_qmin = min(q for (_, q) in m.components)
    else:
        m_qmin = 0
    monos = _enumerate_monomials(s_alg, -(cutoff - m_qmin), 0)
    mono_data = {mono: (_mono_bidegree(s_alg, mono), _mono_parity(s_alg, mono))
                 for mono in monos}

    m_comps = sorted(m.components)
    # basis of the output: (monomial, M-component, index into that component)
    by_bidegree: dict = {}
    for mono in monos:
        (ps, qs), _ = mono_data[mono]
        for (pm, qm) in m_comps:
            p, q = ps - pm, qs - qm
            if -cutoff <= q <= cutoff:
                bucket = by_bidegree.setdefault((p, q), [])
                for i in range(m.components[(pm, qm)]):
                    bucket.append((mono, (pm, qm), i))
    index = {}
    for key, bucket in by_bidegree.items():
        bucket.sort(key=lambda t: (t[0], t[1], t[2]))
        for n, b in enumerate(bucket):
            index[b] = (key, n)

    comps = {key: len(bucket) for key, bucket in by_bidegree.items()}
    diff = {key: linalg.zeros(len(by_bidegree.get((key[0] + 1, key[1]), [])), dim)
            for key, dim in comps.items()}
    actions = {g.key: {} for g in s_alg.gens}

    dual_diffs = {mc: _dual_diff_matrix(m, *mc) for mc in m_comps}
    dual_acts = {}
    for g in m.algebra.gens:
        for mc in m_comps:
            dual_acts[(g.key, mc)] = _dual_action_matrix(m, g.key, *mc)

    for (p, q), bucket in by_bidegree.items():
        dmat = diff[(p, q)]
        has_target = (p + 1, q) in by_bidegree
        for col, (mono, mc, i) in enumerate(bucket):
            parity = mono_data[mono][1]
            pm, qm = mc
            if has_target:
                # term 1: the S differential
                for coef, mono2 in _mono_diff(s_alg, mono):
                    pos = index.get((mono2, mc, i))
                    if pos is not None and pos[0] == (p + 1, q):
                        dmat[pos[1]][col] += coef
                # term 2: the transposed differential of M
                dm = dual_diffs[mc]
                if dm is not None:
                    sgn = Fraction(-1 if parity else 1)
                    for r in range(len(dm)):
                        if dm[r][i]:
                            pos = index.get((mono, (pm - 1, qm), r))
                            if pos is not None and pos[0] == (p + 1, q):
                                dmat[pos[1]][col] += sgn * dm[r][i]
                # term 3: first Koszul contraction
                for f_key, psi_key in setup.k1_pairs:
                    stepped = _mono_mul_gen(s_alg, s_alg.index[f_key], mono)
                    if stepped is None:
                        continue
                    msign, mono2 = stepped
                    da = dual_acts[(psi_key, mc)]
                    if da is None:
                        continue
                    target_mc, mat = da
                    for r in range(len(mat)):
                        if mat[r][i]:
                            pos = index.get((mono2, target_mc, r))
                            if pos is not None and pos[0] == (p + 1, q):
                                dmat[pos[1]][col] += Fraction(msign) * mat[r][i]
                # term 4: second Koszul contraction, with the compensating sign
                for c_key, lam_terms in setup.k2_pairs:
                    stepped = _mono_mul_gen(s_alg, s_alg.index[c_key], mono)
                    if stepped is None:
                        continue
                    msign, mono2 = stepped
                    outer = Fraction(-1 if parity == 0 else 1)  # -(-1)^{|s|}
                    for lam_key, lam_coef in lam_terms:
                        da = dual_acts[(lam_key, mc)]
                        if da is None:
                            continue
                        target_mc, mat = da
                        for r in range(len(mat)):
                            if mat[r][i]:
                                pos = index.get((mono2, target_mc, r))
                                if pos is not None and pos[0] == (p + 1, q):
                                    dmat[pos[1]][col] += outer * Fraction(msign) * lam_coef * mat[r][i]
            # actions: left multiplication on the S factor
            for gi, g in enumerate(s_alg.gens):
                stepped = _mono_mul_gen(s_alg, gi, mono)
                if stepped is None:
                    continue
                msign, mono2 = stepped
                pos = index.get((mono2, mc, i))
                if pos is None:
                    continue
                tkey, row = pos
                table = actions[g.key].setdefault((p, q), None)
                if table is None:
                    table = linalg.zeros(len(by_bidegree[tkey]), len(bucket))
                    actions[g.key][(p, q)] = table
                table[row][col] += Fraction(msign)

    # regrade: (p, q) -> (p + q, q); generator keys carry over to R
    comps_xi = {(p + q, q): d for (p, q), d in comps.items()}
    diff_xi = {(p + q, q): mat for (p, q), mat in diff.items()}
    acts_xi = {key: {(p + q, q): mat for (p, q), mat in table.items()}
               for key, table in actions.items()}
    out = BigradedDgModule(setup.r_algebra, comps_xi, diff_xi, acts_xi,
                           (-cutoff, cutoff))
    for (p, q) in out.components:
        square = out._compose(out.diff_at(p + 1, q), out.diff_at(p, q),
                              out.dim(p + 2, q), out.dim(p, q))
        if not linalg.is_zero(square):
            raise AssertionError("duality differential does not square to zero "
                                 "at %r" % ((p, q),))
    return out


# ---------------------------------------------------------------------------
# free modules and symmetric-power components
# ---------------------------------------------------------------------------


def free_module(algebra: DgAlgebra, qlo: int, qhi: int) -> BigradedDgModule:
    """The algebra as a module over itself, truncated to qlo <= q <= qhi."""
    monos = _enumerate_monomials(algebra, qlo, qhi)
    by_bidegree: dict = {}
    for mono in monos:
        by_bidegree.setdefault(_mono_bidegree(algebra, mono), []).append(mono)
    index = {}
    for key, bucket in by_bidegree.items():
        bucket.sort()
        for n, mono in enumerate(bucket):
            index[mono] = (key, n)
    comps = {key: len(bucket) for key, bucket in by_bidegree.items()}
    diff = {}
    actions = {g.key: {} for g in algebra.gens}
    for (p, q), bucket in by_bidegree.items():
        for col, mono in enumerate(bucket):
            for coef, mono2 in _mono_diff(algebra, mono):
                pos = index.get(mono2)
                if pos is None:
                    continue
                tkey, row = pos
                mat = diff.setdefault((p, q), linalg.zeros(len(by_bidegree[tkey]), len(bucket)))
                mat[row][col] += coef
            for gi, g in enumerate(algebra.gens):
                stepped = _mono_mul_gen(algebra, gi, mono)
                if stepped is None:
                    continue
                sign, mono2 = stepped
                pos = index.get(mono2)
                if pos is None:
                    continue
                tkey, row = pos
                table = actions[g.key].get((p, q))
                if table is None:
                    table = linalg.zeros(len(by_bidegree[tkey]), len(bucket))
                    actions[g.key][(p, q)] = table
                table[row][col] += Fraction(sign)
    return BigradedDgModule(algebra, comps, diff, actions, (qlo, qhi))


def _sym_exponents(nvars: int, degree: int):
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(idx, left, exps):
        if idx == nvars - 1:
            out.append(tuple(exps + [left]))
            return
        for e in range(left + 1):
            rec(idx + 1, left - e, exps + [e])

    rec(0, degree, [])
    out.sort()
    return out


def _sym_mult_matrix(nvars: int, degree: int, coeffs):
    """Multiplication by sum coeffs[t] x_t from Sym^degree to Sym^{degree+1}."""
    src = _sym_exponents(nvars, degree)
    tgt = _sym_exponents(nvars, degree + 1)
    tindex = {e: i for i, e in enumerate(tgt)}
    mat = linalg.zeros(len(tgt), len(src))
    for j, e in enumerate(src):
        for t in range(nvars):
            if coeffs[t]:
                e2 = list(e)
                e2[t] += 1
                mat[tindex[tuple(e2)]][j] += coeffs[t]
    return mat
