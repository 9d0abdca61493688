"""The point-level duality engine: dg-modules, duals, cohomology, duality."""

import random
from fractions import Fraction

import pytest

from heckekoszul import diagonal, koszul
from heckekoszul.diagonal import (DiagonalSetup, check_diagonal, check_euler_lemma,
                                  check_shift_rule, random_dg_module)
from heckekoszul.koszul import (BigradedDgModule, KoszulSetup, TRIVIAL_ALGEBRA,
                                cohomology, direct_sum, dual, euler_class,
                                free_module, kappa_point)
from heckekoszul.poly import Laurent


def one_dim_module(p, q):
    return BigradedDgModule(TRIVIAL_ALGEBRA, {(p, q): 1}, window=(q, q))


def test_setup_invariants():
    s = KoszulSetup(3, [[1, 0, 0]], [[0, 1, 0], [0, 0, 1]])
    assert len(s.f1_perp) == 2  # dim F1-perp = dim V - dim F1
    odd = [g for g in s.t_algebra.gens if g.parity]
    even = [g for g in s.t_algebra.gens if not g.parity]
    assert {g.bidegree for g in odd} == {(-1, 2)}
    assert {g.bidegree for g in even} == {(0, 2)}
    assert {g.bidegree for g in s.r_algebra.gens if g.parity} == {(-1, -2)}
    assert {g.bidegree for g in s.r_algebra.gens if not g.parity} == {(0, -2)}
    with pytest.raises(ValueError):
        KoszulSetup(2, [[1, 0], [2, 0]], [])


def test_xi_is_the_bidegree_remap():
    # xi(S) = R as bigraded algebras: same keys, parities, images, with
    # bidegrees remapped by (p, q) -> (p + q, q)
    s = KoszulSetup(2, [[1, 0]], [[0, 1]])
    for gs, gr in zip(s.s_algebra.gens, s.r_algebra.gens):
        assert gs.key == gr.key and gs.parity == gr.parity and gs.image == gr.image
        p, q = gs.bidegree
        assert gr.bidegree == (p + q, q)


def test_dual_bidegrees():
    m = one_dim_module(0, 0)
    assert dual(m).components == {(0, 0): 1}
    m = one_dim_module(-1, 2)
    assert dual(m).components == {(1, -2): 1}


def test_dual_of_acyclic_is_acyclic():
    m = BigradedDgModule(TRIVIAL_ALGEBRA, {(0, 2): 1, (1, 2): 1},
                         {(0, 2): [[Fraction(1)]]}, window=(2, 2))
    m.verify()
    dm = dual(m)
    dm.verify()
    h = cohomology(dm, with_actions=False)
    assert h.total_dim() == 0


def test_dual_preserves_module_structure():
    setup = KoszulSetup(1, [[1]], [[1]])
    m = free_module(setup.t_algebra, 0, 6)
    m.verify()
    dm = dual(m)
    dm.verify()
    assert dm.components == {(-p, -q): d for (p, q), d in m.components.items()}


def test_cohomology_examples():
    # identity two-term complex: no cohomology
    m = BigradedDgModule(TRIVIAL_ALGEBRA, {(0, 0): 1, (1, 0): 1},
                         {(0, 0): [[Fraction(1)]]}, window=(0, 0))
    assert cohomology(m, with_actions=False).total_dim() == 0
    # zero differential: cohomology is the module itself
    m = BigradedDgModule(TRIVIAL_ALGEBRA, {(0, 0): 2, (3, -2): 1}, window=(-2, 0))
    assert cohomology(m, with_actions=False).components == m.components
    # two-step complex of a nonzero functional on Q^2: kernel survives
    phi = [[Fraction(1), Fraction(-2)]]
    m = BigradedDgModule(TRIVIAL_ALGEBRA, {(0, 0): 2, (1, 0): 1}, {(0, 0): phi},
                         window=(0, 0))
    h = cohomology(m, with_actions=False)
    assert h.components == {(0, 0): 1}


def test_euler_class_examples():
    assert euler_class(one_dim_module(0, 0)) == Laurent.one()
    acyclic = BigradedDgModule(TRIVIAL_ALGEBRA, {(0, 2): 1, (1, 2): 1},
                               {(0, 2): [[Fraction(1)]]}, window=(2, 2))
    assert euler_class(acyclic).is_zero()
    assert euler_class(cohomology(acyclic, with_actions=False)).is_zero()


def test_euler_of_truncated_free_module():
    # T for dim V = 1, F1 = F2 = V, truncated at q <= 4: three symmetric powers
    setup = KoszulSetup(1, [[1]], [[1]])
    m = free_module(setup.t_algebra, 0, 4)
    expected = Laurent({0: 1, 2: 1, 4: 1})
    assert euler_class(m) == expected
    assert euler_class(cohomology(m, with_actions=False)) == expected


def test_kappa_point_zero_module():
    setup = KoszulSetup(1, [[1]], [[1]])
    zero = BigradedDgModule(setup.t_algebra, {}, window=(None, 10))
    out = kappa_point(setup, zero, 4)
    assert out.total_dim() == 0


def test_kappa_point_full_flag_collapse():
    # dim V = 1, F1 = F2 = V, M = the algebra itself: everything collapses
    setup = KoszulSetup(1, [[1]], [[1]])
    m = free_module(setup.t_algebra, 0, 10)
    out = kappa_point(setup, m, 6)
    out.verify()
    h = cohomology(out, with_actions=False)
    assert h.components == {(0, 0): 1}


def test_kappa_point_window_guard():
    setup = KoszulSetup(1, [[1]], [[1]])
    m = free_module(setup.t_algebra, 0, 4)
    with pytest.raises(ValueError, match="q <= 6"):
        kappa_point(setup, m, 6)
    with pytest.raises(ValueError, match="T algebra"):
        kappa_point(setup, one_dim_module(0, 0), 2)


def test_kappa_point_shift_rule_relabel():
    diag = DiagonalSetup(2, [[Fraction(1), Fraction(0)]])
    report = check_shift_rule(diag, 6, shifts=(-2, -1, 0, 1, 2))
    assert report["passed"], report


def test_kappa_twist_input_example():
    # a <1> twist of the input shifts the output by the relabeling [1]<-1>
    diag = DiagonalSetup(1, [[Fraction(1)]])
    m = diagonal.structure_sheaf(diag, 10)
    base = kappa_point(diag.setup, m, 6)
    out = kappa_point(diag.setup, m.relabeled(0, -1), 6)
    assert out.same_as(base.relabeled(1, 1), -5, 5)


@pytest.mark.parametrize("dim_v,dim_f", [(1, 0), (1, 1), (2, 1), (3, 2)])
def test_check_diagonal_selected(dim_v, dim_f):
    report = check_diagonal(dim_v, dim_f, cutoff=6)
    assert report["passed"], report


def test_check_diagonal_skew_subspace():
    report = check_diagonal(3, None, cutoff=6, f_basis=[[1, 1, 0], [0, 1, -1]])
    assert report["passed"], report


@pytest.mark.parametrize("twist", [-2, -1, 1, 2])
def test_check_diagonal_twisted(twist):
    report = check_diagonal(2, 1, cutoff=6, twist=twist)
    assert report["passed"], report


def test_diagonal_dimension_tables_present():
    report = check_diagonal(2, 1, cutoff=4)
    assert "cohomology" in report["dimensions"]
    assert "model" in report["dimensions"]
    # both tables describe Sym(V/F) of a line: one dimension per even degree
    assert report["dimensions"]["model"]["0,0"] == 1
    assert report["dimensions"]["model"]["0,-2"] == 1


def test_random_modules_and_euler_lemma():
    rng = random.Random(43)
    for _ in range(30):
        m = random_dg_module(rng)
        m.verify()
        assert euler_class(m) == euler_class(cohomology(m, with_actions=False))
    report = check_euler_lemma(97, 40)
    assert report["passed"]


def test_class_level_duality_stability():
    # two inputs with equal classes produce equal output classes in the window
    diag = DiagonalSetup(2, [[Fraction(1), Fraction(0)]])
    m1 = diagonal.structure_sheaf(diag, 8)
    acyclic = BigradedDgModule(
        diag.setup.t_algebra, {(0, 2): 1, (1, 2): 1},
        {(0, 2): [[Fraction(1)]]}, window=(None, 8))
    m2 = direct_sum(m1, acyclic)
    m2.verify()
    assert euler_class(m1) + euler_class(acyclic) == euler_class(m2)
    out1 = kappa_point(diag.setup, m1, 4)
    out2 = kappa_point(diag.setup, m2, 4)
    e1, e2 = euler_class(out1), euler_class(out2)
    # compare within the guaranteed-complete window
    for q in range(-4, 5):
        assert e1.terms.get(q, 0) == e2.terms.get(q, 0)


def test_d_squared_after_constructors():
    diag = DiagonalSetup(2, [[Fraction(1), Fraction(1)]])
    m = diagonal.structure_sheaf(diag, 6)
    m.verify()
    out = kappa_point(diag.setup, m, 4)
    out.verify()
    flipped = diagonal.xi_sign_flip(out, diag)
    flipped.verify()
    model = diagonal.dual_model(diag, 6)
    model.verify()
