"""Expression parsing, evaluation, rendering round trips."""

import pytest

from heckekoszul import exprs, hecke, weyl
from heckekoszul.exprs import ParseError, eval_expr, parse, render
from heckekoszul.hecke import gen_T, gen_theta, inv_Tw, mul, scalar, unit
from heckekoszul.poly import Laurent, V_MINUS_VINV
from heckekoszul.rootdata import make_root_datum


def test_parse_shapes():
    assert parse("T[s1]*T[s1]")[0] == "prod"
    assert parse("th[1]*(v - v^-1)")[0] == "prod"
    tree = parse("T[s1]^-1")
    assert tree == ("pow", ("T", 0), -1)
    assert parse("th[1,0]") == ("theta", (1, 0))
    assert parse("-v") == ("sum", (-1,), (("v",),))


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse("T[s1]**2")
    assert "position" in str(err.value)
    with pytest.raises(ParseError):
        parse("th[1")
    with pytest.raises(ParseError):
        parse("(v + 1")
    with pytest.raises(ParseError):
        parse("T[sx]")


def test_eval_relation_vi():
    d = make_root_datum("A1")
    value = eval_expr(d, "T[s1]*T[s1]")
    assert value == unit(d) + gen_T(d, 0).scale(V_MINUS_VINV)


def test_eval_cross_rule():
    d = make_root_datum("A1")
    value = eval_expr(d, "T[s1]*th[1]")
    expected = mul(gen_theta(d, (-1,)), gen_T(d, 0)) + \
        gen_theta(d, (1,)).scale(V_MINUS_VINV)
    assert value == expected


def test_eval_units_and_inverses():
    d = make_root_datum("A1")
    assert eval_expr(d, "th[0]") == unit(d)
    assert eval_expr(d, "T[s1]^-1") == inv_Tw(d, weyl.simple(d, 0))
    assert eval_expr(d, "v^-2") == scalar(d, Laurent.v(-2))
    assert eval_expr(d, "T[s1]^-1*T[s1]") == unit(d)
    assert eval_expr(d, "th[2]^3") == gen_theta(d, (6,))


def test_eval_named_rho():
    d = make_root_datum("B2")
    assert eval_expr(d, "th[rho]") == gen_theta(d, (1, 1))


def test_eval_error_cases():
    d = make_root_datum("A2")
    with pytest.raises(ValueError):
        eval_expr(d, "th[1]")  # arity mismatch
    with pytest.raises(ValueError):
        eval_expr(d, "th[1,0]^-1")  # negative power of a non-T, non-v atom
    with pytest.raises(ValueError):
        eval_expr(d, "(v + 1)^-1")
    with pytest.raises(ValueError):
        eval_expr(d, "T[s3]")


CORPUS = [
    "T[s1]", "T[s2]", "th[1,0]", "th[0,1]", "th[-2,3]", "v", "v^-1", "3",
    "T[s1]*T[s2]", "T[s2]*T[s1]*T[s2]", "T[s1]*th[1,1]", "th[1,0]*T[s1]",
    "T[s1]^-1", "T[s1]^2", "v*T[s1] + v^-1*T[s2]", "th[1,0]*(v - v^-1)",
    "(T[s1] + T[s2])*(T[s1] - T[s2])", "T[s1]*T[s1]*T[s1]",
    "th[rho]*T[s1]^-1", "2*th[0,-1] - 3*v^2", "-T[s1]", "-v + th[1,2]",
    "(v + v^-1)^2", "T[s1]*th[-1,2]*T[s2]", "th[3,-3]^2",
    "v^3*T[s2]^-1*th[1,0]", "(1 + T[s1])^2", "T[s1]*T[s2]*T[s1]",
    "th[1,0] + th[-1,0] + 1", "(T[s1] - v)*(T[s1] + v^-1)",
    "v*v^-1", "0 + T[s1]", "T[s1] - T[s1]", "th[2,2]*th[-2,-2]",
    "(th[1,1] - 1)*(th[1,1] + 1)", "T[s2]^-1*T[s2]",
    "v^2*th[0,1]*T[s1]*T[s2]*T[s1]", "th[-1,-1]*(v^2 - 1)",
    "(T[s1]*T[s2])^2", "1 - v + v^2 - v^3", "th[1,0]*th[0,1]*th[-1,-1]",
    "T[s1]*(T[s2] + v)*(T[s2] - v^-1)", "((v))", "(((T[s1])))",
    "2*3*v", "th[0,0]", "T[s1]^0", "v^0", "(T[s1] + v)^3",
    "th[1,-1]*T[s1]^-1*T[s2]^-1",
]


def test_render_round_trip_corpus():
    d = make_root_datum("A2")
    assert len(CORPUS) >= 50
    for text in CORPUS:
        value = eval_expr(d, text)
        rendered = render(value)
        again = eval_expr(d, rendered)
        assert again == value, text


def test_render_forms():
    d = make_root_datum("A1")
    assert render(hecke.zero(d)) == "0"
    assert render(unit(d)) == "1"
    assert render(mul(gen_T(d, 0), gen_T(d, 0))) == "1 + T[s1]*(v - v^-1)"
    assert render(gen_theta(d, (1,))) == "th[1]"
