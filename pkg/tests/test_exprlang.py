import pytest
from hypothesis import given, settings

from conftest import nonrel_exprs, rel_exprs
from qlorentz.algebras import nonrelativistic_algebra, relativistic_algebra
from qlorentz.errors import ExprSyntaxError
from qlorentz.exprlang import parse, render, render_scalar
from qlorentz.identities import builtin_expressions
from qlorentz.opalg import OpExpr, normalize
from qlorentz.scalar import HBAR, I, Scalar

REL = relativistic_algebra()
NONREL = nonrelativistic_algebra()


def test_comm_x_p_parses_to_i_hbar():
    assert normalize(parse("comm(x,p)", REL), REL) == OpExpr.scalar(I * HBAR, REL.names)


def test_boosted_x_text():
    e = parse("(H*x + x*H - c^2*(p*t + t*p)) / (2*m*c^2)", REL)
    assert e == builtin_expressions()["xprime3"]
    assert len(e.terms) == 4


@pytest.mark.parametrize(
    "text, offset",
    [
        ("x^-1", 0),
        ("x +", 3),
        ("(x*p", 4),
        ("x $ p", 2),
        ("q*x", 0),
        ("x/p", 2),
        ("x^y", 2),
        ("x/(hbar + c)", 2),
    ],
)
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text, REL)
    assert info.value.offset == offset


def test_generator_set_depends_on_algebra():
    with pytest.raises(ExprSyntaxError, match="unknown generator 'H'"):
        parse("H*x", NONREL)
    assert parse("p^-2", NONREL).terms == {(("p", -2),): Scalar.number(1)}


@pytest.mark.parametrize(
    "text, expected",
    [
        ("p*x", "x*p - i*hbar"),
        ("x - x", "0"),
        ("comm(H^2,x)", "-2*i*hbar*c^2*p"),
        ("comm(H,x)", "-i*hbar*c^2*p*H^-1"),
        ("(1 + i)*x*hbar + (hbar + c)*p", "(1 + i)*hbar*x + (hbar + c)*p"),
        ("-3/2*m^-1", "-3/2*m^-1"),
        ("(2*hbar)^-2", "1/4*hbar^-2"),
        ("+x^0", "1"),
    ],
)
def test_render(text, expected):
    assert render(normalize(parse(text, REL), REL)) == expected


def test_render_scalar():
    assert render_scalar(Scalar()) == "0"
    assert render_scalar(Scalar.number(2, -3)) == "(2 - 3*i)"


def test_decimal_literals_are_exact():
    assert parse("0.25*x", REL) == parse("x/4", REL)


@settings(max_examples=100, deadline=None)
@given(rel_exprs)
def test_round_trip_rel(e):
    n = normalize(e, REL)
    text = render(n)
    assert parse(text, REL) == n
    assert render(parse(text, REL)) == text


@settings(max_examples=60, deadline=None)
@given(nonrel_exprs)
def test_round_trip_nonrel(e):
    n = normalize(e, NONREL)
    assert parse(render(n), NONREL) == n
