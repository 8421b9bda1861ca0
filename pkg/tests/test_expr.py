from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critfilt.errors import ConstantMap, ExprSyntaxError, MultipleVariables
from critfilt.exactnum import Poly
from critfilt.expr import BinOp, Neg, Num, Pos, Pow, Var, parse_expr, to_poly, to_ratfunc, to_ratmap, to_text
from critfilt.ratmap import deg3_family


def test_unclosed_paren_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("(z^")
    assert err.value.position == 3


@pytest.mark.parametrize("bad", ["2z", "z^", "z^-1", "", "z+*1", "(z", "z)", "z^1/2x"])
def test_syntax_errors(bad):
    with pytest.raises(ExprSyntaxError):
        parse_expr(bad)


def test_cubic_family_member():
    assert to_ratmap("(z^3+z^2)/(9*z+1)") == deg3_family(9)
    assert to_ratmap("(z^3+z^2)/(l*z+1)", param="l", value=9) == deg3_family(9)


def test_precedence():
    assert to_poly("-z^2") == Poly([0, 0, -1])
    assert to_poly("(-z)^2") == Poly([0, 0, 1])
    assert to_poly("2-3-4") == Poly([-5])
    assert to_ratfunc("1/2/t") == to_ratfunc("1/(2*t)")


def test_variable_roles():
    with pytest.raises(MultipleVariables):
        to_ratmap("x*y")
    with pytest.raises(MultipleVariables):
        to_ratmap("x*y*w", param="w")
    with pytest.raises(ConstantMap):
        to_ratmap("3/4")
    assert to_ratmap("3/4", allow_constant=True).num.coeff(0) / to_ratmap("3/4", allow_constant=True).den.coeff(0) \
        == Fraction(3, 4)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        to_ratmap("z/(z-z)")


names = st.sampled_from(["z", "t"])
leaves = st.one_of(st.integers(0, 30).map(Num), names.map(Var))


def extend(children):
    return st.one_of(
        st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: BinOp(t[0], t[1], t[2])),
        st.tuples(children, st.integers(0, 4)).map(lambda t: Pow(t[0], t[1])),
        children.map(Neg),
        children.map(Pos),
    )


asts = st.recursive(leaves, extend, max_leaves=12)


@settings(max_examples=200, deadline=None)
@given(asts)
def test_print_parse_round_trip(node):
    assert parse_expr(to_text(node)) == node


@settings(max_examples=200, deadline=None)
@given(asts)
def test_printing_is_stable(node):
    text = to_text(node)
    assert to_text(parse_expr(text)) == text


def test_whitespace_is_ignored():
    assert parse_expr("  ( z ^ 2 + 1 )  ") == parse_expr("z^2+1")
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("z # 2")
    assert err.value.position == 2
