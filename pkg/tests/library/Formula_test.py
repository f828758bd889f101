import pytest
from hypothesis import given, strategies as st

from algebra_workbench import constants as const
from algebra_workbench.errors import AmbiguousResidual, FormulaSyntaxError
from algebra_workbench.library.Formula import (
    Binary,
    BoxN,
    Const,
    Multiple,
    Power,
    Unary,
    Var,
    expand,
    fill_hole,
    print_formula,
    size,
    substitute,
    variables,
)
from algebra_workbench.library.FormulaParser import parse, parse_list, tokenize

atoms = st.one_of(
    st.sampled_from(["p", "q", "x"]).map(Var),
    st.sampled_from([const.UNIT, const.ZERO, const.TOP, const.BOTTOM]).map(Const),
)
formulas = st.recursive(
    atoms,
    lambda children: st.one_of(
        st.tuples(st.sampled_from([const.NEG_BOTTOM, const.NEG_ZERO, const.BOX, const.DIAMOND]), children).map(
            lambda t: Unary(*t)
        ),
        st.tuples(
            st.sampled_from([const.MEET, const.JOIN, const.FUSION, const.ARROW, const.LEFT_RESIDUAL, const.RIGHT_RESIDUAL]),
            children,
            children,
        ).map(lambda t: Binary(*t)),
        st.tuples(children, st.integers(1, 4)).map(lambda t: Power(*t)),
    ),
    max_leaves=8,
)


@given(formulas)
def test_printed_formula_parses_back(formula):
    assert parse(print_formula(formula)) == formula


def test_precedence_tiers():
    assert parse("p * q /\\ r \\/ s") == Binary(
        const.JOIN, Binary(const.MEET, Binary(const.FUSION, Var("p"), Var("q")), Var("r")), Var("s")
    )
    assert parse("~p^2") == Unary(const.NEG_BOTTOM, Power(Var("p"), 2))
    assert parse("(~p)^2") == Power(Unary(const.NEG_BOTTOM, Var("p")), 2)

def test_residuals_associate_to_the_right():
    assert parse("p -> q -> r") == Binary(const.ARROW, Var("p"), Binary(const.ARROW, Var("q"), Var("r")))

def test_mixed_residuals_need_parentheses():
    with pytest.raises(AmbiguousResidual):
        parse("p \\ q / r")
    assert parse("p \\ (q / r)").right == Binary(const.RIGHT_RESIDUAL, Var("q"), Var("r"))

def test_iterated_modalities_and_sums():
    assert parse("[]_2 p") == BoxN(2, Var("p"))
    assert parse("3.p") == Multiple(3, Var("p"))
    assert parse("[]p") == Unary(const.BOX, Var("p"))

def test_hole_after_box_is_a_variable():
    assert parse("~[]~[]_") == Unary(const.NEG_BOTTOM, Unary(const.BOX, Unary(const.NEG_BOTTOM, Unary(const.BOX, Var("_")))))
    assert parse("~[]_1 ~[]_1 _") == Unary(const.NEG_BOTTOM, BoxN(1, Unary(const.NEG_BOTTOM, BoxN(1, Var("_")))))

def test_constants_and_bare_numbers():
    assert parse("T \\/ B") == Binary(const.JOIN, Const(const.TOP), Const(const.BOTTOM))
    with pytest.raises(FormulaSyntaxError):
        parse("2")

@pytest.mark.parametrize("text", ["", "p /\\", "(p", "p q", "0.p"])
def test_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse(text)

def test_tokenize_ends_with_end_token():
    assert tokenize("p")[-1].kind == "end"

def test_parse_list():
    assert parse_list("") == ()
    assert parse_list("p; ~q") == (Var("p"), Unary(const.NEG_BOTTOM, Var("q")))


def test_expand_derived_connectives():
    assert expand(parse("~p")) == Binary(const.LEFT_RESIDUAL, Var("p"), Const(const.BOTTOM))
    assert expand(parse("!p")) == Binary(const.LEFT_RESIDUAL, Var("p"), Const(const.ZERO))
    assert expand(parse("p -> q")) == Binary(const.LEFT_RESIDUAL, Var("p"), Var("q"))
    assert expand(Power(Var("p"), 3)) == Binary(
        const.FUSION, Binary(const.FUSION, Var("p"), Var("p")), Var("p")
    )
    assert expand(Power(Var("p"), 0)) == Const(const.UNIT)
    assert expand(BoxN(2, Var("p"))) == Binary(
        const.MEET,
        Binary(const.MEET, Var("p"), Unary(const.BOX, Var("p"))),
        Unary(const.BOX, Unary(const.BOX, Var("p"))),
    )
    assert expand(BoxN(0, Var("p"))) == Var("p")

def test_substitution_and_holes():
    scheme = parse("~~_")
    assert fill_hole(scheme, parse("p \\/ q")) == parse("~~(p \\/ q)")
    assert substitute(parse("p * q"), {"q": Var("r")}) == parse("p * r")
    assert variables(parse("q /\\ p /\\ q")) == ("p", "q")

def test_size_counts_nodes():
    assert size(parse("p")) == 1
    assert size(parse("p /\\ ~q")) == 4
