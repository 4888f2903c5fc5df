from hypothesis import given, strategies as st
import pytest

from combinatorics.poly import (BivariatePolynomial, PolynomialParseError, UnivariatePolynomial, add, coeff_x,
                                coeff_xq, eval_q1, from_lines, from_x_rows, mul, parse, parse_with_notes, render,
                                shift_x, substitute_x_qx, to_lines)

polynomials = st.dictionaries(
    st.tuples(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=8)),
    st.integers(min_value=1, max_value=40),
    max_size=8,
).map(BivariatePolynomial)


def P(text):
    return parse(text)


@pytest.mark.parametrize(
    'a, b, expected',
    (
        ("1+x", "0", "1+x"),
        ("qx", "x", "x(q+1)"),
        ("1", "1", "2"),
    ),
)
def test_add(a, b, expected):
    assert add(P(a), P(b)) == P(expected)


@pytest.mark.parametrize(
    'a, b, expected',
    (
        ("1+x", "1+qx", "1+x(q+1)+qx^2"),
        ("1+x(q+3)+x^2", "1", "1+x(q+3)+x^2"),
        ("1+x", "1+x", "1+2x+x^2"),
    ),
)
def test_mul(a, b, expected):
    assert mul(P(a), P(b)) == P(expected)


@pytest.mark.parametrize(
    'a, expected',
    (
        ("1+x", "1+qx"),
        ("1+x(q+3)+x^2", "1+x(q^2+3q)+q^2x^2"),
        ("1", "1"),
    ),
)
def test_substitute_x_qx(a, expected):
    assert substitute_x_qx(P(a)) == P(expected)


def test_coefficients(printed):
    assert coeff_x(printed[3], 1) == UnivariatePolynomial([3, 1])
    assert coeff_x(printed[5], 3) == UnivariatePolynomial([10, 10, 5, 1])
    assert coeff_x(printed[4], 5) == UnivariatePolynomial()
    assert coeff_xq(printed[4], 2, 1) == 4
    assert coeff_xq(printed[7], 3, 9) == 1
    assert coeff_xq(printed[3], 0, 5) == 0


def test_eval_q1(printed):
    assert eval_q1(printed[3]) == UnivariatePolynomial([1, 4, 1])
    assert eval_q1(printed[4]) == UnivariatePolynomial([1, 11, 11, 1])
    assert eval_q1(printed[0]) == UnivariatePolynomial([1])


@pytest.mark.parametrize(
    'text',
    (
        "1+x",
        "1+x(q+3)+x^2",
        "0",
    ),
)
def test_render_is_canonical(text):
    assert render(P(text)) == text


def test_render_single_q_term_group():
    assert render(P("1+x(q^2+3q)+q^2x^2")) == "1+x(q^2+3q)+q^2x^2"


def test_parse_accepts_spaces_and_braces():
    assert P("x^2(q^{10} + 4q^9)") == BivariatePolynomial({(2, 10): 1, (2, 9): 4})


def test_strict_parse_rejects_repeats():
    with pytest.raises(PolynomialParseError):
        parse("x(q^6+3q^6)")
    with pytest.raises(PolynomialParseError):
        parse("1+x(q+1) x^2")


def test_lenient_parse_notes():
    poly, notes = parse_with_notes("1+x(q^6+3q^6) x^2")
    assert poly == BivariatePolynomial({(0, 0): 1, (1, 6): 4, (2, 0): 1})
    assert len(notes) == 2


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BivariatePolynomial({(-1, 0): 1})


def test_zero_coefficients_pruned():
    assert BivariatePolynomial({(1, 1): 0}) == BivariatePolynomial()
    assert not BivariatePolynomial({(1, 1): 0})


@given(polynomials)
def test_render_parse(poly):
    assert parse(render(poly)) == poly


@given(polynomials, polynomials, polynomials)
def test_ring_laws(a, b, c):
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(polynomials)
def test_rows_rebuild_polynomial(poly):
    rows = {d: coeff_x(poly, d) for d in range(poly.x_degree + 1)}
    assert from_x_rows(rows) == poly
    assert eval_q1(poly)(1) == poly.mass


@given(polynomials)
def test_shift_and_substitute(poly):
    shifted = shift_x(poly, 2)
    assert shifted.mass == poly.mass
    assert all(coeff_xq(shifted, d + 2, m) == c for (d, m), c in poly.items())
    assert substitute_x_qx(poly).mass == poly.mass


@given(polynomials, polynomials)
def test_substitute_is_a_ring_homomorphism(a, b):
    assert substitute_x_qx(add(a, b)) == add(substitute_x_qx(a), substitute_x_qx(b))
    assert substitute_x_qx(mul(a, b)) == mul(substitute_x_qx(a), substitute_x_qx(b))


def test_lines_form():
    poly = P("1+x(q+3)+x^2")
    assert to_lines(poly) == "0 0 1\n1 0 3\n1 1 1\n2 0 1\n"
    assert from_lines(to_lines(poly)) == poly


def test_univariate():
    a = UnivariatePolynomial([1, 1])
    assert (a * a).coeffs == (1, 2, 1)
    assert a.shift(2).coeffs == (0, 0, 1, 1)
    assert (a * a)(2) == 9
    assert UnivariatePolynomial([1, 3, 7]).render("t", spaced=True) == "1 + 3t + 7t^2"
